#include "support.hpp"

#include "gcdheight/error.hpp"
#include "gcdheight/interpolation.hpp"
#include "gcdheight/rational.hpp"
#include "gcdheight/rr_lab.hpp"

#include <doctest.h>

using namespace testing_support;

namespace {

// Monomials of degree m whose degree in the first c variables is below r.
BigInt linear_oracle(int n, int c, int r, int m) {
    const int d = n - c;
    BigInt total = 0;
    for (int j = 0; j < r && j <= m; ++j) total += binomial(j + c - 1, c - 1) * binomial(m - j + d, d);
    return total;
}

}  // namespace

TEST_CASE("colength_linear") {
    CHECK(colength_linear(2, 3) == 6);
    CHECK(colength_linear(1, 5) == 5);
    CHECK(colength_linear(3, 1) == 1);
    for (int c = 1; c <= 4; ++c)
        for (int r = 1; r <= 50; ++r) {
            // count monomials of degree < r in c variables directly
            BigInt count = 0;
            for (int k = 0; k < r; ++k) count += static_cast<unsigned long>(graded_monomials(c, k).size());
            CHECK(colength_linear(c, r) == count);
            BigInt rc;
            mpz_ui_pow_ui(rc.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(c));
            Rat lead = Rat(rc) / Rat(factorial(c));
            BigInt rc1;
            mpz_ui_pow_ui(rc1.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(c - 1));
            CHECK(abs(Rat(colength_linear(c, r)) - lead) <= Rat(c * rc1));
        }
}

TEST_CASE("lemma h0 grid") {
    for (int n = 1; n <= 6; ++n)
        for (int e = 1; e <= 20; ++e) {
            auto chk = lemma_h0(n, e);
            CHECK(chk.holds);
            CHECK(chk.h0 == binomial(n + e, n));
            CHECK(check_lemma_h0(n, e));
        }
    CHECK(lemma_h0(1, 7).equality);
    CHECK(lemma_h0(2, 1).equality);
    CHECK_FALSE(lemma_h0(3, 2).equality);
    CHECK(lemma_h0(3, 2).h0 == 10);
    CHECK(lemma_h0(3, 2).bound == 11);
}

TEST_CASE("linear subvarieties match the combinatorial oracle") {
    for (int n = 2; n <= 4; ++n)
        for (int c = 2; c <= std::min(3, n); ++c) {
            Ideal y = coordinate_subspace(n, c);
            for (int r = 1; r <= 5; ++r) {
                Ideal power = ideal_power(y, r);
                for (int m = 0; m <= 10; ++m)
                    CHECK(BigInt(static_cast<unsigned long>(quotient_dim(power, m))) == linear_oracle(n, c, r, m));
            }
        }
}

TEST_CASE("check_rr_inequality examples") {
    Ideal pt = I(3, {"x0", "x1"});
    auto fit = check_rr_inequality(pt, hilbert_profile(pt), 10, 6);
    REQUIRE(fit.rows.size() == 6);
    std::vector<long> expect{1, 3, 6, 10, 15, 21};
    for (std::size_t i = 0; i < 6; ++i) CHECK(fit.rows[i].computed == expect[i]);
    CHECK(fit.exponent == 2);
    CHECK(fit.leading == Rat(1, 2));
    CHECK(fit.predicted == Rat(1, 2));
    CHECK_FALSE(fit.violation);

    Ideal line = I(4, {"x0", "x1"});
    fit = check_rr_inequality(line, hilbert_profile(line), 8, 4);
    CHECK(fit.exponent == 2);
    CHECK(fit.leading == 4);
    CHECK(fit.predicted == 4);

    try {
        check_rr_inequality(pt, hilbert_profile(pt), 10, 1);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
}

TEST_CASE("no violation on the linear suite") {
    for (int n = 2; n <= 4; ++n)
        for (int c = 2; c <= std::min(3, n); ++c) {
            Ideal y = coordinate_subspace(n, c);
            const int r_max = std::max(4, n + 1);
            auto fit = check_rr_inequality(y, hilbert_profile(y), r_max + n, r_max);
            CHECK_FALSE(fit.violation);
            CHECK(fit.exponent == c);
        }
}

TEST_CASE("rr_growth_in_m examples") {
    auto fit = rr_growth_in_m(Ideal(3, {}), 1, 8);
    CHECK(fit.exponent == 2);
    CHECK(fit.leading == Rat(1, 2));
    CHECK(fit.predicted == Rat(1, 2));

    fit = rr_growth_in_m(twisted_cubic(), 1, 9);
    CHECK(fit.exponent == 1);
    CHECK(fit.leading == 3);
    CHECK(fit.predicted == 3);

    fit = rr_growth_in_m(I(3, {"x0", "x1"}), 2, 9);
    CHECK(fit.exponent == 0);
    CHECK(fit.leading == 3);
    CHECK(fit.predicted == 3);
}

TEST_CASE("interpolation helpers") {
    std::vector<BigInt> sq{BigInt(1), BigInt(4), BigInt(9), BigInt(16)};
    CHECK(interpolate_consecutive(1, std::span<const BigInt>(sq)) == std::vector<Rat>{0, 0, 1});
    auto diffs = forward_differences(std::span<const BigInt>(sq));
    CHECK(diffs[2][0] == 2);
    CHECK(diffs[3][0] == 0);
    std::vector<Rat> c{1, 3};
    CHECK(evaluate(std::span<const Rat>(c), Rat(2)) == 7);
    CHECK(factorial(5) == 120);
}
