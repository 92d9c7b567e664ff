#include "support.hpp"

#include "gcdheight/error.hpp"
#include "gcdheight/heights.hpp"
#include "gcdheight/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

using namespace testing_support;

namespace {

ProjPoint pt(std::vector<long> raw) { return normalize_point(std::span<const long>(raw)); }

Ideal diag() { return I(3, {"x0 - x1", "x1 - x2"}); }

// Direct oracle for the finite part: log of the gcd of the nonzero values
// equals the sum over primes of min valuation times log p.
double finite_oracle(const std::vector<BigInt>& values) {
    BigInt g = 0;
    for (const BigInt& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g == 0 ? 0.0 : log_abs(g);
}

}  // namespace

TEST_CASE("normalize_point") {
    CHECK(pt({4, 2, 6}).to_string() == "2:1:3");
    CHECK(pt({-1, 0}).to_string() == "1:0");
    CHECK(pt({0, -6, 4}).to_string() == "0:3:-2");
    std::vector<Rat> q{Rat(1, 2), Rat(1, 3)};
    CHECK(normalize_point(std::span<const Rat>(q)).to_string() == "3:2");
    CHECK(pt({3, 9}) == normalize_point(std::span<const long>(std::vector<long>{1, 3})));
    CHECK_THROWS_AS(pt({0, 0}), Error);
    CHECK_THROWS_AS(ProjPoint({BigInt(2), BigInt(4)}), Error);
    CHECK_THROWS_AS(ProjPoint({BigInt(-1), BigInt(4)}), Error);
}

TEST_CASE("weil height") {
    CHECK(weil_height(pt({2, 1, 3})) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK(weil_height(pt({1, 0, 0})) == 0.0);
    CHECK(weil_height(pt({5, 3})) == doctest::Approx(std::log(5.0)).epsilon(1e-14));
}

TEST_CASE("gcd height examples") {
    auto h = gcd_height(pt({5, 3, 1}), diag());
    CHECK(h.gcd_finite == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    h = gcd_height(pt({1, 1, 2}), diag());
    CHECK(h.gcd_finite == 0.0);
    CHECK_FALSE(h.vanishing);
    h = gcd_height(pt({1, 1, 1}), diag());
    CHECK(h.vanishing);
    CHECK(h.gcd_total == std::numeric_limits<double>::infinity());
}

TEST_CASE("archimedean part") {
    // x = (5,3,1): f = (2, 2), log 5 - log 2 > 0
    auto h = gcd_height(pt({5, 3, 1}), I(3, {"x0 - x1", "x1 - x2"}));
    CHECK(h.gcd_arch == doctest::Approx(std::log(2.5)).epsilon(1e-14));
    CHECK(h.gcd_total == doctest::Approx(h.gcd_finite + h.gcd_arch));
    // x = (100, 99, 98): values (1, 1), archimedean log 100
    h = gcd_height(pt({100, 99, 98}), diag());
    CHECK(h.gcd_arch == doctest::Approx(std::log(100.0)).epsilon(1e-14));
    // far from Y: clipped to 0
    h = gcd_height(pt({1, 0, 0}), diag());
    CHECK(h.gcd_arch == 0.0);
}

TEST_CASE("random invariances and bounds") {
    std::mt19937_64 rng(41);
    Ideal cubic = twisted_cubic();
    for (int t = 0; t < 200; ++t) {
        const bool use_cubic = t % 2 == 0;
        const Ideal& ideal = use_cubic ? cubic : diag();
        std::vector<long> raw(static_cast<std::size_t>(ideal.nvars()));
        for (auto& x : raw) x = static_cast<long>(rng() % 41) - 20;
        if (std::all_of(raw.begin(), raw.end(), [](long x) { return x == 0; })) raw[0] = 1;
        const ProjPoint x = pt(raw);
        const long lambda = static_cast<long>(rng() % 9) + 2;
        std::vector<Rat> scaled;
        for (long v : raw) scaled.emplace_back(v * (t % 4 == 1 ? -lambda : lambda), 7);
        const ProjPoint y = normalize_point(std::span<const Rat>(scaled));
        CHECK(x == y);
        CHECK(weil_height(x) == weil_height(y));

        auto base = gcd_height(x, ideal);
        std::vector<Poly> perm = ideal.generators();
        std::rotate(perm.begin(), perm.begin() + 1, perm.end());
        auto permuted = gcd_height(x, Ideal(ideal.nvars(), perm));
        CHECK(base.vanishing == permuted.vanishing);
        if (base.vanishing) continue;
        CHECK(base.gcd_finite == permuted.gcd_finite);
        CHECK(base.gcd_arch == permuted.gcd_arch);
        CHECK(base.gcd_finite >= 0.0);
        CHECK(base.gcd_arch >= 0.0);

        std::vector<BigInt> values;
        for (const Poly& g : ideal.generators()) {
            Rat v = eval_poly(g, x.coords());
            if (v != 0) values.push_back(v.get_num());
        }
        CHECK(base.gcd_finite == doctest::Approx(finite_oracle(values)).epsilon(1e-12));

        std::vector<Poly> scaled_gens = ideal.generators();
        scaled_gens[rng() % scaled_gens.size()] *= Rat(lambda);
        auto after = gcd_height(x, Ideal(ideal.nvars(), scaled_gens));
        CHECK(std::abs(after.gcd_finite - base.gcd_finite) <= std::log(static_cast<double>(lambda)) + 1e-12);
    }
}

TEST_CASE("single generator with squarefree value") {
    // f = x0 at x = (30, 1): gcd_finite = log 30 exactly
    auto h = gcd_height(pt({30, 1}), I(2, {"x0"}));
    CHECK(h.gcd_finite == doctest::Approx(std::log(30.0)).epsilon(1e-14));
}

TEST_CASE("rational generators are scaled by the denominator lcm") {
    auto a = gcd_height(pt({5, 3, 1}), I(3, {"1/2*x0 - 1/2*x1", "x1 - x2"}));
    auto b = gcd_height(pt({5, 3, 1}), diag());
    CHECK(a.gcd_finite == b.gcd_finite);
}
