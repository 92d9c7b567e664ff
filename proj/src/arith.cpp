#include "gcdheight/arith.hpp"

#include "gcdheight/error.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace gcdheight {

namespace {

constexpr unsigned kTrialBound = 1'000'000;

const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<unsigned> out;
        for (unsigned i = 2; i <= kTrialBound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = static_cast<unsigned long>(i) * i; j <= kTrialBound; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned s, unsigned long base) {
    BigInt a = base;
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const BigInt nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == nm1) return true;
    }
    return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
BigInt pollard_brent(const BigInt& n) {
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2;
        BigInt x;
        BigInt ys;
        BigInt q = 1;
        BigInt g = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                BigInt diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_brent(n);
    factor_into(d, out);
    factor_into(BigInt(n / d), out);
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
    static constexpr std::array<unsigned long, 13> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    if (n < 2) return false;
    for (unsigned long p : kBases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    return std::all_of(kBases.begin(), kBases.end(),
                       [&](unsigned long base) { return miller_rabin_round(n, d, s, base); });
}

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
    if (n == 0) throw Error(ErrorKind::Domain, "factorize: zero has no factorization");
    BigInt rest = abs(n);
    std::map<BigInt, unsigned> found;
    for (unsigned p : small_primes()) {
        if (static_cast<unsigned long>(p) * p > rest) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        found[BigInt(p)] = e;
    }
    // After trial division, a cofactor below kTrialBound^2 is 1 or prime.
    if (rest > 1) {
        if (rest < BigInt(kTrialBound) * kTrialBound) ++found[rest];
        else factor_into(rest, found);
    }
    return {found.begin(), found.end()};
}

unsigned valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw Error(ErrorKind::Domain, "valuation: zero has infinite valuation");
    BigInt rest = n;
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace gcdheight
