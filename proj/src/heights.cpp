#include "gcdheight/heights.hpp"

#include "gcdheight/arith.hpp"
#include "gcdheight/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gcdheight {

ProjPoint::ProjPoint(std::vector<BigInt> coords) : coords_(std::move(coords)) {
    auto nz = std::find_if(coords_.begin(), coords_.end(), [](const BigInt& v) { return v != 0; });
    if (nz == coords_.end()) throw Error(ErrorKind::Domain, "ProjPoint: all coordinates are zero");
    if (*nz < 0) throw Error(ErrorKind::Domain, "ProjPoint: first nonzero coordinate must be positive");
    BigInt g = 0;
    for (const auto& v : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g != 1) throw Error(ErrorKind::Domain, "ProjPoint: coordinates are not coprime");
}

std::string ProjPoint::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ':';
        out += coords_[i].get_str();
    }
    return out;
}

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    if (auto c = a.coords_.size() <=> b.coords_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

ProjPoint normalize_point(std::span<const Rat> raw) {
    if (std::all_of(raw.begin(), raw.end(), [](const Rat& q) { return q == 0; }))
        throw Error(ErrorKind::Domain, "normalize_point: zero vector is not a projective point");
    BigInt den = 1;
    for (const auto& q : raw) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<BigInt> ints;
    ints.reserve(raw.size());
    BigInt g = 0;
    for (const auto& q : raw) {
        ints.push_back(q.get_num() * (den / q.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    auto nz = std::find_if(ints.begin(), ints.end(), [](const BigInt& v) { return v != 0; });
    if (*nz < 0) g = -g;
    for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return ProjPoint(std::move(ints));
}

ProjPoint normalize_point(std::span<const long> raw) {
    std::vector<Rat> q(raw.begin(), raw.end());
    return normalize_point(std::span<const Rat>(q));
}

double weil_height(const ProjPoint& x) {
    BigInt best = 0;
    for (const auto& v : x.coords())
        if (mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(v);
    return log_abs(best);
}

IntegerGenerators::IntegerGenerators(const Ideal& ideal) {
    for (const auto& g : ideal.generators()) {
        BigInt den = 1;
        for (const auto& [m, c] : g.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        Form f{{}, *g.degree()};
        for (const auto& [m, c] : g.terms()) f.terms.emplace_back(m.exponents(), c.get_num() * (den / c.get_den()));
        forms_.push_back(std::move(f));
    }
}

void IntegerGenerators::evaluate(const ProjPoint& x, std::vector<BigInt>& values) const {
    const auto& xs = x.coords();
    values.resize(forms_.size());
    BigInt term;
    BigInt power;
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        BigInt& acc = values[i];
        acc = 0;
        for (const auto& [exps, c] : forms_[i].terms) {
            term = c;
            for (std::size_t k = 0; k < exps.size(); ++k) {
                if (exps[k] == 0) continue;
                if (exps[k] == 1) {
                    term *= xs[k];
                } else {
                    mpz_pow_ui(power.get_mpz_t(), xs[k].get_mpz_t(), static_cast<unsigned long>(exps[k]));
                    term *= power;
                }
            }
            acc += term;
        }
    }
}

HeightBreakdown gcd_height(const ProjPoint& x, const IntegerGenerators& gens) {
    HeightBreakdown out;
    out.weil = weil_height(x);
    thread_local std::vector<BigInt> values;
    gens.evaluate(x, values);

    BigInt g = 0;
    double arch = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0) continue;  // valuation +inf: ignored by the minima
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), values[i].get_mpz_t());
        arch = std::min(arch, gens.degree(i) * out.weil - log_abs(values[i]));
    }
    if (g == 0) {
        out.vanishing = true;
        out.gcd_finite = out.gcd_arch = out.gcd_total = std::numeric_limits<double>::infinity();
        return out;
    }

    // min_i v_p(f_i(x)) over nonvanishing i; only primes dividing the gcd
    // contribute.
    double finite = 0;
    if (g > 1) {
        for (const auto& factor : factorize(g)) {
            const BigInt& p = factor.first;
            unsigned e = std::numeric_limits<unsigned>::max();
            for (const auto& v : values)
                if (v != 0) e = std::min(e, valuation(v, p));
            finite += static_cast<double>(e) * log_abs(p);
        }
    }
    out.gcd_finite = finite;
    out.gcd_arch = std::max(0.0, arch);
    out.gcd_total = out.gcd_finite + out.gcd_arch;
    return out;
}

HeightBreakdown gcd_height(const ProjPoint& x, const Ideal& ideal) {
    if (ideal.nvars() != static_cast<int>(x.coords().size()))
        throw Error(ErrorKind::Domain, "gcd_height: point and ideal have different dimensions");
    return gcd_height(x, IntegerGenerators(ideal));
}

}  // namespace gcdheight
