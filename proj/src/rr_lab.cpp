#include "gcdheight/rr_lab.hpp"

#include "gcdheight/error.hpp"
#include "gcdheight/interpolation.hpp"

#include <algorithm>
#include <cmath>

namespace gcdheight {

namespace {

Rat rat_pow(const Rat& base, int e) {
    Rat out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

BigInt colength_linear(int c, int r) {
    if (c < 1 || r < 1) throw Error(ErrorKind::Domain, "colength_linear: need c >= 1 and r >= 1");
    return binomial(r - 1 + c, c);
}

LemmaH0Check lemma_h0(int n, int e) {
    if (n < 1 || e < 1) throw Error(ErrorKind::Domain, "lemma_h0: need n >= 1 and e >= 1");
    LemmaH0Check out;
    out.n = n;
    out.e = e;
    out.h0 = binomial(n + e, n);
    mpz_ui_pow_ui(out.bound.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(n));
    out.bound += n;
    out.holds = out.h0 <= out.bound;
    out.equality = out.h0 == out.bound;
    return out;
}

bool check_lemma_h0(int n, int e) { return lemma_h0(n, e).holds; }

AsymptoticFit check_rr_inequality(const Ideal& ideal, const GeomProfile& profile, int m, int r_max) {
    const int n = ideal.n();
    if (r_max < std::max(4, n + 1))
        throw Error(ErrorKind::Domain, "check_rr_inequality: r_max = " + std::to_string(r_max) +
                                           " is insufficient data; need at least " + std::to_string(std::max(4, n + 1)));
    if (m < 0) throw Error(ErrorKind::Domain, "check_rr_inequality: m must be >= 0");
    if (profile.n != n) throw Error(ErrorKind::InconsistentProfile, "check_rr_inequality: profile is for another P^n");
    const int c = profile.c;
    const int d = profile.d;

    // table[k][r-1] = Q(r, m + k)
    std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(n + 1));
    for (int r = 1; r <= r_max; ++r) {
        Ideal power = ideal_power(ideal, r);
        for (int k = 0; k <= n; ++k)
            table[static_cast<std::size_t>(k)].emplace_back(static_cast<unsigned long>(quotient_dim(power, m + k)));
    }

    // Interpolate in r for each m', then each r-coefficient in m'.
    std::vector<std::vector<Rat>> in_r;
    for (const auto& row : table) in_r.push_back(interpolate_consecutive(1, std::span<const BigInt>(row)));
    std::size_t r_degree = 0;
    for (const auto& p : in_r) r_degree = std::max(r_degree, p.size());
    std::vector<std::vector<Rat>> joint(r_degree);  // joint[a][b]: coefficient of r^a m^b
    for (std::size_t a = 0; a < r_degree; ++a) {
        std::vector<Rat> column;
        for (const auto& p : in_r) column.push_back(a < p.size() ? p[a] : Rat(0));
        joint[a] = interpolate_consecutive(m, std::span<const Rat>(column));
    }

    int top = -1;
    for (std::size_t a = 0; a < joint.size(); ++a)
        for (std::size_t b = 0; b < joint[a].size(); ++b)
            if (joint[a][b] != 0) top = std::max(top, static_cast<int>(a + b));
    if (top < 0) throw Error(ErrorKind::InconsistentProfile, "check_rr_inequality: all dimensions vanish");
    int exponent = -1;
    for (int a = 0; a <= top && exponent < 0; ++a) {
        const auto& coeffs = joint[static_cast<std::size_t>(a)];
        const auto b = static_cast<std::size_t>(top - a);
        if (static_cast<std::size_t>(a) < joint.size() && b < coeffs.size() && coeffs[b] != 0) exponent = a;
    }
    const int m_exponent = top - exponent;
    if (exponent != c || m_exponent != d)
        throw Error(ErrorKind::InconsistentProfile,
                    "check_rr_inequality: fitted growth r^" + std::to_string(exponent) + " m^" +
                        std::to_string(m_exponent) + " disagrees with the profile (c=" + std::to_string(c) +
                        ", d=" + std::to_string(d) + ")");

    AsymptoticFit fit;
    fit.variable = "r";
    fit.exponent = exponent;
    const Rat m_pow = rat_pow(Rat(m), d);
    fit.leading = joint[static_cast<std::size_t>(exponent)][static_cast<std::size_t>(m_exponent)] * m_pow;
    fit.predicted = m_pow * Rat(profile.degY) * profile.eY / Rat(factorial(c));

    const int calibrate_upto = (r_max + 1) / 2;
    bool have_k = false;
    for (int r = 1; r <= r_max; ++r) {
        FitRow row;
        row.x = r;
        row.computed = table[0][static_cast<std::size_t>(r - 1)];
        row.predicted_term = fit.predicted * rat_pow(Rat(r), c);
        row.residual = Rat(row.computed) - row.predicted_term;
        if (r <= calibrate_upto) {
            Rat ratio = row.residual / rat_pow(Rat(r), c - 1);
            if (!have_k || ratio > fit.calibrated_constant) fit.calibrated_constant = ratio;
            have_k = true;
        }
        if (row.predicted_term != 0) {
            double rel = std::fabs(Rat(row.residual / row.predicted_term).get_d());
            fit.max_residual_ratio = std::max(fit.max_residual_ratio, rel);
        }
        fit.rows.push_back(std::move(row));
    }
    for (const auto& row : fit.rows) {
        Rat allowed = row.predicted_term + fit.calibrated_constant * rat_pow(Rat(row.x), c - 1);
        if (Rat(row.computed) > allowed) fit.violation = true;
    }
    return fit;
}

AsymptoticFit rr_growth_in_m(const Ideal& ideal, int r, int m_max) {
    const int n = ideal.n();
    if (r < 1) throw Error(ErrorKind::Domain, "rr_growth_in_m: r must be >= 1");
    if (m_max < 3) throw Error(ErrorKind::Domain, "rr_growth_in_m: m_max must be >= 3");
    const Ideal power = ideal_power(ideal, r);
    const int lo = std::max(0, m_max - (n + 2));

    std::vector<BigInt> values;
    for (int m = lo; m <= m_max; ++m) values.emplace_back(static_cast<unsigned long>(quotient_dim(power, m)));
    auto table = forward_differences(std::span<const BigInt>(values));
    auto all_zero = [](const std::vector<BigInt>& row) {
        return std::all_of(row.begin(), row.end(), [](const BigInt& v) { return v == 0; });
    };

    AsymptoticFit fit;
    fit.variable = "m";
    if (all_zero(table[0])) {
        fit.exponent = 0;
        fit.leading = 0;
    } else {
        int k = -1;
        for (std::size_t j = 1; j < table.size(); ++j) {
            if (all_zero(table[j])) {
                k = static_cast<int>(j) - 1;
                break;
            }
        }
        if (k < 0)
            throw Error(ErrorKind::WindowInstability, "rr_growth_in_m: dimensions over [" + std::to_string(lo) + ", " +
                                                          std::to_string(m_max) +
                                                          "] are not yet polynomial; raise m_max");
        fit.exponent = k;
        fit.leading = Rat(table[static_cast<std::size_t>(k)].back()) / Rat(factorial(k));
    }

    if (ideal.is_zero()) {
        fit.predicted = Rat(1) / Rat(factorial(n));
    } else {
        ProfileOptions options;
        const GeomProfile profile = hilbert_profile(ideal, options);
        fit.predicted = Rat(binomial(r - 1 + profile.c, profile.c) * profile.degY) / Rat(factorial(profile.d));
        if (fit.exponent != profile.d)
            throw Error(ErrorKind::InconsistentProfile, "rr_growth_in_m: fitted exponent " +
                                                            std::to_string(fit.exponent) + " disagrees with dim Y = " +
                                                            std::to_string(profile.d));
    }

    for (int m = lo; m <= m_max; ++m) {
        FitRow row;
        row.x = m;
        row.computed = values[static_cast<std::size_t>(m - lo)];
        row.predicted_term = fit.predicted * rat_pow(Rat(m), fit.exponent);
        row.residual = Rat(row.computed) - row.predicted_term;
        if (row.predicted_term != 0)
            fit.max_residual_ratio =
                std::max(fit.max_residual_ratio, std::fabs(Rat(row.residual / row.predicted_term).get_d()));
        fit.rows.push_back(std::move(row));
    }
    return fit;
}

}  // namespace gcdheight
