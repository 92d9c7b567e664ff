#pragma once

#include "gcdheight/ideal.hpp"

#include <string>
#include <vector>

namespace gcdheight {

struct FitRow {
    long x = 0;  // r or m
    BigInt computed;
    Rat predicted_term;
    Rat residual;
};

/// Result of fitting the growth of an exact dimension sequence.
struct AsymptoticFit {
    std::string variable;  // "r" or "m"
    int exponent = 0;
    Rat leading;
    Rat predicted;
    double max_residual_ratio = 0;
    Rat calibrated_constant;  // K of the O(r^{c-1}) term (check_rr_inequality only)
    bool violation = false;
    std::vector<FitRow> rows;
};

/// Length of O/I^r at the generic point of a linear subvariety of
/// codimension c: the number of monomials of degree < r in c variables.
BigInt colength_linear(int c, int r);

struct LemmaH0Check {
    int n = 0;
    int e = 0;
    BigInt h0;     // binomial(n + e, n)
    BigInt bound;  // e^n + n
    bool holds = false;
    bool equality = false;
};

/// h0(P^n, O(e)) <= (O(e)^n) + n, i.e. binomial(n+e, n) <= e^n + n.
LemmaH0Check lemma_h0(int n, int e);
bool check_lemma_h0(int n, int e);

/// Dimension table Q(r, m') = quotient_dim(I^r, m') for r = 1..r_max and
/// m' = m..m+n, fitted exactly as a polynomial in (r, m'). The fitted
/// exponent in r is the smallest r-degree in the top-degree part of that
/// polynomial (the growth in r when m dominates); `leading` is its
/// coefficient times m^d. `predicted` is m^d * degY * eY / c!.
///
/// Rows report Q(r, m) against predicted * r^c. K is calibrated as the
/// maximum of residual / r^(c-1) over the first half of the r range and the
/// whole range is checked against predicted * r^c + K * r^(c-1).
/// Throws Error{Domain} when r_max < max(4, n + 1) and
/// Error{InconsistentProfile} when the fitted bidegree is not (c, d).
AsymptoticFit check_rr_inequality(const Ideal& ideal, const GeomProfile& profile, int m, int r_max);

/// Growth of m -> quotient_dim(I^r, m) over the window [m_max - n - 2, m_max]:
/// the exponent is the degree of the difference table, the leading
/// coefficient the last nonzero difference over its factorial.
/// `predicted` = colength * degY / d!, with colength = binomial(r-1+c, c)
/// (the generic-point length of O/I^r; 1/n! for the zero ideal).
/// Throws Error{InconsistentProfile} when the exponent differs from d and
/// Error{WindowInstability} when the window is not yet polynomial.
AsymptoticFit rr_growth_in_m(const Ideal& ideal, int r, int m_max);

}  // namespace gcdheight
