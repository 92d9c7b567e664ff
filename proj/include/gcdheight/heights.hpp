#pragma once

#include "gcdheight/ideal.hpp"
#include "gcdheight/rational.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace gcdheight {

/// Rational point of P^n in canonical form: coprime integer coordinates,
/// not all zero, first nonzero coordinate positive.
class ProjPoint {
public:
    /// Validates canonical form; use normalize_point for raw input.
    explicit ProjPoint(std::vector<BigInt> coords);

    const std::vector<BigInt>& coords() const noexcept { return coords_; }
    int n() const noexcept { return static_cast<int>(coords_.size()) - 1; }

    /// Colon-separated coordinates, e.g. "5:3:1".
    std::string to_string() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) = default;
    /// Lexicographic on coordinates after the dimension.
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);

private:
    std::vector<BigInt> coords_;
};

ProjPoint normalize_point(std::span<const Rat> raw);
ProjPoint normalize_point(std::span<const long> raw);

/// log max |x_i|.
double weil_height(const ProjPoint& x);

struct HeightBreakdown {
    double weil = 0;
    double gcd_finite = 0;
    double gcd_arch = 0;
    double gcd_total = 0;
    /// True iff every generator vanishes at x (x lies on Y); the gcd parts
    /// are then +inf.
    bool vanishing = false;
};

/// Generalized GCD height of x with respect to the subscheme cut out by the
/// generators f_1..f_k of `ideal`, as a sum of local heights:
///   finite:   sum_p min_i v_p(f_i(x)) log p
///   archimedean: max(0, min_i (deg f_i * log|x|_inf - log|f_i(x)|))
/// Generators vanishing at x are skipped in both minima. Generators with
/// rational coefficients are first scaled by their coefficient denominator lcm.
HeightBreakdown gcd_height(const ProjPoint& x, const Ideal& ideal);

/// Generators prepared for repeated evaluation at integer points.
class IntegerGenerators {
public:
    explicit IntegerGenerators(const Ideal& ideal);

    std::size_t size() const noexcept { return forms_.size(); }
    int degree(std::size_t i) const { return forms_[i].degree; }
    /// Values f_i(x) in generator order.
    void evaluate(const ProjPoint& x, std::vector<BigInt>& values) const;

private:
    struct Form {
        std::vector<std::pair<std::vector<int>, BigInt>> terms;
        int degree;
    };
    std::vector<Form> forms_;
};

HeightBreakdown gcd_height(const ProjPoint& x, const IntegerGenerators& generators);

}  // namespace gcdheight
