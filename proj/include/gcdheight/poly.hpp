#pragma once

#include "gcdheight/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gcdheight {

/// Exponent vector of a monomial in the homogeneous coordinates x0..x{n}.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int nvars) { return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0)); }
    static Monomial variable(int nvars, int index);

    int nvars() const noexcept { return static_cast<int>(exps_.size()); }
    int degree() const noexcept { return degree_; }
    int operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const noexcept { return exps_; }

    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient; requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Graded reverse lexicographic order with x0 > x1 > ... > xn.
/// Returns -1, 0 or 1.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/// Multivariate polynomial over Q in a fixed number of variables. Terms are
/// kept sorted by decreasing grevlex order, so the first term is the leading
/// term. Every stored coefficient is nonzero; the zero polynomial has no terms.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrevlexGreater>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}
    Poly(int nvars, TermMap terms);

    static Poly constant(int nvars, const Rat& c);
    static Poly monomial(const Monomial& m, const Rat& c = 1);
    static Poly variable(int nvars, int index) { return monomial(Monomial::variable(nvars, index)); }

    int nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    /// Maximal total degree; nullopt for the zero polynomial.
    std::optional<int> degree() const;
    /// The zero polynomial counts as homogeneous of every degree.
    bool is_homogeneous() const;
    bool is_homogeneous_of(int degree) const;

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rat& leading_coefficient() const { return terms_.begin()->second; }
    Rat coefficient(const Monomial& m) const;

    /// Scaled to leading coefficient 1.
    Poly monic() const;
    /// Scaled to coprime integer coefficients with positive leading coefficient.
    Poly primitive() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rat& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);

    /// this - c * mono * other, in place.
    void sub_mul(const Rat& c, const Monomial& mono, const Poly& other);
    Poly mul_term(const Rat& c, const Monomial& mono) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

private:
    void add_term(const Monomial& m, const Rat& c);

    int nvars_;
    TermMap terms_;
};

/// Parses an expression in x0..x{nvars-1} with integer or rational (p/q)
/// literals, + - * ^ and parentheses, and expands it to normal form.
/// Throws SyntaxError (with position) or Error{Domain} for variables out of
/// range.
Poly parse_poly(std::string_view text, int nvars);

/// Normal-form text in parse_poly syntax, terms in decreasing grevlex order.
/// parse_poly(to_string(f), f.nvars()) == f.
std::string to_string(const Poly& f);

Rat eval_poly(const Poly& f, std::span<const BigInt> coords);
Rat eval_poly(const Poly& f, std::span<const long> coords);

/// All monomials of the given total degree, in decreasing grevlex order.
std::vector<Monomial> graded_monomials(int nvars, int degree);

}  // namespace gcdheight
