#pragma once

#include "gcdheight/ideal.hpp"
#include "gcdheight/poly.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace gcdheight;

inline Poly P(const std::string& text, int nvars) { return parse_poly(text, nvars); }

inline Ideal I(int nvars, std::initializer_list<const char*> gens) {
    std::vector<Poly> g;
    for (const char* s : gens) g.push_back(parse_poly(s, nvars));
    return Ideal(nvars, std::move(g));
}

// Random homogeneous form with small integer coefficients.
inline Poly random_form(std::mt19937_64& rng, int nvars, int degree, int max_terms = 3) {
    auto monos = graded_monomials(nvars, degree);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    Poly f(nvars);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    for (int k = nterms(rng); k > 0; --k) f += Poly::monomial(monos[pick(rng)], coef(rng));
    return f;
}

// The ideal of the coordinate subspace {x0 = ... = x_{c-1} = 0} in P^n.
inline Ideal coordinate_subspace(int n, int c) {
    std::vector<Poly> g;
    for (int i = 0; i < c; ++i) g.push_back(Poly::variable(n + 1, i));
    return Ideal(n + 1, std::move(g));
}

inline Ideal twisted_cubic() { return I(4, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}); }

}  // namespace testing_support
