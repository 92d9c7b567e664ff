#pragma once

#include "gcdheight/matrix.hpp"
#include "gcdheight/poly.hpp"

#include <cstddef>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gcdheight {

/// Homogeneous ideal of Q[x0..xn]. Generators are nonzero and homogeneous;
/// the Groebner basis is computed on first use and shared between copies.
class Ideal {
public:
    /// Zero polynomials are dropped; a non-homogeneous generator or a
    /// variable-count mismatch throws Error{Domain}.
    Ideal(int nvars, std::vector<Poly> generators);

    int nvars() const noexcept { return nvars_; }
    /// Dimension of the ambient projective space.
    int n() const noexcept { return nvars_ - 1; }
    const std::vector<Poly>& generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }
    int max_generator_degree() const;
    int min_generator_degree() const;

    /// Reduced Groebner basis (grevlex), computed once.
    const std::vector<Poly>& groebner() const;

private:
    struct Cache {
        std::once_flag once;
        std::vector<Poly> basis;
    };

    int nvars_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Numeric invariants of Y in P^n used by the height bound.
struct GeomProfile {
    int n = 0;
    int d = 0;
    int c = 0;
    BigInt degY = 0;
    int eY = 1;
    /// Hilbert polynomial, ascending powers of m.
    std::vector<Rat> hilbert_polynomial;
    int window_start = 0;
};

/// Throws Error{InvalidProfile} unless c = n - d >= 2, degY >= 1, eY = 1.
void validate(const GeomProfile& profile);

/// Generators: all products of r generators (multisets), deduplicated by
/// normal-form text, in a deterministic order.
Ideal ideal_power(const Ideal& ideal, int r);

/// Degree-m slice of an ideal: the monomial basis of degree m and an echelon
/// form of the products g * mu (g a generator, deg mu = m - deg g), with
/// vector entries indexed by position in `monomials`.
struct GradedPiece {
    int degree = 0;
    std::vector<Monomial> monomials;
    SparseEchelon echelon;

    Poly to_poly(const SparseEchelon::Vec& v, int nvars) const;
};

GradedPiece graded_piece(const Ideal& ideal, int m);

/// The spanning matrix of the degree-m slice as a dense ExactMatrix:
/// rows are monomials of degree m, columns are the products g * mu.
ExactMatrix graded_piece_matrix(const Ideal& ideal, int m);

std::size_t graded_piece_dim(const Ideal& ideal, int m);

/// binomial(n + m, n) - graded_piece_dim(ideal, m).
std::size_t quotient_dim(const Ideal& ideal, int m);

/// Buchberger's algorithm with the coprime and chain criteria. Returns the
/// reduced, monic basis sorted by decreasing leading monomial.
std::vector<Poly> compute_groebner(const std::vector<Poly>& generators);

/// Fully reduced remainder of f against `basis`.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);

bool membership(const Poly& f, const Ideal& ideal);

/// Number of degree-m monomials not divisible by a leading monomial of the
/// Groebner basis. Equals quotient_dim by an independent route.
std::size_t standard_monomial_count(const Ideal& ideal, int m);

struct ProfileOptions {
    std::optional<int> window_start;
    int r_context = 1;
};

/// Interpolates the Hilbert polynomial of the quotient over a stabilization
/// window [m0, m0 + n] and requires the window starting at m0 + 1 to give the
/// same polynomial. Default m0 = max generator degree * r_context + n + 1.
/// Throws Error{EmptySubscheme} or Error{WindowInstability}.
GeomProfile hilbert_profile(const Ideal& ideal, const ProfileOptions& options = {});

/// Ideal file: a line "nvars = <k>" followed by one generator per line;
/// '#' starts a comment.
Ideal parse_ideal(std::string_view text);
Ideal read_ideal_file(const std::filesystem::path& path);
std::string to_ideal_text(const Ideal& ideal);

}  // namespace gcdheight
