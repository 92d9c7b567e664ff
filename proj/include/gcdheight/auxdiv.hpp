#pragma once

#include "gcdheight/ideal.hpp"

#include <optional>
#include <utility>
#include <string>
#include <vector>

namespace gcdheight {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// A degree-m form F in I^r. The hypersurface {F = 0} is an effective divisor
/// D with O(D) = O(m) and multiplicity >= r along Y, so it witnesses the
/// height slope m/r.
struct Certificate {
    int nvars = 0;
    std::vector<std::string> generators;  // ideal of Y, normal-form text
    int m = 0;
    int r = 0;
    Poly F;
    /// Serialized slope [numerator, denominator]; must equal [m, r].
    std::pair<int, int> slope_fraction{0, 0};
    /// Exact decimal text of the bound coefficient, as serialized.
    std::string coefficient;
    std::string created_by = "gcdheight";
    std::string toolkit_version = kToolkitVersion;

    Rat slope() const {
        Rat q(m, r);
        q.canonicalize();
        return q;
    }
    Ideal ideal() const;
};

/// (degY * n! / c!)^(1/c); the radicand is exact. Validates the profile.
double bound_coefficient(const GeomProfile& profile);
/// The exact radicand degY * n! / c!.
BigInt bound_radicand(const GeomProfile& profile);

/// binomial(n + m, n) > quotient_dim(I^r, m): a nonzero degree-m form in I^r
/// exists.
bool dimension_criterion(const Ideal& ideal, int m, int r);

/// The reduced-echelon basis vector of the degree-m slice of I^r with the
/// largest leading monomial, as a primitive integer form; nullopt when the
/// slice is zero.
std::optional<Poly> find_section(const Ideal& ideal, int m, int r);

struct SearchResult {
    Certificate certificate;
    GeomProfile profile;
    double coefficient = 0;
    bool within_epsilon = false;
    /// Minimal m per r (nullopt where none was found within the m budget).
    std::vector<std::optional<int>> minimal_m;
};

/// For r = 1..r_budget, the smallest m <= m_budget passing the dimension
/// criterion; returns the certificate with minimal m/r (ties: smallest r).
/// Throws BudgetExhausted when no cell passes.
SearchResult search_certificate(const Ideal& ideal, double epsilon, int r_budget, int m_budget);

/// Empty when the certificate is valid; otherwise one diagnostic per failed
/// check ("zero form", "degree mismatch", "membership fails", ...).
std::vector<std::string> certificate_diagnostics(const Certificate& cert);
bool verify_certificate(const Certificate& cert);

/// JSON text with the fields nvars, generators, m, r, F, slope [m, r],
/// coefficient, created_by, toolkit_version. Deterministic.
std::string certificate_to_json(const Certificate& cert);
/// Throws Error{Syntax} on malformed JSON or polynomial text.
Certificate certificate_from_json(const std::string& text);

/// Hex SHA-256 of certificate_to_json(cert).
std::string certificate_digest(const Certificate& cert);

}  // namespace gcdheight
