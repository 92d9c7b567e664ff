#pragma once

#include "gcdheight/rational.hpp"

#include <span>
#include <vector>

namespace gcdheight {

/// Coefficients of the unique polynomial of degree < values.size() through
/// (x0, values[0]), (x0 + 1, values[1]), ..., in ascending powers, with
/// trailing zero coefficients removed (the zero polynomial is empty).
std::vector<Rat> interpolate_consecutive(long x0, std::span<const BigInt> values);
std::vector<Rat> interpolate_consecutive(long x0, std::span<const Rat> values);

/// Forward difference table: row k holds the k-th differences.
std::vector<std::vector<BigInt>> forward_differences(std::span<const BigInt> values);
std::vector<std::vector<Rat>> forward_differences(std::span<const Rat> values);

Rat evaluate(std::span<const Rat> coeffs, const Rat& x);

BigInt factorial(long k);

}  // namespace gcdheight
