#pragma once

#include "gcdheight/rational.hpp"

#include <utility>
#include <vector>

namespace gcdheight {

/// Miller-Rabin with the first 13 prime bases: deterministic below
/// 3.3 * 10^24, a strong probable-prime test above.
bool is_probable_prime(const BigInt& n);

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs in
/// increasing prime order. Trial division up to 10^6, then Pollard rho
/// (Brent's cycle detection) on the cofactor.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

/// p-adic valuation of n != 0.
unsigned valuation(const BigInt& n, const BigInt& p);

}  // namespace gcdheight
