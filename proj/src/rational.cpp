#include "gcdheight/rational.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace gcdheight {

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt binomial(long top, long bottom) {
    if (bottom < 0 || top < 0 || bottom > top) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
    return out;
}

double log_abs(const BigInt& z) {
    if (z == 0) return -std::numeric_limits<double>::infinity();
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
    return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

}  // namespace gcdheight
