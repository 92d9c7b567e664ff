#include "gcdheight/interpolation.hpp"

namespace gcdheight {

namespace {

template <typename T>
std::vector<std::vector<T>> differences(std::span<const T> values) {
    std::vector<std::vector<T>> table;
    if (values.empty()) return table;
    table.emplace_back(values.begin(), values.end());
    while (table.back().size() > 1) {
        const auto& prev = table.back();
        std::vector<T> next(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
        table.push_back(std::move(next));
    }
    return table;
}

template <typename T>
std::vector<Rat> newton_interpolate(long x0, std::span<const T> values) {
    auto table = differences(values);
    std::vector<Rat> coeffs(values.size());
    // Newton form: sum_k diff_k(x0) * binom(x - x0, k).
    std::vector<Rat> basis{Rat(1)};  // binom(x - x0, k) in ascending powers
    for (std::size_t k = 0; k < table.size(); ++k) {
        const Rat dk(table[k][0]);
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += basis[i] * dk;
        std::vector<Rat> next(basis.size() + 1);
        const Rat shift = Rat(x0) + Rat(static_cast<long>(k));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] -= basis[i] * shift;
        }
        for (Rat& q : next) q /= static_cast<long>(k + 1);
        basis = std::move(next);
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

}  // namespace

std::vector<std::vector<BigInt>> forward_differences(std::span<const BigInt> values) { return differences(values); }

std::vector<std::vector<Rat>> forward_differences(std::span<const Rat> values) { return differences(values); }

std::vector<Rat> interpolate_consecutive(long x0, std::span<const BigInt> values) {
    return newton_interpolate(x0, values);
}

std::vector<Rat> interpolate_consecutive(long x0, std::span<const Rat> values) {
    return newton_interpolate(x0, values);
}

BigInt factorial(long k) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

Rat evaluate(std::span<const Rat> coeffs, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

}  // namespace gcdheight
