#include "gcdheight/matrix.hpp"

#include "gcdheight/error.hpp"

#include <algorithm>

namespace gcdheight {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw Error(ErrorKind::Domain, "ExactMatrix: data size does not match shape");
}

std::vector<Rat> ExactMatrix::multiply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::Domain, "ExactMatrix::multiply: length mismatch");
    std::vector<Rat> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

namespace {

using IntGrid = std::vector<std::vector<BigInt>>;

IntGrid integer_rows(const ExactMatrix& m) {
    IntGrid a(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt den = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& q = m(i, j);
            a[i][j] = q.get_num() * (den / q.get_den());
        }
    }
    return a;
}

struct Echelon {
    IntGrid a;
    std::vector<std::size_t> pivot_cols;
};

// Bareiss elimination with row swaps and column skipping. Entries below the
// processed rows are determinants of submatrices, so each division is exact.
Echelon bareiss(const ExactMatrix& m) {
    Echelon e{integer_rows(m), {}};
    auto& a = e.a;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    BigInt prev = 1;
    std::size_t k = 0;
    for (std::size_t col = 0; col < cols && k < rows; ++col) {
        std::size_t p = k;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[k], a[p]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = a[k][col] * a[i][j] - a[i][col] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[k][col];
        e.pivot_cols.push_back(col);
        ++k;
    }
    return e;
}

void make_primitive(SparseEchelon::Vec& v) {
    BigInt g = 0;
    for (const auto& [idx, c] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& kv : v) mpz_divexact(kv.second.get_mpz_t(), kv.second.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return bareiss(m).pivot_cols.size(); }

std::vector<std::vector<Rat>> nullspace(const ExactMatrix& m) {
    Echelon e = bareiss(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> x(cols);
        x[free] = 1;
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            const std::size_t pc = e.pivot_cols[k];
            Rat s = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (x[j] != 0) s += Rat(e.a[k][j]) * x[j];
            x[pc] = -s / Rat(e.a[k][pc]);
        }
        BigInt den = 1;
        BigInt g = 0;
        for (const Rat& q : x) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
        }
        Rat scale(den, g);
        scale.canonicalize();
        for (Rat& q : x) q *= scale;
        basis.push_back(std::move(x));
    }
    return basis;
}

// ---------------------------------------------------------------------------

void SparseEchelon::reduce_at(Vec& v, std::size_t position, const Vec& row) const {
    // v <- (a/g) v - (b/g) row, where a is row's pivot and b = v[position].
    const BigInt& a = row.front().second;
    const BigInt& b = v[position].second;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    BigInt sa = a / g;
    BigInt sb = b / g;

    Vec out;
    out.reserve(v.size() + row.size());
    std::size_t i = 0;
    std::size_t j = 0;
    BigInt t;
    while (i < v.size() || j < row.size()) {
        if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
            out.emplace_back(v[i].first, sa * v[i].second);
            ++i;
        } else if (i == v.size() || row[j].first < v[i].first) {
            out.emplace_back(row[j].first, -(sb * row[j].second));
            ++j;
        } else {
            t = sa * v[i].second - sb * row[j].second;
            if (t != 0) out.emplace_back(v[i].first, t);
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    v = std::move(out);
}

bool SparseEchelon::insert(Vec v) {
    std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) break;
        reduce_at(v, 0, it->second);
    }
    if (v.empty()) return false;
    make_primitive(v);
    if (v.front().second < 0)
        for (auto& kv : v) kv.second = -kv.second;
    std::size_t pivot = v.front().first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

SparseEchelon::Vec SparseEchelon::fully_reduced(std::size_t pivot) const {
    Vec v = rows_.at(pivot);
    // Eliminating pivot column q only touches indices >= q, so one ascending
    // sweep clears every other pivot column.
    for (auto it = rows_.upper_bound(pivot); it != rows_.end(); ++it) {
        auto pos = std::lower_bound(v.begin(), v.end(), it->first,
                                    [](const auto& kv, std::size_t idx) { return kv.first < idx; });
        if (pos == v.end() || pos->first != it->first) continue;
        reduce_at(v, static_cast<std::size_t>(pos - v.begin()), it->second);
    }
    if (!v.empty() && v.front().second < 0)
        for (auto& kv : v) kv.second = -kv.second;
    return v;
}

std::size_t rank_sparse(const ExactMatrix& m) {
    SparseEchelon ech;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt den = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
        SparseEchelon::Vec v;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) v.emplace_back(j, m(i, j).get_num() * (den / m(i, j).get_den()));
        ech.insert(std::move(v));
    }
    return ech.rank();
}

}  // namespace gcdheight
