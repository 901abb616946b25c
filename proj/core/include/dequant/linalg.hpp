#ifndef DEQUANT_LINALG_HPP
#define DEQUANT_LINALG_HPP

#include "dequant/gaussian.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace dequant {

inline bool scalar_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool scalar_is_zero(const Gaussian& g) { return g.is_zero(); }
inline Rational scalar_inverse(const Rational& q) { return Rational(1) / q; }
inline Gaussian scalar_inverse(const Gaussian& g) { return g.inverse(); }

template <class K>
using Matrix = std::vector<std::vector<K>>;

// In-place reduced row echelon form; returns the pivot columns.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && scalar_is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        K inv = scalar_inverse(m[r][c]);
        for (auto& x : m[r]) x *= inv;
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || scalar_is_zero(m[q][c])) continue;
            K f = m[q][c];
            for (std::size_t k = c; k < cols; ++k) m[q][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
    return rref(m).size();
}

// Basis of the right nullspace {x : m x = 0}; `cols` is needed when m has no rows.
template <class K>
Matrix<K> nullspace(Matrix<K> m, std::size_t cols) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix<K> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(cols, K(0));
        v[free] = K(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves m x = b; nullopt when inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, const std::vector<K>& b) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    Matrix<K> aug = m;
    for (std::size_t r = 0; r < rows; ++r) aug[r].push_back(b[r]);
    auto pivots = rref(aug);
    std::vector<K> x(cols, K(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
    std::size_t n = m.size();
    Matrix<K> aug = m;
    for (std::size_t r = 0; r < n; ++r) {
        aug[r].resize(2 * n, K(0));
        aug[r][n + r] = K(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
    Matrix<K> inv(n, std::vector<K>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
    return inv;
}

// Incremental column echelon elimination over Q(i) with sparse images.
// Columns are fed in a fixed order; a column that depends on the earlier
// ones yields a kernel vector whose last (highest) column has coefficient 1.
class SparseKernel {
public:
    using Key = std::vector<std::int64_t>;
    using Vec = std::map<Key, Gaussian>;
    using Combination = std::map<std::size_t, Gaussian>;

    std::optional<Combination> add_column(std::size_t column, Vec image);
    std::size_t rank() const { return basis_.size(); }
    // Membership test against the span of all images seen so far.
    bool in_span(Vec image) const;

private:
    struct Row {
        Vec v;
        Combination comb;
    };
    std::vector<Row> basis_;
    std::map<Key, std::size_t> pivot_;

    void reduce(Vec& v, Combination* comb) const;
};

}  // namespace dequant

#endif
