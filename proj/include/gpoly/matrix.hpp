#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/poly.hpp"
#include "gpoly/rational.hpp"

namespace gpoly {

/// Permanent-type computations are O(2^n · n); refuse anything above this
/// unless the caller raises the cap explicitly.
inline constexpr std::size_t kDefaultPermanentCap = 20;

/// Dense square matrix of rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;

    explicit RatMatrix(std::size_t n) : n_(n), cells_(n * n) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
        RatMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) {
                throw Error("matrix rows must all have length n");
            }
            for (std::size_t j = 0; j < rows.size(); ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    std::size_t size() const { return n_; }

    Rat& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

    /// Bounds-checked access.
    const Rat& at(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        return (*this)(i, j);
    }

    void check_index(std::size_t i) const {
        if (i >= n_) {
            throw IndexOutOfRange("index " + std::to_string(i) + " out of range for n = " +
                                  std::to_string(n_));
        }
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.n_ == b.n_ && a.cells_ == b.cells_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    std::vector<Rat> cells_;
};

namespace detail {

inline std::vector<std::size_t> canonical_index_set(const std::vector<std::size_t>& indices,
                                                    std::size_t n) {
    std::vector<std::size_t> out = indices;
    for (std::size_t i : out) {
        if (i >= n) {
            throw IndexOutOfRange("index " + std::to_string(i) + " out of range for n = " +
                                  std::to_string(n));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline void require_symmetric(const RatMatrix& m, const char* op) {
    if (!m.is_symmetric()) {
        throw NotSymmetric(std::string(op) + " requires a symmetric matrix");
    }
}

inline void require_within_cap(std::size_t n, std::size_t cap) {
    // 62 is the hard budget of the 64-bit subset enumerator.
    if (n > cap || n > 62) {
        throw DimensionTooLarge("permanent of a " + std::to_string(n) + "x" + std::to_string(n) +
                                " matrix exceeds the cap of " +
                                std::to_string(std::min<std::size_t>(cap, 62)));
    }
}

}  // namespace detail

/// Submatrix with the given rows and columns deleted (set semantics:
/// duplicates collapse). Remaining rows/columns keep their original order.
/// The deletion sets must have equal cardinality so the result stays square.
inline RatMatrix minor_matrix(const RatMatrix& m, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
    const auto del_rows = detail::canonical_index_set(rows, m.size());
    const auto del_cols = detail::canonical_index_set(cols, m.size());
    if (del_rows.size() != del_cols.size()) {
        throw Error("minor requires equally many deleted rows and columns");
    }
    std::vector<std::size_t> keep_rows, keep_cols;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!std::binary_search(del_rows.begin(), del_rows.end(), i)) {
            keep_rows.push_back(i);
        }
        if (!std::binary_search(del_cols.begin(), del_cols.end(), i)) {
            keep_cols.push_back(i);
        }
    }
    RatMatrix out(keep_rows.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i) {
        for (std::size_t j = 0; j < keep_cols.size(); ++j) {
            out(i, j) = m(keep_rows[i], keep_cols[j]);
        }
    }
    return out;
}

/// Symmetric matrix with entries (i,j) and (j,i) replaced by zero.
inline RatMatrix masked(const RatMatrix& m, std::size_t i, std::size_t j) {
    m.check_index(i);
    m.check_index(j);
    detail::require_symmetric(m, "masked");
    RatMatrix out = m;
    out(i, j) = 0;
    out(j, i) = 0;
    return out;
}

/// Exact determinant: rows are scaled to integers, then fraction-free
/// (Bareiss) elimination with row pivoting keeps every division exact.
/// det of the 0x0 matrix is 1 (empty product).
inline Rat det(const RatMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return Rat(1);
    }
    std::vector<Int> b(n * n);
    Int scale = 1;  // det(m) = det(b) / scale
    for (std::size_t i = 0; i < n; ++i) {
        Int row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            row_lcm = lcm(row_lcm, denominator(m(i, j)));
        }
        for (std::size_t j = 0; j < n; ++j) {
            b[i * n + j] = numerator(m(i, j)) * (row_lcm / denominator(m(i, j)));
        }
        scale *= row_lcm;
    }
    Int prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b[k * n + k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && b[pivot * n + k] == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return Rat(0);
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(b[k * n + j], b[pivot * n + j]);
            }
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                b[i * n + j] = (b[i * n + j] * b[k * n + k] - b[i * n + k] * b[k * n + j]) / prev;
            }
        }
        prev = b[k * n + k];
    }
    Int result = b[n * n - 1];
    if (negate) {
        result = -result;
    }
    return make_rat(std::move(result), std::move(scale));
}

/// Exact permanent by Ryser's inclusion-exclusion over column subsets in
/// Gray-code order: each step toggles one column in the running row sums,
/// costing O(n) per subset. Columns are scaled to integers first, so the
/// kernel runs entirely over integers. per of the 0x0 matrix is 1.
inline Rat perm(const RatMatrix& m, std::size_t cap = kDefaultPermanentCap) {
    const std::size_t n = m.size();
    detail::require_within_cap(n, cap);
    if (n == 0) {
        return Rat(1);
    }
    std::vector<Int> b(n * n);
    Int scale = 1;  // per(m) = per(b) / scale
    for (std::size_t j = 0; j < n; ++j) {
        Int col_lcm = 1;
        for (std::size_t i = 0; i < n; ++i) {
            col_lcm = lcm(col_lcm, denominator(m(i, j)));
        }
        for (std::size_t i = 0; i < n; ++i) {
            b[i * n + j] = numerator(m(i, j)) * (col_lcm / denominator(m(i, j)));
        }
        scale *= col_lcm;
    }
    std::vector<Int> row_sum(n);
    Int total = 0;
    Int product;
    const std::uint64_t subsets = std::uint64_t(1) << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const unsigned j = unsigned(std::countr_zero(k));
        const std::uint64_t gray = k ^ (k >> 1);
        if ((gray >> j) & 1) {
            for (std::size_t i = 0; i < n; ++i) {
                row_sum[i] += b[i * n + j];
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                row_sum[i] -= b[i * n + j];
            }
        }
        product = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (row_sum[i] == 0) {
                product = 0;
                break;
            }
            product *= row_sum[i];
        }
        if (std::popcount(gray) & 1) {
            total -= product;
        } else {
            total += product;
        }
    }
    if (n & 1) {
        total = -total;
    }
    return make_rat(std::move(total), std::move(scale));
}

/// det(xI - m) by the Berkowitz iteration: entirely division-free, so it is
/// exact over the rationals as-is. Monic of degree n; the 0x0 matrix gives
/// the constant 1.
inline Poly charpoly(const RatMatrix& m) {
    const std::size_t n = m.size();
    // Descending coefficients of det(xI - leading r x r block).
    std::vector<Rat> coeffs{Rat(1)};
    std::vector<Rat> toeplitz_col, v, w, next;
    for (std::size_t r = 1; r <= n; ++r) {
        // First column of the (r+1) x r Toeplitz operator: 1, -m_rr, then
        // -(row block) . (leading block)^(k-2) . (column block).
        toeplitz_col.assign(r + 1, Rat());
        toeplitz_col[0] = 1;
        toeplitz_col[1] = -m(r - 1, r - 1);
        if (r >= 2) {
            v.assign(r - 1, Rat());
            for (std::size_t i = 0; i + 1 < r; ++i) {
                v[i] = m(i, r - 1);
            }
            for (std::size_t k = 2; k <= r; ++k) {
                Rat dot;
                for (std::size_t i = 0; i + 1 < r; ++i) {
                    dot += m(r - 1, i) * v[i];
                }
                toeplitz_col[k] = -dot;
                if (k < r) {
                    w.assign(r - 1, Rat());
                    for (std::size_t i = 0; i + 1 < r; ++i) {
                        for (std::size_t l = 0; l + 1 < r; ++l) {
                            w[i] += m(i, l) * v[l];
                        }
                    }
                    v.swap(w);
                }
            }
        }
        next.assign(r + 1, Rat());
        for (std::size_t i = 0; i <= r; ++i) {
            const std::size_t j_lo = i > r ? i - r : 0;
            const std::size_t j_hi = std::min(i, r - 1);
            for (std::size_t j = j_lo; j <= j_hi; ++j) {
                next[i] += toeplitz_col[i - j] * coeffs[j];
            }
        }
        coeffs = next;
    }
    std::reverse(coeffs.begin(), coeffs.end());
    return Poly(std::move(coeffs));
}

/// per(xI - m), computed by evaluating the scalar permanent at
/// t = 0, 1, ..., n and interpolating. Monic of degree n.
inline Poly permpoly(const RatMatrix& m, std::size_t cap = kDefaultPermanentCap) {
    const std::size_t n = m.size();
    detail::require_within_cap(n, cap);
    RatMatrix shifted(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            shifted(i, j) = -m(i, j);
        }
    }
    std::vector<std::pair<Rat, Rat>> points;
    points.reserve(n + 1);
    for (std::size_t t = 0; t <= n; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            shifted(i, i) = Rat(t) - m(i, i);
        }
        points.emplace_back(Rat(t), perm(shifted, cap));
    }
    return Poly::interpolate(points);
}

}  // namespace gpoly
