#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eqmult/diagram.hpp"
#include "eqmult/op_count.hpp"
#include "eqmult/tensor_vector.hpp"

namespace eqmult {

// Antisymmetric pairing on the symplectic basis, 1-based slots: pair p sits at
// slots 2p-1 (unprimed) and 2p (primed). Nonzero only across one pair:
// epsilon(2p-1, 2p) = +1, epsilon(2p, 2p-1) = -1.
inline int epsilon(int a, int b, const GroupSpec& g) {
    require(g.group == Group::symplectic, ErrorCode::group_mismatch,
            "epsilon pairing is defined for Sp(n) only");
    require(a >= 1 && a <= g.n && b >= 1 && b <= g.n, ErrorCode::index_out_of_range,
            "epsilon index outside [1..n]");
    if (a % 2 == 1 && b == a + 1) return 1;
    if (a % 2 == 0 && b == a - 1) return -1;
    return 0;
}

// Signed indicator on n free indices: 0 when the entries repeat, otherwise the
// sign of the permutation sending (1,...,n) to (t_1,...,t_s,b_1,...,b_{n-s}).
inline int chi(std::span<const int> top_free, std::span<const int> bottom_free, int n) {
    require(static_cast<int>(top_free.size() + bottom_free.size()) == n, ErrorCode::size_mismatch,
            "free index count does not equal n");
    std::vector<int> image;
    image.reserve(static_cast<std::size_t>(n));
    image.insert(image.end(), top_free.begin(), top_free.end());
    image.insert(image.end(), bottom_free.begin(), bottom_free.end());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : image) {
        require(v >= 1 && v <= n, ErrorCode::index_out_of_range, "free index outside [1..n]");
        if (seen[static_cast<std::size_t>(v - 1)]) return 0;
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i) {
        for (std::size_t j = i + 1; j < image.size(); ++j) {
            if (image[i] > image[j]) sign = -sign;
        }
    }
    return sign;
}

// Explicit n^l x n^k realization of a spanning set element. Entries are exact
// integers in {-1, 0, +1}; rows are indexed by tuples I in [n]^l, columns by
// J in [n]^k, in the flat layout of TensorVector.
class DenseMatrix {
public:
    DenseMatrix(int n, int top_order, int bottom_order)
        : n_(n),
          top_order_(top_order),
          bottom_order_(bottom_order),
          rows_(pow_int(n, top_order)),
          cols_(pow_int(n, bottom_order)),
          entries_(static_cast<std::size_t>(rows_ * cols_), 0) {}

    int n() const { return n_; }
    int top_order() const { return top_order_; }
    int bottom_order() const { return bottom_order_; }
    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    int& entry(std::int64_t row, std::int64_t col) {
        return entries_[static_cast<std::size_t>(row * cols_ + col)];
    }
    int entry(std::int64_t row, std::int64_t col) const {
        return entries_[static_cast<std::size_t>(row * cols_ + col)];
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    int n_;
    int top_order_;
    int bottom_order_;
    std::int64_t rows_;
    std::int64_t cols_;
    std::vector<int> entries_;
};

namespace detail {

// Value at vertex v of the combined tuple (I, J).
inline int vertex_index(int v, int l, std::span<const int> top, std::span<const int> bottom) {
    return v <= l ? top[static_cast<std::size_t>(v - 1)]
                  : bottom[static_cast<std::size_t>(v - l - 1)];
}

inline int entry_all_blocks_equal(const PartitionDiagram& d, std::span<const int> top,
                                  std::span<const int> bottom) {
    for (const auto& block : d.blocks()) {
        const int first = vertex_index(block.front(), d.top_count(), top, bottom);
        for (int v : block) {
            if (vertex_index(v, d.top_count(), top, bottom) != first) return 0;
        }
    }
    return 1;
}

inline int entry_symplectic(const GroupSpec& g, const PartitionDiagram& d,
                            std::span<const int> top, std::span<const int> bottom) {
    int value = 1;
    for (const auto& block : d.blocks()) {
        const int x = block[0], y = block[1];  // x < y by canonical block order
        const int ix = vertex_index(x, d.top_count(), top, bottom);
        const int iy = vertex_index(y, d.top_count(), top, bottom);
        const bool same_row = d.is_top(x) == d.is_top(y);
        // Same-row pairs pick up the antisymmetric pairing, read left to right.
        const int factor = same_row ? epsilon(ix, iy, g) : (ix == iy ? 1 : 0);
        if (factor == 0) return 0;
        value *= factor;
    }
    return value;
}

inline int entry_n_diagram(const GroupSpec& g, const PartitionDiagram& d,
                           const BlockClassification& cls, std::span<const int> top,
                           std::span<const int> bottom) {
    for (const auto& block : d.blocks()) {
        if (block.size() == 1) continue;
        const int ix = vertex_index(block[0], d.top_count(), top, bottom);
        const int iy = vertex_index(block[1], d.top_count(), top, bottom);
        if (ix != iy) return 0;
    }
    std::vector<int> t_free, b_free;
    for (int v : cls.top_free) t_free.push_back(vertex_index(v, d.top_count(), top, bottom));
    for (int v : cls.bottom_free) b_free.push_back(vertex_index(v, d.top_count(), top, bottom));
    return chi(t_free, b_free, g.n);
}

}  // namespace detail

// Direct evaluation of the spanning matrix attached to a diagram: the
// all-indices-equal matrix for O(n), S_n, and SO(n) Brauer diagrams; the
// gamma-product matrix for Sp(n); the chi-weighted matrix for SO(n)
// (l+k)\n diagrams.
inline DenseMatrix dense_matrix(const GroupSpec& g, const PartitionDiagram& d) {
    require_admissible(g, d);
    const auto kind = kind_of(d, g);
    const auto cls = classify(d);
    const int l = d.top_count(), k = d.bottom_count();
    DenseMatrix m(g.n, l, k);
    std::vector<int> top(static_cast<std::size_t>(l), 1);
    for (std::int64_t row = 0; row < m.rows(); ++row) {
        if (l > 0) top = digits_of(row, g.n, l);
        std::vector<int> bottom(static_cast<std::size_t>(k), 1);
        for (std::int64_t col = 0; col < m.cols(); ++col) {
            if (k > 0) bottom = digits_of(col, g.n, k);
            int value = 0;
            if (g.group == Group::symplectic) {
                value = detail::entry_symplectic(g, d, top, bottom);
            } else if (g.group == Group::special_orthogonal &&
                       kind.tag == DiagramKind::Tag::n_diagram) {
                value = detail::entry_n_diagram(g, d, cls, top, bottom);
            } else {
                value = detail::entry_all_blocks_equal(d, top, bottom);
            }
            m.entry(row, col) = value;
        }
    }
    return m;
}

// Plain dense matrix-vector product: n^(l+k) multiplications and
// n^l (n^k - 1) additions, under either counting convention.
template <typename Scalar>
TensorVector<Scalar> naive_mult(const DenseMatrix& m, const TensorVector<Scalar>& v,
                                OpCounter* counter = nullptr) {
    require(m.cols() == v.size() && m.n() == v.n(), ErrorCode::size_mismatch,
            "matrix columns do not match vector length");
    TensorVector<Scalar> out(m.n(), m.top_order());
    for (std::int64_t row = 0; row < m.rows(); ++row) {
        Scalar acc{0};
        for (std::int64_t col = 0; col < m.cols(); ++col) {
            acc += static_cast<Scalar>(m.entry(row, col)) * v[col];
        }
        out[row] = acc;
    }
    if (counter) {
        const auto mults = static_cast<std::uint64_t>(m.rows() * m.cols());
        const auto adds = static_cast<std::uint64_t>(m.rows() * (m.cols() - 1));
        counter->add_stage("naive", OpTally{mults, adds, mults, adds});
    }
    return out;
}

// An exact-integer group element: a signed permutation for O(n) (determinant
// +1 for SO(n)), a permutation matrix for S_n, an integer matrix preserving
// the epsilon pairing for Sp(n).
class GroupElement {
public:
    GroupElement(int n, std::vector<std::int64_t> row_major)
        : n_(n), entries_(std::move(row_major)) {
        require(static_cast<std::int64_t>(entries_.size()) ==
                    static_cast<std::int64_t>(n_) * n_,
                ErrorCode::size_mismatch, "group element must be an n x n matrix");
    }

    static GroupElement identity(int n) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1;
        return GroupElement(n, std::move(e));
    }

    int n() const { return n_; }
    std::int64_t entry(int row, int col) const {
        return entries_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)];
    }

private:
    int n_;
    std::vector<std::int64_t> entries_;
};

namespace detail {

inline bool is_signed_permutation(const GroupElement& m, int* det_out) {
    const int n = m.n();
    std::vector<bool> col_used(static_cast<std::size_t>(n), false);
    std::vector<int> perm(static_cast<std::size_t>(n), 0);
    int sign_product = 1;
    for (int r = 1; r <= n; ++r) {
        int hits = 0, col = 0;
        for (int c = 1; c <= n; ++c) {
            const std::int64_t e = m.entry(r, c);
            if (e == 0) continue;
            if (e != 1 && e != -1) return false;
            ++hits;
            col = c;
            if (e == -1) sign_product = -sign_product;
        }
        if (hits != 1 || col_used[static_cast<std::size_t>(col - 1)]) return false;
        col_used[static_cast<std::size_t>(col - 1)] = true;
        perm[static_cast<std::size_t>(r - 1)] = col;
    }
    if (det_out) {
        int perm_sign = 1;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            for (std::size_t j = i + 1; j < perm.size(); ++j) {
                if (perm[i] > perm[j]) perm_sign = -perm_sign;
            }
        }
        *det_out = perm_sign * sign_product;
    }
    return true;
}

inline bool preserves_epsilon(const GroupSpec& g, const GroupElement& m) {
    const int n = g.n;
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            std::int64_t value = 0;  // (M^T Omega M)_{a,b}
            for (int r = 1; r <= n; ++r) {
                for (int c = 1; c <= n; ++c) {
                    const int omega = epsilon(r, c, g);
                    if (omega) value += m.entry(r, a) * omega * m.entry(c, b);
                }
            }
            if (value != epsilon(a, b, g)) return false;
        }
    }
    return true;
}

}  // namespace detail

inline void require_group_element(const GroupSpec& g, const GroupElement& m) {
    require(m.n() == g.n, ErrorCode::size_mismatch, "group element dimension mismatch");
    int det = 0;
    switch (g.group) {
        case Group::orthogonal:
            require(detail::is_signed_permutation(m, &det), ErrorCode::not_a_group_element,
                    "expected a signed permutation matrix");
            break;
        case Group::special_orthogonal:
            require(detail::is_signed_permutation(m, &det) && det == 1,
                    ErrorCode::not_a_group_element,
                    "expected a signed permutation matrix with determinant +1");
            break;
        case Group::symplectic:
            require(detail::preserves_epsilon(g, m), ErrorCode::not_a_group_element,
                    "matrix does not preserve the epsilon pairing");
            break;
        case Group::symmetric: {
            bool ok = detail::is_signed_permutation(m, &det);
            for (int r = 1; ok && r <= m.n(); ++r) {
                for (int c = 1; c <= m.n(); ++c) {
                    if (m.entry(r, c) < 0) {
                        ok = false;
                        break;
                    }
                }
            }
            require(ok, ErrorCode::not_a_group_element, "expected a permutation matrix");
            break;
        }
    }
}

// Applies elem (x) ... (x) elem to v, factor by factor, without materialising
// the n^k x n^k matrix.
template <typename Scalar>
TensorVector<Scalar> group_element_action(const GroupSpec& g, const GroupElement& elem,
                                          const TensorVector<Scalar>& v) {
    require_group_element(g, elem);
    require(v.n() == g.n, ErrorCode::size_mismatch, "vector base dimension mismatch");
    const int n = g.n;
    const int k = v.order();
    TensorVector<Scalar> current = v;
    for (int mode = 1; mode <= k; ++mode) {
        TensorVector<Scalar> next(n, k);
        const std::int64_t suffix = pow_int(n, k - mode);
        const std::int64_t prefix = pow_int(n, mode - 1);
        for (std::int64_t p = 0; p < prefix; ++p) {
            for (std::int64_t s = 0; s < suffix; ++s) {
                const std::int64_t base = p * n * suffix + s;
                for (int i = 1; i <= n; ++i) {
                    Scalar acc{0};
                    for (int j = 1; j <= n; ++j) {
                        const std::int64_t e = elem.entry(i, j);
                        if (e != 0) {
                            acc += static_cast<Scalar>(e) * current[base + (j - 1) * suffix];
                        }
                    }
                    next[base + (i - 1) * suffix] = acc;
                }
            }
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace eqmult
