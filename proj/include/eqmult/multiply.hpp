#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "eqmult/dense.hpp"
#include "eqmult/diagram.hpp"
#include "eqmult/factor.hpp"
#include "eqmult/op_count.hpp"
#include "eqmult/permutation.hpp"
#include "eqmult/tensor_vector.hpp"

namespace eqmult {

// Index shuffle: the output coefficient at position (i_{sigma(1)},...,
// i_{sigma(m)}) is the input coefficient at (i_1,...,i_m). No arithmetic.
template <typename Scalar>
TensorVector<Scalar> permute(const TensorVector<Scalar>& v, const Permutation& sigma) {
    require(sigma.size() == v.order(), ErrorCode::size_mismatch,
            "permutation size does not match tensor order");
    const int m = v.order();
    const int n = v.n();
    if (m <= 1 || sigma.is_identity()) return v;
    // Gather: output digit at position p is the input digit at position sigma(p).
    std::vector<std::int64_t> in_stride(static_cast<std::size_t>(m));
    for (int p = 1; p <= m; ++p) {
        in_stride[static_cast<std::size_t>(p - 1)] = pow_int(n, m - sigma(p));
    }
    TensorVector<Scalar> out(n, m);
    std::vector<int> digit(static_cast<std::size_t>(m), 0);
    std::int64_t in_off = 0;
    for (std::int64_t out_off = 0; out_off < out.size(); ++out_off) {
        out[out_off] = v[in_off];
        for (int p = m - 1; p >= 0; --p) {
            auto& dp = digit[static_cast<std::size_t>(p)];
            in_off += in_stride[static_cast<std::size_t>(p)];
            if (++dp < n) break;
            in_off -= in_stride[static_cast<std::size_t>(p)] * n;
            dp = 0;
        }
    }
    return out;
}

namespace detail {

// 1 + n + ... + n^(width-1): flat-offset weight of `width` equal digits.
inline std::int64_t repeat_weight(int n, int width) {
    std::int64_t w = 0, p = 1;
    for (int i = 0; i < width; ++i) {
        w += p;
        p *= n;
    }
    return w;
}

struct SignedPerm {
    std::int64_t top_offset;     // flat offset of the first s entries
    std::int64_t bottom_offset;  // flat offset of the last n-s entries
    int sign;
};

inline std::vector<SignedPerm> signed_permutations(int n, int top_width) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<SignedPerm> out;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            for (std::size_t j = i + 1; j < perm.size(); ++j) {
                if (perm[i] > perm[j]) sign = -sign;
            }
        }
        std::span<const int> all(perm);
        out.push_back({flat_offset(all.subspan(0, static_cast<std::size_t>(top_width)), n),
                       flat_offset(all.subspan(static_cast<std::size_t>(top_width)), n), sign});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

template <typename Scalar>
struct PlanarState {
    int n;
    std::vector<Scalar> buf;
    int order;
    int tail;  // trailing slots already carrying finished top-row content
};

// Contract `width` equal indices sitting just before the tail:
// out[pre, suf] = sum_j in[pre, j, ..., j, suf].
template <typename Scalar>
OpTally contract_delta(PlanarState<Scalar>& st, int width) {
    const int n = st.n;
    const std::int64_t suffix = pow_int(n, st.tail);
    const std::int64_t prefix = pow_int(n, st.order - st.tail - width);
    const std::int64_t rep = repeat_weight(n, width) * suffix;
    const std::int64_t in_block = pow_int(n, width + st.tail);
    std::vector<Scalar> out(static_cast<std::size_t>(prefix * suffix), Scalar{0});
    for (std::int64_t p = 0; p < prefix; ++p) {
        for (std::int64_t s = 0; s < suffix; ++s) {
            Scalar acc{0};
            const std::int64_t base = p * in_block + s;
            for (int j = 0; j < n; ++j) acc += st.buf[static_cast<std::size_t>(base + j * rep)];
            out[static_cast<std::size_t>(p * suffix + s)] = acc;
        }
    }
    st.buf = std::move(out);
    st.order -= width;
    const auto outputs = static_cast<std::uint64_t>(prefix * suffix);
    return OpTally{0, outputs * static_cast<std::uint64_t>(n - 1),
                   outputs * static_cast<std::uint64_t>(n),
                   outputs * static_cast<std::uint64_t>(n - 1)};
}

// Sp bottom pair: out[pre, suf] = sum_{j1,j2} epsilon(j1,j2) in[pre, j1, j2, suf],
// visiting only the n nonzero epsilon entries as signed adds.
template <typename Scalar>
OpTally contract_epsilon(PlanarState<Scalar>& st) {
    const int n = st.n;
    const std::int64_t suffix = pow_int(n, st.tail);
    const std::int64_t prefix = pow_int(n, st.order - st.tail - 2);
    const std::int64_t in_block = pow_int(n, 2 + st.tail);
    std::vector<Scalar> out(static_cast<std::size_t>(prefix * suffix), Scalar{0});
    for (std::int64_t p = 0; p < prefix; ++p) {
        for (std::int64_t s = 0; s < suffix; ++s) {
            Scalar acc{0};
            const std::int64_t base = p * in_block + s;
            for (int pair = 0; pair < n / 2; ++pair) {
                const std::int64_t unprimed = 2 * pair, primed = 2 * pair + 1;
                acc += st.buf[static_cast<std::size_t>(base + (unprimed * n + primed) * suffix)];
                acc -= st.buf[static_cast<std::size_t>(base + (primed * n + unprimed) * suffix)];
            }
            out[static_cast<std::size_t>(p * suffix + s)] = acc;
        }
    }
    st.buf = std::move(out);
    st.order -= 2;
    const auto outputs = static_cast<std::uint64_t>(prefix * suffix);
    return OpTally{0, outputs * static_cast<std::uint64_t>(n - 1),
                   outputs * static_cast<std::uint64_t>(n),
                   outputs * static_cast<std::uint64_t>(n - 1)};
}

// SO free-vertex stage: contract the trailing n-s bottom free indices against
// chi and emit s top free indices, signed-add only over permutations of [n]:
// out[J, T] = sum_B chi(T, B) in[J, B].
template <typename Scalar>
OpTally contract_free(PlanarState<Scalar>& st, int top_width, int bottom_width) {
    const int n = st.n;
    const std::int64_t prefix = pow_int(n, st.order - bottom_width);
    const std::int64_t in_block = pow_int(n, bottom_width);
    const std::int64_t out_block = pow_int(n, top_width);
    const auto perms = signed_permutations(n, top_width);
    std::vector<Scalar> out(static_cast<std::size_t>(prefix * out_block), Scalar{0});
    for (std::int64_t p = 0; p < prefix; ++p) {
        const std::int64_t in_base = p * in_block;
        const std::int64_t out_base = p * out_block;
        for (const auto& sp : perms) {
            const Scalar value = st.buf[static_cast<std::size_t>(in_base + sp.bottom_offset)];
            if (sp.sign > 0) {
                out[static_cast<std::size_t>(out_base + sp.top_offset)] += value;
            } else {
                out[static_cast<std::size_t>(out_base + sp.top_offset)] -= value;
            }
        }
    }
    st.buf = std::move(out);
    st.order += top_width - bottom_width;
    st.tail = top_width;
    // n! products per input prefix tuple; each of the n!/(n-s)! live output
    // accumulators gathers (n-s)! terms.
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    std::uint64_t bottom_fact = 1;
    for (int i = 2; i <= bottom_width; ++i) bottom_fact *= static_cast<std::uint64_t>(i);
    const auto prefixes = static_cast<std::uint64_t>(prefix);
    const std::uint64_t adds = prefixes * (fact - fact / bottom_fact);
    return OpTally{0, adds, prefixes * fact, adds};
}

// S_n transfer: each cross block's equal bottom indices become equal top
// indices with the coefficient copied across; off-diagonal output stays zero.
template <typename Scalar>
OpTally transfer_blocks(PlanarState<Scalar>& st, const std::vector<int>& bottom_widths,
                        const std::vector<int>& top_widths) {
    const int n = st.n;
    const int d = static_cast<int>(bottom_widths.size());
    std::vector<std::int64_t> in_stride(static_cast<std::size_t>(d));
    std::vector<std::int64_t> out_stride(static_cast<std::size_t>(d));
    int out_order = 0;
    {
        std::int64_t in_suffix = 1, out_suffix = 1;
        for (int i = d - 1; i >= 0; --i) {
            in_stride[static_cast<std::size_t>(i)] =
                repeat_weight(n, bottom_widths[static_cast<std::size_t>(i)]) * in_suffix;
            out_stride[static_cast<std::size_t>(i)] =
                repeat_weight(n, top_widths[static_cast<std::size_t>(i)]) * out_suffix;
            in_suffix *= pow_int(n, bottom_widths[static_cast<std::size_t>(i)]);
            out_suffix *= pow_int(n, top_widths[static_cast<std::size_t>(i)]);
            out_order += top_widths[static_cast<std::size_t>(i)];
        }
    }
    std::vector<Scalar> out(static_cast<std::size_t>(pow_int(n, out_order)), Scalar{0});
    std::vector<int> digit(static_cast<std::size_t>(d), 0);
    std::int64_t in_off = 0, out_off = 0;
    const std::int64_t tuples = pow_int(n, d);
    for (std::int64_t t = 0; t < tuples; ++t) {
        out[static_cast<std::size_t>(out_off)] = st.buf[static_cast<std::size_t>(in_off)];
        for (int i = d - 1; i >= 0; --i) {
            auto& di = digit[static_cast<std::size_t>(i)];
            in_off += in_stride[static_cast<std::size_t>(i)];
            out_off += out_stride[static_cast<std::size_t>(i)];
            if (++di < n) break;
            in_off -= in_stride[static_cast<std::size_t>(i)] * n;
            out_off -= out_stride[static_cast<std::size_t>(i)] * n;
            di = 0;
        }
    }
    st.buf = std::move(out);
    st.order = out_order;
    st.tail = out_order;
    return OpTally{};
}

// Prepend `width` equal indices broadcasting every coefficient, with an
// optional epsilon sign for Sp pairs. A copy, so neither convention charges it.
template <typename Scalar>
OpTally prepend_block(PlanarState<Scalar>& st, int width, bool symplectic) {
    const int n = st.n;
    const std::int64_t rest = pow_int(n, st.order);
    const std::int64_t rep = repeat_weight(n, width) * rest;
    std::vector<Scalar> out(static_cast<std::size_t>(pow_int(n, width) * rest), Scalar{0});
    if (symplectic) {
        for (int pair = 0; pair < n / 2; ++pair) {
            const std::int64_t unprimed = 2 * pair, primed = 2 * pair + 1;
            const std::int64_t plus = (unprimed * n + primed) * rest;
            const std::int64_t minus = (primed * n + unprimed) * rest;
            for (std::int64_t r = 0; r < rest; ++r) {
                out[static_cast<std::size_t>(plus + r)] = st.buf[static_cast<std::size_t>(r)];
                out[static_cast<std::size_t>(minus + r)] = -st.buf[static_cast<std::size_t>(r)];
            }
        }
    } else {
        for (int m = 0; m < n; ++m) {
            const std::int64_t base = m * rep;
            for (std::int64_t r = 0; r < rest; ++r) {
                out[static_cast<std::size_t>(base + r)] = st.buf[static_cast<std::size_t>(r)];
            }
        }
    }
    st.buf = std::move(out);
    st.order += width;
    return OpTally{};
}

}  // namespace detail

// Staged multiplication by a canonical planar diagram: atoms are applied right
// to left. Contractions (bottom blocks, the free-vertex block) run first, the
// cross factor transfers indices (the identity for O/Sp/SO), and top blocks
// broadcast copies last.
template <typename Scalar>
TensorVector<Scalar> planar_mult(const GroupSpec& g, const PlanarDecomposition& dec,
                                 const TensorVector<Scalar>& v, OpCounter* counter = nullptr) {
    require(v.order() == dec.bottom_order, ErrorCode::size_mismatch,
            "vector order does not match the planar diagram");
    require(v.n() == g.n, ErrorCode::size_mismatch, "vector base dimension mismatch");

    detail::PlanarState<Scalar> st{g.n, v.coeffs(), v.order(), 0};

    // Stable labels per atom kind, numbered left to right.
    std::vector<std::string> labels(dec.atoms.size());
    int top_i = 0, bottom_i = 0;
    for (std::size_t a = 0; a < dec.atoms.size(); ++a) {
        switch (dec.atoms[a].type) {
            case PlanarAtom::Type::top_block:
                labels[a] = "top[" + std::to_string(++top_i) + "]";
                break;
            case PlanarAtom::Type::cross: labels[a] = "cross"; break;
            case PlanarAtom::Type::bottom_block:
                labels[a] = "bottom[" + std::to_string(++bottom_i) + "]";
                break;
            case PlanarAtom::Type::free_vertices: labels[a] = "free"; break;
        }
    }

    for (std::size_t idx = dec.atoms.size(); idx-- > 0;) {
        const auto& atom = dec.atoms[idx];
        OpTally ops;
        switch (atom.type) {
            case PlanarAtom::Type::free_vertices:
                ops = detail::contract_free(st, atom.top_order(), atom.bottom_order());
                break;
            case PlanarAtom::Type::bottom_block:
                if (g.group == Group::symplectic) {
                    ops = detail::contract_epsilon(st);
                } else {
                    ops = detail::contract_delta(st, atom.bottom_order());
                }
                break;
            case PlanarAtom::Type::cross:
                if (g.group == Group::symmetric) {
                    std::vector<int> bottom_widths, top_widths;
                    for (const auto& block : atom.diagram.blocks()) {
                        int tops = 0;
                        for (int vtx : block) tops += atom.diagram.is_top(vtx);
                        top_widths.push_back(tops);
                        bottom_widths.push_back(static_cast<int>(block.size()) - tops);
                    }
                    ops = detail::transfer_blocks(st, bottom_widths, top_widths);
                } else {
                    // Transfer is the identity for O, Sp, and SO cross pairs.
                    st.tail = st.order;
                }
                break;
            case PlanarAtom::Type::top_block:
                ops = detail::prepend_block(st, atom.top_order(),
                                            g.group == Group::symplectic);
                break;
        }
        if (counter) counter->add_stage(labels[idx], ops);
    }

    require(st.order == dec.top_order, ErrorCode::size_mismatch,
            "planar stages did not end at the expected order");
    return TensorVector<Scalar>(g.n, st.order, std::move(st.buf));
}

namespace detail {

template <typename Scalar>
TensorVector<Scalar> matrix_mult_impl(const GroupSpec& g, const PartitionDiagram& d,
                                      const TensorVector<Scalar>& v, OpCounter* counter) {
    require(v.order() == d.bottom_count(), ErrorCode::size_mismatch,
            "vector order does not match the diagram");
    require(v.n() == g.n, ErrorCode::size_mismatch, "vector base dimension mismatch");
    const Factorization f = factor(g, d);
    const PlanarDecomposition dec = split_planar(g, f.planar);
    TensorVector<Scalar> w = permute(v, f.sigma_k);
    w = planar_mult(g, dec, w, counter);
    return permute(w, f.sigma_l);
}

}  // namespace detail

// Algorithm: factor the diagram, shuffle the input by sigma_k, run the staged
// planar multiplication, shuffle the result by sigma_l. Equals the dense
// matrix product exactly.
template <typename Scalar>
TensorVector<Scalar> matrix_mult(const GroupSpec& g, const PartitionDiagram& d,
                                 const TensorVector<Scalar>& v, OpCounter* counter = nullptr) {
    if (counter) counter->reset();
    return detail::matrix_mult_impl(g, d, v, counter);
}

template <typename Scalar>
struct LayerTerm {
    Scalar weight;
    PartitionDiagram diagram;
};

// Weighted sum over spanning-set multiplications. Terms are independent; the
// final summation runs in ascending term order so results are deterministic.
// An empty term list yields the zero vector of the requested output order.
template <typename Scalar>
TensorVector<Scalar> layer_apply(const GroupSpec& g, int bottom_order, int top_order,
                                 const std::vector<LayerTerm<Scalar>>& terms,
                                 const TensorVector<Scalar>& v, OpCounter* counter = nullptr) {
    if (counter) counter->reset();
    require(v.order() == bottom_order, ErrorCode::size_mismatch,
            "vector order does not match the layer");
    require(v.n() == g.n, ErrorCode::size_mismatch, "vector base dimension mismatch");
    for (const auto& term : terms) {
        require(term.diagram.bottom_count() == bottom_order &&
                    term.diagram.top_count() == top_order,
                ErrorCode::mixed_shapes, "layer terms disagree on (k, l)");
    }
    TensorVector<Scalar> acc(g.n, top_order);
    OpTally combine;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        OpCounter term_counter;
        TensorVector<Scalar> part =
            detail::matrix_mult_impl(g, terms[i].diagram, v, counter ? &term_counter : nullptr);
        if (counter) {
            for (const auto& stage : term_counter.stages()) {
                counter->add_stage("term[" + std::to_string(i + 1) + "]." + stage.stage,
                                   stage.ops);
            }
        }
        const Scalar w = terms[i].weight;
        for (std::int64_t off = 0; off < acc.size(); ++off) acc[off] += w * part[off];
        combine.real_mults += static_cast<std::uint64_t>(acc.size());
        combine.formal_mults += static_cast<std::uint64_t>(acc.size());
        if (i > 0) {
            combine.real_adds += static_cast<std::uint64_t>(acc.size());
            combine.formal_adds += static_cast<std::uint64_t>(acc.size());
        }
    }
    if (counter && !terms.empty()) counter->add_stage("combine", combine);
    return acc;
}

}  // namespace eqmult
