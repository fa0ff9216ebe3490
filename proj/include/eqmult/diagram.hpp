#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "eqmult/error.hpp"
#include "eqmult/permutation.hpp"

namespace eqmult {

enum class Group { orthogonal, special_orthogonal, symplectic, symmetric };

inline const char* group_name(Group g) {
    switch (g) {
        case Group::orthogonal: return "O";
        case Group::special_orthogonal: return "SO";
        case Group::symplectic: return "Sp";
        case Group::symmetric: return "Sn";
    }
    return "?";
}

// The group together with the dimension n of the underlying space R^n.
// For Sp(n) the dimension is even, n = 2m, with the symplectic basis ordered
// in interleaved pairs: pair p occupies slots 2p-1 (unprimed) and 2p (primed).
struct GroupSpec {
    Group group;
    int n;

    GroupSpec(Group g, int dim) : group(g), n(dim) {
        require(n >= 1, ErrorCode::bad_arguments, "dimension must be positive");
        if (group == Group::symplectic) {
            require(n % 2 == 0, ErrorCode::parity_error,
                    "symplectic group needs even dimension");
        }
    }

    static GroupSpec orthogonal(int n) { return GroupSpec(Group::orthogonal, n); }
    static GroupSpec special_orthogonal(int n) { return GroupSpec(Group::special_orthogonal, n); }
    static GroupSpec symplectic(int n) { return GroupSpec(Group::symplectic, n); }
    static GroupSpec symmetric(int n) { return GroupSpec(Group::symmetric, n); }

    // Half-dimension m for Sp(n).
    int half() const { return n / 2; }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

using Block = std::vector<int>;

// A set partition of [l+k] drawn on two rows: the top row holds vertices
// 1..l left to right, the bottom row holds l+1..l+k left to right. Blocks are
// stored canonically (each sorted ascending, blocks ordered by least element),
// so equality is equality of set partitions.
class PartitionDiagram {
public:
    PartitionDiagram() = default;

    PartitionDiagram(int top_count, int bottom_count, std::vector<Block> blocks)
        : top_count_(top_count), bottom_count_(bottom_count), blocks_(std::move(blocks)) {
        require(top_count_ >= 0 && bottom_count_ >= 0, ErrorCode::bad_arguments,
                "negative row size");
        const int total = top_count_ + bottom_count_;
        std::vector<int> owner(static_cast<std::size_t>(total), 0);
        for (auto& block : blocks_) {
            require(!block.empty(), ErrorCode::empty_block, "empty block");
            std::sort(block.begin(), block.end());
            for (std::size_t i = 0; i < block.size(); ++i) {
                const int v = block[i];
                require(v >= 1 && v <= total, ErrorCode::index_out_of_range,
                        "vertex label " + std::to_string(v) + " outside [1.." +
                            std::to_string(total) + "]");
                require(i == 0 || block[i] != block[i - 1], ErrorCode::overlapping_blocks,
                        "vertex " + std::to_string(v) + " repeated within a block");
                require(owner[static_cast<std::size_t>(v - 1)] == 0,
                        ErrorCode::overlapping_blocks,
                        "vertex " + std::to_string(v) + " appears in two blocks");
                owner[static_cast<std::size_t>(v - 1)] = 1;
            }
        }
        for (int v = 1; v <= total; ++v) {
            require(owner[static_cast<std::size_t>(v - 1)] == 1, ErrorCode::uncovered_vertex,
                    "vertex " + std::to_string(v) + " not covered by any block");
        }
        std::sort(blocks_.begin(), blocks_.end());
    }

    int top_count() const { return top_count_; }     // l
    int bottom_count() const { return bottom_count_; }  // k
    int vertex_count() const { return top_count_ + bottom_count_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    bool is_top(int vertex) const { return vertex <= top_count_; }

    std::string repr() const {
        std::ostringstream out;
        out << "(" << top_count_ << "," << bottom_count_ << ")";
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            out << (b == 0 ? "{" : "|");
            for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
                if (i) out << " ";
                out << blocks_[b][i];
            }
        }
        out << "}";
        return out.str();
    }

    friend bool operator==(const PartitionDiagram&, const PartitionDiagram&) = default;
    friend bool operator<(const PartitionDiagram& a, const PartitionDiagram& b) {
        if (a.top_count_ != b.top_count_) return a.top_count_ < b.top_count_;
        if (a.bottom_count_ != b.bottom_count_) return a.bottom_count_ < b.bottom_count_;
        return a.blocks_ < b.blocks_;
    }

private:
    int top_count_ = 0;
    int bottom_count_ = 0;
    std::vector<Block> blocks_;
};

inline PartitionDiagram new_diagram(int top_count, int bottom_count, std::vector<Block> blocks) {
    return PartitionDiagram(top_count, bottom_count, std::move(blocks));
}

// Identity (k,k)-diagram: top i joined to bottom i.
inline PartitionDiagram identity_diagram(int k) {
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) blocks.push_back({i, k + i});
    return PartitionDiagram(k, k, std::move(blocks));
}

// The blocks of a diagram split by row membership. Lists are ordered by each
// block's least vertex; top_free / bottom_free hold the singleton labels.
struct BlockClassification {
    std::vector<Block> top_blocks;     // entirely in the top row (singletons included)
    std::vector<Block> bottom_blocks;  // entirely in the bottom row
    std::vector<Block> cross_blocks;   // meeting both rows
    std::vector<int> top_free;         // singleton top vertices, ascending
    std::vector<int> bottom_free;      // singleton bottom vertices, ascending

    std::vector<Block> top_pairs() const {
        std::vector<Block> out;
        for (const auto& b : top_blocks)
            if (b.size() >= 2) out.push_back(b);
        return out;
    }

    std::vector<Block> bottom_pairs() const {
        std::vector<Block> out;
        for (const auto& b : bottom_blocks)
            if (b.size() >= 2) out.push_back(b);
        return out;
    }

    int top_pair_count() const {
        int t = 0;
        for (const auto& b : top_blocks) t += b.size() >= 2;
        return t;
    }

    int bottom_pair_count() const {
        int b = 0;
        for (const auto& blk : bottom_blocks) b += blk.size() >= 2;
        return b;
    }

    int cross_count() const { return static_cast<int>(cross_blocks.size()); }
    int top_free_count() const { return static_cast<int>(top_free.size()); }
    int bottom_free_count() const { return static_cast<int>(bottom_free.size()); }
};

inline BlockClassification classify(const PartitionDiagram& d) {
    BlockClassification out;
    for (const auto& block : d.blocks()) {
        const bool has_top = d.is_top(block.front());
        const bool has_bottom = !d.is_top(block.back());
        if (has_top && has_bottom) {
            out.cross_blocks.push_back(block);
        } else if (has_top) {
            out.top_blocks.push_back(block);
            if (block.size() == 1) out.top_free.push_back(block.front());
        } else {
            out.bottom_blocks.push_back(block);
            if (block.size() == 1) out.bottom_free.push_back(block.front());
        }
    }
    return out;  // diagram blocks are stored by least element, so lists inherit that order
}

struct DiagramKind {
    enum class Tag { brauer, n_diagram, general_partition };

    Tag tag = Tag::general_partition;
    int block_count = 0;
    int singleton_count = 0;
    // For the symmetric group: block_count <= n (diagram basis condition).
    // For the others: whether the tag itself is in the group's spanning family.
    bool basis_condition_ok = false;
};

inline DiagramKind kind_of(const PartitionDiagram& d, const GroupSpec& g) {
    DiagramKind kind;
    kind.block_count = static_cast<int>(d.blocks().size());
    bool all_pairs = true;
    bool singles_and_pairs = true;
    for (const auto& block : d.blocks()) {
        if (block.size() == 1) {
            ++kind.singleton_count;
            all_pairs = false;
        } else if (block.size() != 2) {
            all_pairs = false;
            singles_and_pairs = false;
        }
    }
    switch (g.group) {
        case Group::orthogonal:
        case Group::symplectic:
            kind.tag = all_pairs ? DiagramKind::Tag::brauer : DiagramKind::Tag::general_partition;
            kind.basis_condition_ok = all_pairs;
            break;
        case Group::special_orthogonal:
            if (all_pairs) {
                kind.tag = DiagramKind::Tag::brauer;
                kind.basis_condition_ok = true;
            } else if (singles_and_pairs && kind.singleton_count == g.n) {
                kind.tag = DiagramKind::Tag::n_diagram;
                kind.basis_condition_ok = true;
            } else {
                kind.tag = DiagramKind::Tag::general_partition;
                kind.basis_condition_ok = false;
            }
            break;
        case Group::symmetric:
            kind.tag = all_pairs ? DiagramKind::Tag::brauer : DiagramKind::Tag::general_partition;
            kind.basis_condition_ok = kind.block_count <= g.n;
            break;
    }
    return kind;
}

inline bool is_admissible(const GroupSpec& g, const PartitionDiagram& d) {
    return kind_of(d, g).basis_condition_ok;
}

inline void require_admissible(const GroupSpec& g, const PartitionDiagram& d) {
    if (!is_admissible(g, d)) {
        fail(ErrorCode::kind_mismatch,
             std::string("diagram ") + d.repr() + " is not in the spanning family of " +
                 group_name(g.group) + "(" + std::to_string(g.n) + ")");
    }
}

// Planarity via the boundary cyclic order: top row left to right, then bottom
// row right to left. Two blocks cross iff their vertices interleave on that
// circle, i.e. the merged cyclic sequence alternates between them 4+ times.
inline bool is_planar(const PartitionDiagram& d) {
    const int l = d.top_count();
    const int k = d.bottom_count();
    auto boundary_position = [l, k](int vertex) {
        return vertex <= l ? vertex : l + k - (vertex - l) + 1;
    };
    const auto& blocks = d.blocks();
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        if (blocks[a].size() < 2) continue;
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            if (blocks[b].size() < 2) continue;
            std::vector<std::pair<int, bool>> merged;  // (position, belongs to block a)
            for (int v : blocks[a]) merged.emplace_back(boundary_position(v), true);
            for (int v : blocks[b]) merged.emplace_back(boundary_position(v), false);
            std::sort(merged.begin(), merged.end());
            int runs = 0;
            for (std::size_t i = 0; i < merged.size(); ++i) {
                runs += merged[i].second != merged[(i + 1) % merged.size()].second;
            }
            if (runs >= 4) return false;
        }
    }
    return true;
}

// Horizontal juxtaposition: d1 to the left of d2. Rows are renumbered
// contiguously, so d2's top labels shift by l1 and its bottom labels by l1+k1.
inline PartitionDiagram tensor_product(const PartitionDiagram& d1, const PartitionDiagram& d2) {
    const int l1 = d1.top_count(), k1 = d1.bottom_count();
    const int l2 = d2.top_count(), k2 = d2.bottom_count();
    std::vector<Block> blocks;
    blocks.reserve(d1.blocks().size() + d2.blocks().size());
    for (const auto& block : d1.blocks()) {
        Block shifted;
        for (int v : block) shifted.push_back(v <= l1 ? v : v + l2);
        blocks.push_back(std::move(shifted));
    }
    for (const auto& block : d2.blocks()) {
        Block shifted;
        for (int v : block) shifted.push_back(v <= l2 ? v + l1 : v + l1 + k1);
        blocks.push_back(std::move(shifted));
    }
    return PartitionDiagram(l1 + l2, k1 + k2, std::move(blocks));
}

// Renames top vertex i to sigma_top(i) and bottom vertex l+j to l+sigma_bottom(j).
inline PartitionDiagram relabel_rows(const PartitionDiagram& d, const Permutation& sigma_top,
                                     const Permutation& sigma_bottom) {
    require(sigma_top.size() == d.top_count(), ErrorCode::size_mismatch,
            "top permutation size does not match top row");
    require(sigma_bottom.size() == d.bottom_count(), ErrorCode::size_mismatch,
            "bottom permutation size does not match bottom row");
    const int l = d.top_count();
    std::vector<Block> blocks;
    blocks.reserve(d.blocks().size());
    for (const auto& block : d.blocks()) {
        Block renamed;
        for (int v : block) {
            renamed.push_back(v <= l ? sigma_top(v) : l + sigma_bottom(v - l));
        }
        blocks.push_back(std::move(renamed));
    }
    return PartitionDiagram(l, d.bottom_count(), std::move(blocks));
}

namespace detail {

inline void matchings_rec(std::vector<int>& unused, std::vector<Block>& current,
                          std::vector<std::vector<Block>>& out) {
    if (unused.empty()) {
        out.push_back(current);
        return;
    }
    const int first = unused.front();
    for (std::size_t j = 1; j < unused.size(); ++j) {
        const int partner = unused[j];
        std::vector<int> rest;
        rest.reserve(unused.size() - 2);
        for (std::size_t i = 1; i < unused.size(); ++i) {
            if (i != j) rest.push_back(unused[i]);
        }
        current.push_back({first, partner});
        matchings_rec(rest, current, out);
        current.pop_back();
    }
}

inline std::vector<std::vector<Block>> perfect_matchings(const std::vector<int>& vertices) {
    std::vector<std::vector<Block>> out;
    if (vertices.size() % 2 != 0) return out;
    std::vector<int> unused = vertices;
    std::vector<Block> current;
    matchings_rec(unused, current, out);
    return out;
}

inline void partitions_rec(int next, int total, int max_blocks, std::vector<Block>& current,
                           std::vector<std::vector<Block>>& out) {
    if (next > total) {
        out.push_back(current);
        return;
    }
    for (auto& block : current) {
        block.push_back(next);
        partitions_rec(next + 1, total, max_blocks, current, out);
        block.pop_back();
    }
    if (static_cast<int>(current.size()) < max_blocks) {
        current.push_back({next});
        partitions_rec(next + 1, total, max_blocks, current, out);
        current.pop_back();
    }
}

// All set partitions of [total] with at most max_blocks blocks.
inline std::vector<std::vector<Block>> bounded_partitions(int total, int max_blocks) {
    std::vector<std::vector<Block>> out;
    std::vector<Block> current;
    if (total == 0) {
        out.push_back(current);
        return out;
    }
    partitions_rec(1, total, max_blocks, current, out);
    return out;
}

inline void subsets_rec(const std::vector<int>& pool, std::size_t start, int want,
                        std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (want == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(want) <= pool.size(); ++i) {
        current.push_back(pool[i]);
        subsets_rec(pool, i + 1, want - 1, current, out);
        current.pop_back();
    }
}

}  // namespace detail

// The spanning family of diagrams for (g, k, l): all (k,l)-Brauer diagrams for
// O(n) and Sp(n); those plus all (l+k)\n diagrams for SO(n); all partition
// diagrams with at most n blocks for S_n. Sorted lexicographically on the
// canonical block representation.
inline std::vector<PartitionDiagram> enumerate_diagrams(const GroupSpec& g, int bottom_count,
                                                        int top_count) {
    const int l = top_count, k = bottom_count;
    const int total = l + k;
    std::vector<int> all(static_cast<std::size_t>(total));
    std::iota(all.begin(), all.end(), 1);

    std::vector<PartitionDiagram> out;
    auto add_all = [&](const std::vector<std::vector<Block>>& block_sets) {
        for (const auto& blocks : block_sets) out.emplace_back(l, k, blocks);
    };

    switch (g.group) {
        case Group::orthogonal:
        case Group::symplectic:
            add_all(detail::perfect_matchings(all));
            break;
        case Group::special_orthogonal: {
            add_all(detail::perfect_matchings(all));
            // (l+k)\n diagrams exist only when l+k >= n with matching parity.
            if (total >= g.n && (total - g.n) % 2 == 0) {
                std::vector<std::vector<int>> singleton_sets;
                std::vector<int> current;
                detail::subsets_rec(all, 0, g.n, current, singleton_sets);
                for (const auto& singles : singleton_sets) {
                    std::vector<int> rest;
                    std::set_difference(all.begin(), all.end(), singles.begin(), singles.end(),
                                        std::back_inserter(rest));
                    for (const auto& matching : detail::perfect_matchings(rest)) {
                        std::vector<Block> blocks = matching;
                        for (int v : singles) blocks.push_back({v});
                        out.emplace_back(l, k, std::move(blocks));
                    }
                }
            }
            break;
        }
        case Group::symmetric:
            add_all(detail::bounded_partitions(total, g.n));
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace eqmult
