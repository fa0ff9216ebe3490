#pragma once

#include <vector>

#include "eqmult/diagram.hpp"

namespace eqmult {

// Rewriting of a diagram as sigma_k, then a planar diagram, then sigma_l:
//
//     dense(original) = P(sigma_l) * dense(planar) * P(sigma_k)
//
// where P(sigma) is the matrix of the index shuffle performed by permute().
// sigma_l sends an original top vertex to its slot in the planar diagram;
// sigma_k sends a planar bottom slot to the original bottom slot it carries.
struct Factorization {
    Permutation sigma_k;
    PartitionDiagram planar;
    Permutation sigma_l;
};

namespace detail {

// Planar slot of every vertex under the canonical layout. Top row: blocks
// confined to the top row at the far left, cross blocks' top parts next, free
// vertices (n-diagrams only) at the far right. Bottom row: cross blocks'
// bottom parts at the far left, bottom-row blocks next, free vertices at the
// far right. Blocks of one category are taken in order of least vertex, and
// vertices keep their left-to-right order within each relocated group, which
// keeps every epsilon factor and the chi column order intact.
struct SlotAssignment {
    std::vector<int> top_slot;     // 1-based, indexed by top vertex
    std::vector<int> bottom_slot;  // 1-based, indexed by bottom position (label - l)
};

inline SlotAssignment canonical_slots(const PartitionDiagram& d, bool n_diagram) {
    const auto cls = classify(d);
    const int l = d.top_count();
    SlotAssignment slots;
    slots.top_slot.assign(static_cast<std::size_t>(l) + 1, 0);
    slots.bottom_slot.assign(static_cast<std::size_t>(d.bottom_count()) + 1, 0);
    int next_top = 1;
    int next_bottom = 1;
    const auto top_main = n_diagram ? cls.top_pairs() : cls.top_blocks;
    const auto bottom_main = n_diagram ? cls.bottom_pairs() : cls.bottom_blocks;
    for (const auto& block : top_main) {
        for (int v : block) slots.top_slot[static_cast<std::size_t>(v)] = next_top++;
    }
    for (const auto& block : cls.cross_blocks) {
        for (int v : block) {
            if (v <= l) {
                slots.top_slot[static_cast<std::size_t>(v)] = next_top++;
            } else {
                slots.bottom_slot[static_cast<std::size_t>(v - l)] = next_bottom++;
            }
        }
    }
    for (const auto& block : bottom_main) {
        for (int v : block) slots.bottom_slot[static_cast<std::size_t>(v - l)] = next_bottom++;
    }
    if (n_diagram) {
        for (int v : cls.top_free) slots.top_slot[static_cast<std::size_t>(v)] = next_top++;
        for (int v : cls.bottom_free) {
            slots.bottom_slot[static_cast<std::size_t>(v - l)] = next_bottom++;
        }
    }
    return slots;
}

}  // namespace detail

inline Factorization factor(const GroupSpec& g, const PartitionDiagram& d) {
    require_admissible(g, d);
    const bool n_diagram = kind_of(d, g).tag == DiagramKind::Tag::n_diagram;
    const auto slots = detail::canonical_slots(d, n_diagram);

    std::vector<int> tau(slots.top_slot.begin() + 1, slots.top_slot.end());
    std::vector<int> rho(slots.bottom_slot.begin() + 1, slots.bottom_slot.end());
    Permutation sigma_l{std::move(tau)};
    Permutation bottom_relocation{std::move(rho)};

    Factorization out;
    out.planar = relabel_rows(d, sigma_l, bottom_relocation);
    out.sigma_l = std::move(sigma_l);
    out.sigma_k = bottom_relocation.inverse();
    return out;
}

// One Kronecker factor of a canonical planar diagram. The sub-diagram uses
// local labels; its (top, bottom) orders give the factor's shape.
struct PlanarAtom {
    enum class Type { top_block, cross, bottom_block, free_vertices };

    Type type;
    PartitionDiagram diagram;

    int top_order() const { return diagram.top_count(); }
    int bottom_order() const { return diagram.bottom_count(); }
};

inline const char* atom_type_name(PlanarAtom::Type t) {
    switch (t) {
        case PlanarAtom::Type::top_block: return "top_block";
        case PlanarAtom::Type::cross: return "cross";
        case PlanarAtom::Type::bottom_block: return "bottom_block";
        case PlanarAtom::Type::free_vertices: return "free_vertices";
    }
    return "?";
}

// Tensor-product factorisation of a canonical planar diagram, left to right:
// top blocks, the single cross factor, bottom blocks, and (for n-diagrams)
// the free-vertex factor at the far right. tensor_product over the atoms in
// order reproduces the planar diagram exactly.
struct PlanarDecomposition {
    int top_order = 0;     // l of the planar diagram
    int bottom_order = 0;  // k of the planar diagram
    std::vector<PlanarAtom> atoms;
};

inline PlanarDecomposition split_planar(const GroupSpec& g, const PartitionDiagram& planar) {
    require_admissible(g, planar);
    require(is_planar(planar), ErrorCode::not_planar, "diagram is not planar");
    const bool n_diagram = kind_of(planar, g).tag == DiagramKind::Tag::n_diagram;
    const auto slots = detail::canonical_slots(planar, n_diagram);
    for (int v = 1; v <= planar.top_count(); ++v) {
        require(slots.top_slot[static_cast<std::size_t>(v)] == v, ErrorCode::not_canonical,
                "top row is not in canonical factor layout");
    }
    for (int p = 1; p <= planar.bottom_count(); ++p) {
        require(slots.bottom_slot[static_cast<std::size_t>(p)] == p, ErrorCode::not_canonical,
                "bottom row is not in canonical factor layout");
    }

    const auto cls = classify(planar);
    const auto top_main = n_diagram ? cls.top_pairs() : cls.top_blocks;
    const auto bottom_main = n_diagram ? cls.bottom_pairs() : cls.bottom_blocks;

    PlanarDecomposition dec;
    dec.top_order = planar.top_count();
    dec.bottom_order = planar.bottom_count();

    for (const auto& block : top_main) {
        const int size = static_cast<int>(block.size());
        Block local(static_cast<std::size_t>(size));
        std::iota(local.begin(), local.end(), 1);
        dec.atoms.push_back({PlanarAtom::Type::top_block, PartitionDiagram(size, 0, {local})});
    }
    if (!cls.cross_blocks.empty()) {
        int tops = 0, bottoms = 0;
        for (const auto& block : cls.cross_blocks) {
            for (int v : block) (v <= planar.top_count() ? tops : bottoms)++;
        }
        std::vector<Block> local_blocks;
        int next_top = 1, next_bottom = 1;
        for (const auto& block : cls.cross_blocks) {
            Block local;
            for (int v : block) {
                local.push_back(v <= planar.top_count() ? next_top++ : tops + next_bottom++);
            }
            local_blocks.push_back(std::move(local));
        }
        dec.atoms.push_back(
            {PlanarAtom::Type::cross, PartitionDiagram(tops, bottoms, std::move(local_blocks))});
    }
    for (const auto& block : bottom_main) {
        const int size = static_cast<int>(block.size());
        Block local(static_cast<std::size_t>(size));
        std::iota(local.begin(), local.end(), 1);
        dec.atoms.push_back({PlanarAtom::Type::bottom_block, PartitionDiagram(0, size, {local})});
    }
    if (n_diagram) {
        const int s = cls.top_free_count();
        const int bf = cls.bottom_free_count();
        std::vector<Block> singles;
        for (int v = 1; v <= s + bf; ++v) singles.push_back({v});
        dec.atoms.push_back(
            {PlanarAtom::Type::free_vertices, PartitionDiagram(s, bf, std::move(singles))});
    }
    return dec;
}

}  // namespace eqmult
