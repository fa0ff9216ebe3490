#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqmult/diagram.hpp"
#include "eqmult/multiply.hpp"

namespace eqmult {

inline std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

// Hash of the canonical diagram list; stored in weight files so that an
// enumeration-order change between versions is caught on import.
inline std::string basis_checksum(const std::vector<PartitionDiagram>& basis) {
    std::string text;
    for (const auto& d : basis) {
        text += d.repr();
        text += ';';
    }
    std::uint64_t h = fnv1a64(text);
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

// A full equivariant layer: one weight per element of the enumerated spanning
// set for (g, k, l), applied by linearity over the fast multiplication path.
template <typename Scalar>
class EquivariantLayer {
public:
    static EquivariantLayer build(const GroupSpec& g, int bottom_order, int top_order,
                                  std::vector<Scalar> weights) {
        EquivariantLayer layer(g, bottom_order, top_order);
        layer.basis_ = enumerate_diagrams(g, bottom_order, top_order);
        require(weights.size() == layer.basis_.size(), ErrorCode::weight_count_mismatch,
                "expected " + std::to_string(layer.basis_.size()) + " weights, got " +
                    std::to_string(weights.size()));
        layer.weights_ = std::move(weights);
        return layer;
    }

    const GroupSpec& group() const { return group_; }
    int bottom_order() const { return bottom_order_; }  // k
    int top_order() const { return top_order_; }        // l
    const std::vector<PartitionDiagram>& basis() const { return basis_; }
    const std::vector<Scalar>& weights() const { return weights_; }
    std::string checksum() const { return basis_checksum(basis_); }

    TensorVector<Scalar> apply(const TensorVector<Scalar>& v, OpCounter* counter = nullptr) const {
        std::vector<LayerTerm<Scalar>> terms;
        terms.reserve(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            terms.push_back({weights_[i], basis_[i]});
        }
        return layer_apply(group_, bottom_order_, top_order_, terms, v, counter);
    }

private:
    EquivariantLayer(const GroupSpec& g, int bottom_order, int top_order)
        : group_(g), bottom_order_(bottom_order), top_order_(top_order) {}

    GroupSpec group_;
    int bottom_order_;
    int top_order_;
    std::vector<PartitionDiagram> basis_;
    std::vector<Scalar> weights_;
};

template <typename Scalar>
EquivariantLayer<Scalar> build_layer(const GroupSpec& g, int bottom_order, int top_order,
                                     std::vector<Scalar> weights) {
    return EquivariantLayer<Scalar>::build(g, bottom_order, top_order, std::move(weights));
}

}  // namespace eqmult
