#pragma once

#include <numeric>
#include <vector>

#include "eqmult/error.hpp"

namespace eqmult {

// Element of S_m in one-line notation, 1-based: entry at position i is sigma(i).
// The empty permutation (m = 0) is valid and acts on order-0 tensors as a no-op.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : map_(std::move(one_line)) {
        const int m = static_cast<int>(map_.size());
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        for (int value : map_) {
            require(value >= 1 && value <= m, ErrorCode::bad_arguments,
                    "permutation entry out of range");
            require(!seen[static_cast<std::size_t>(value - 1)], ErrorCode::bad_arguments,
                    "permutation entry repeated");
            seen[static_cast<std::size_t>(value - 1)] = true;
        }
    }

    static Permutation identity(int m) {
        std::vector<int> v(static_cast<std::size_t>(m));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    // Cycles in the usual notation: {1,5,2,4} means 1->5, 5->2, 2->4, 4->1.
    static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
        std::vector<int> v(static_cast<std::size_t>(m));
        std::iota(v.begin(), v.end(), 1);
        for (const auto& cycle : cycles) {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const int from = cycle[i];
                const int to = cycle[(i + 1) % cycle.size()];
                require(from >= 1 && from <= m, ErrorCode::bad_arguments,
                        "cycle entry out of range");
                v[static_cast<std::size_t>(from - 1)] = to;
            }
        }
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(map_.size()); }

    int operator()(int i) const { return map_[static_cast<std::size_t>(i - 1)]; }

    Permutation inverse() const {
        std::vector<int> inv(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i) {
            inv[static_cast<std::size_t>(map_[i] - 1)] = static_cast<int>(i) + 1;
        }
        return Permutation(std::move(inv));
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < map_.size(); ++i) {
            if (map_[i] != static_cast<int>(i) + 1) return false;
        }
        return true;
    }

    const std::vector<int>& one_line() const { return map_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> map_;
};

}  // namespace eqmult
