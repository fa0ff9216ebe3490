#pragma once

#include <cstdint>
#include <vector>

#include "eqmult/tensor_vector.hpp"

namespace eqmult {

// splitmix64: small, seedable, identical across platforms. Used wherever a
// reproducible stream is promised (bench cases, seeded test vectors).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi], inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(next() % span);
    }

private:
    std::uint64_t state_;
};

template <typename Scalar>
TensorVector<Scalar> random_integer_vector(int n, int order, std::int64_t lo, std::int64_t hi,
                                           SplitMix64& rng) {
    TensorVector<Scalar> v(n, order);
    for (std::int64_t off = 0; off < v.size(); ++off) {
        v[off] = static_cast<Scalar>(rng.next_int(lo, hi));
    }
    return v;
}

}  // namespace eqmult
