#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eqmult/error.hpp"

namespace eqmult {

inline std::int64_t pow_int(int base, int exponent) {
    std::int64_t result = 1;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

// Tuples in [n]^order are laid out flat with the last tensor factor varying
// fastest: offset = sum_j (digit_j - 1) * n^(order - j), digits 1-based.
inline std::int64_t flat_offset(std::span<const int> digits, int n) {
    std::int64_t offset = 0;
    for (int d : digits) offset = offset * n + (d - 1);
    return offset;
}

inline std::vector<int> digits_of(std::int64_t offset, int n, int order) {
    std::vector<int> digits(static_cast<std::size_t>(order));
    for (int j = order - 1; j >= 0; --j) {
        digits[static_cast<std::size_t>(j)] = static_cast<int>(offset % n) + 1;
        offset /= n;
    }
    return digits;
}

// Coefficients of a vector in (R^n)^{tensor order}, length n^order. Order 0 is
// the scalar line: a single coefficient. Scalar is any ring-like type; the
// test suites use std::int64_t for bit-exact checks, layers use double.
template <typename Scalar>
class TensorVector {
public:
    TensorVector() : coeffs_(1, Scalar{0}) {}

    TensorVector(int n, int order)
        : n_(n), order_(order), coeffs_(static_cast<std::size_t>(pow_int(n, order)), Scalar{0}) {
        require(n_ >= 1 && order_ >= 0, ErrorCode::bad_arguments, "bad tensor shape");
    }

    TensorVector(int n, int order, std::vector<Scalar> coeffs)
        : n_(n), order_(order), coeffs_(std::move(coeffs)) {
        require(n_ >= 1 && order_ >= 0, ErrorCode::bad_arguments, "bad tensor shape");
        require(static_cast<std::int64_t>(coeffs_.size()) == pow_int(n_, order_),
                ErrorCode::size_mismatch, "coefficient count is not n^order");
    }

    int n() const { return n_; }
    int order() const { return order_; }
    std::int64_t size() const { return static_cast<std::int64_t>(coeffs_.size()); }

    Scalar& operator[](std::int64_t offset) { return coeffs_[static_cast<std::size_t>(offset)]; }
    const Scalar& operator[](std::int64_t offset) const {
        return coeffs_[static_cast<std::size_t>(offset)];
    }

    Scalar& at(std::span<const int> digits) { return coeffs_[flat_offset(digits, n_)]; }
    const Scalar& at(std::span<const int> digits) const {
        return coeffs_[flat_offset(digits, n_)];
    }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    std::vector<Scalar>& coeffs() { return coeffs_; }

    friend bool operator==(const TensorVector&, const TensorVector&) = default;

private:
    int n_ = 1;
    int order_ = 0;
    std::vector<Scalar> coeffs_;
};

}  // namespace eqmult
