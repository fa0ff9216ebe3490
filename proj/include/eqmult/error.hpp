#pragma once

#include <stdexcept>
#include <string>

namespace eqmult {

enum class ErrorCode {
    overlapping_blocks,
    uncovered_vertex,
    empty_block,
    kind_mismatch,
    size_mismatch,
    index_out_of_range,
    parity_error,
    not_a_group_element,
    mixed_shapes,
    weight_count_mismatch,
    checksum_mismatch,
    group_mismatch,
    not_planar,
    not_canonical,
    bad_arguments,
    file_not_found,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::overlapping_blocks: return "OverlappingBlocks";
        case ErrorCode::uncovered_vertex: return "UncoveredVertex";
        case ErrorCode::empty_block: return "EmptyBlock";
        case ErrorCode::kind_mismatch: return "KindMismatch";
        case ErrorCode::size_mismatch: return "SizeMismatch";
        case ErrorCode::index_out_of_range: return "IndexOutOfRange";
        case ErrorCode::parity_error: return "ParityError";
        case ErrorCode::not_a_group_element: return "NotAGroupElement";
        case ErrorCode::mixed_shapes: return "MixedShapes";
        case ErrorCode::weight_count_mismatch: return "WeightCountMismatch";
        case ErrorCode::checksum_mismatch: return "ChecksumMismatch";
        case ErrorCode::group_mismatch: return "GroupMismatch";
        case ErrorCode::not_planar: return "NotPlanar";
        case ErrorCode::not_canonical: return "NotCanonical";
        case ErrorCode::bad_arguments: return "BadArguments";
        case ErrorCode::file_not_found: return "FileNotFound";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace eqmult
