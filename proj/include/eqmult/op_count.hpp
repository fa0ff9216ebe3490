#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eqmult {

// Two counting conventions are kept side by side. The "real" counts are the
// arithmetic operations the kernel actually executes: delta and epsilon
// contractions are gathers with (signed) adds, copies and index moves are
// free. The "formal" counts charge one multiplication per coefficient-by-entry
// product the contraction formula writes down (n per contracted output
// coefficient, n! per free-vertex input tuple, one per dense matrix entry),
// which is the convention the complexity formulas are stated in.
struct OpTally {
    std::uint64_t real_mults = 0;
    std::uint64_t real_adds = 0;
    std::uint64_t formal_mults = 0;
    std::uint64_t formal_adds = 0;

    OpTally& operator+=(const OpTally& other) {
        real_mults += other.real_mults;
        real_adds += other.real_adds;
        formal_mults += other.formal_mults;
        formal_adds += other.formal_adds;
        return *this;
    }

    friend bool operator==(const OpTally&, const OpTally&) = default;
};

struct StageOps {
    std::string stage;
    OpTally ops;
};

class OpCounter {
public:
    void add_stage(std::string stage, OpTally ops) {
        stages_.push_back({std::move(stage), ops});
    }

    const std::vector<StageOps>& stages() const { return stages_; }

    OpTally total() const {
        OpTally sum;
        for (const auto& s : stages_) sum += s.ops;
        return sum;
    }

    void reset() { stages_.clear(); }

private:
    std::vector<StageOps> stages_;
};

struct OpReport {
    std::vector<StageOps> stages;
    OpTally total;
};

inline OpReport op_report(const OpCounter& counter) {
    return OpReport{counter.stages(), counter.total()};
}

}  // namespace eqmult
