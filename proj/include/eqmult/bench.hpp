#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "eqmult/dense.hpp"
#include "eqmult/diagram.hpp"
#include "eqmult/layer.hpp"
#include "eqmult/multiply.hpp"
#include "eqmult/prng.hpp"

namespace eqmult {

struct BenchConfig {
    Group group = Group::orthogonal;
    std::vector<int> n_list;
    int bottom_order = 0;  // k
    int top_order = 0;     // l
    int diagram_count = 0;  // 0 keeps every eligible diagram
    int repeats = 3;
    std::uint64_t seed = 0;
    bool check_oracle = false;
};

struct BenchCase {
    int n = 0;
    int diagram_index = 0;
    std::string diagram;
    double naive_seconds = 0;
    double fast_seconds = 0;
    OpTally naive_ops;
    OpTally fast_ops;
    bool oracle_checked = false;
    bool oracle_match = false;
};

struct BenchDiagramAggregate {
    int diagram_index = 0;
    std::string diagram;
    double naive_formal_mult_slope = 0;
    double fast_formal_mult_slope = 0;
    double naive_time_slope = 0;
    double fast_time_slope = 0;
};

struct BenchReport {
    BenchConfig config;
    std::vector<BenchCase> cases;
    std::vector<BenchDiagramAggregate> aggregates;
};

namespace detail {

inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto count = static_cast<double>(x.size());
    if (x.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(std::max(y[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

template <typename Fn>
double time_best_of(int repeats, Fn&& fn) {
    double best = 0;
    for (int r = 0; r < std::max(1, repeats); ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        const double seconds = std::chrono::duration<double>(stop - start).count();
        if (r == 0 || seconds < best) best = seconds;
    }
    return best;
}

}  // namespace detail

// Times and counts the naive dense multiplication against the staged fast
// path on a seeded workload. Only diagrams admissible at every n in the list
// are benchmarked, so per-diagram slopes across n are well defined; dense
// matrix construction is excluded from the naive timing. Wall times are the
// minimum over the configured repeats; op counts and vectors are seeded, so
// everything except the *_seconds fields is reproducible for a fixed seed.
inline BenchReport run_bench(const BenchConfig& config) {
    require(!config.n_list.empty(), ErrorCode::bad_arguments, "empty n list");
    BenchReport report;
    report.config = config;

    int min_n = config.n_list.front();
    for (int n : config.n_list) min_n = std::min(min_n, n);

    std::vector<PartitionDiagram> pool =
        enumerate_diagrams(GroupSpec(config.group, min_n), config.bottom_order, config.top_order);
    {
        std::vector<PartitionDiagram> eligible;
        for (const auto& d : pool) {
            bool ok = true;
            for (int n : config.n_list) ok = ok && is_admissible(GroupSpec(config.group, n), d);
            if (ok) eligible.push_back(d);
        }
        pool = std::move(eligible);
    }

    SplitMix64 rng(config.seed);
    std::vector<int> picked(pool.size());
    std::iota(picked.begin(), picked.end(), 0);
    if (config.diagram_count > 0 && config.diagram_count < static_cast<int>(pool.size())) {
        for (std::size_t i = pool.size() - 1; i > 0; --i) {
            const auto j = static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(i)));
            std::swap(picked[i], picked[j]);
        }
        picked.resize(static_cast<std::size_t>(config.diagram_count));
        std::sort(picked.begin(), picked.end());
    }

    for (int index : picked) {
        const PartitionDiagram& d = pool[static_cast<std::size_t>(index)];
        std::vector<double> ns, naive_mults, fast_mults, naive_times, fast_times;
        for (int n : config.n_list) {
            const GroupSpec g(config.group, n);
            BenchCase row;
            row.n = n;
            row.diagram_index = index;
            row.diagram = d.repr();

            SplitMix64 case_rng(config.seed ^ fnv1a64(d.repr() + "@" + std::to_string(n)));
            const auto v =
                random_integer_vector<double>(n, config.bottom_order, -9, 9, case_rng);

            const DenseMatrix m = dense_matrix(g, d);  // construction not timed
            TensorVector<double> naive_out(n, config.top_order);
            row.naive_seconds =
                detail::time_best_of(config.repeats, [&] { naive_out = naive_mult(m, v); });
            OpCounter naive_counter;
            naive_mult(m, v, &naive_counter);
            row.naive_ops = naive_counter.total();

            TensorVector<double> fast_out(n, config.top_order);
            row.fast_seconds =
                detail::time_best_of(config.repeats, [&] { fast_out = matrix_mult(g, d, v); });
            OpCounter fast_counter;
            matrix_mult(g, d, v, &fast_counter);
            row.fast_ops = fast_counter.total();

            if (config.check_oracle) {
                row.oracle_checked = true;
                row.oracle_match = fast_out == naive_out;
            }
            ns.push_back(static_cast<double>(n));
            naive_mults.push_back(static_cast<double>(row.naive_ops.formal_mults));
            fast_mults.push_back(static_cast<double>(row.fast_ops.formal_mults));
            naive_times.push_back(row.naive_seconds);
            fast_times.push_back(row.fast_seconds);
            report.cases.push_back(std::move(row));
        }
        BenchDiagramAggregate agg;
        agg.diagram_index = index;
        agg.diagram = d.repr();
        agg.naive_formal_mult_slope = detail::loglog_slope(ns, naive_mults);
        agg.fast_formal_mult_slope = detail::loglog_slope(ns, fast_mults);
        agg.naive_time_slope = detail::loglog_slope(ns, naive_times);
        agg.fast_time_slope = detail::loglog_slope(ns, fast_times);
        report.aggregates.push_back(std::move(agg));
    }
    return report;
}

}  // namespace eqmult
