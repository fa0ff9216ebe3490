// Command line front end: mult, oracle, factor, enumerate, and bench
// subcommands with JSON input and output. The result is a single JSON
// document on stdout; errors are reported as {"error": {code, message}} with
// a nonzero exit status.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqmult/eqmult.hpp"
#include "eqmult/json_io.hpp"

namespace {

using eqmult::json;

struct GroupArgs {
    std::string group;
    int n = 2;
};

eqmult::GroupSpec make_group(const GroupArgs& args) {
    return eqmult::GroupSpec(eqmult::group_from_string(args.group), args.n);
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    eqmult::require(!out.empty(), eqmult::ErrorCode::bad_arguments,
                    "expected a comma separated integer list");
    return out;
}

int run_mult(const GroupArgs& gargs, const std::string& diagram_path,
             const std::string& vector_path, const std::string& weights_path, bool check_oracle,
             bool count_ops) {
    const auto g = make_group(gargs);
    const auto v = eqmult::vector_from_json<double>(eqmult::load_json_file(vector_path));
    eqmult::OpCounter counter;
    eqmult::OpCounter* counter_ptr = count_ops ? &counter : nullptr;

    eqmult::TensorVector<double> result;
    bool oracle_match = true;
    if (!weights_path.empty()) {
        eqmult::require(diagram_path.empty(), eqmult::ErrorCode::bad_arguments,
                        "--diagram and --weights are mutually exclusive");
        const auto weight_json = eqmult::load_json_file(weights_path);
        eqmult::require(weight_json.is_object() && weight_json.contains("k") &&
                            weight_json.contains("l"),
                        eqmult::ErrorCode::bad_arguments, "weight JSON needs fields k and l");
        const auto layer = eqmult::import_weights<double>(
            g, weight_json.at("k").get<int>(), weight_json.at("l").get<int>(), weight_json);
        eqmult::require(v.order() == layer.bottom_order(), eqmult::ErrorCode::size_mismatch,
                        "vector order does not match the layer");
        result = layer.apply(v, counter_ptr);
        if (check_oracle) {
            eqmult::TensorVector<double> dense_sum(g.n, layer.top_order());
            for (std::size_t i = 0; i < layer.basis().size(); ++i) {
                const auto part =
                    eqmult::naive_mult(eqmult::dense_matrix(g, layer.basis()[i]), v);
                for (std::int64_t off = 0; off < dense_sum.size(); ++off) {
                    dense_sum[off] += layer.weights()[i] * part[off];
                }
            }
            oracle_match = result == dense_sum;
        }
    } else {
        eqmult::require(!diagram_path.empty(), eqmult::ErrorCode::bad_arguments,
                        "one of --diagram or --weights is required");
        const auto d = eqmult::diagram_from_json(eqmult::load_json_file(diagram_path));
        result = eqmult::matrix_mult(g, d, v, counter_ptr);
        if (check_oracle) {
            oracle_match = result == eqmult::naive_mult(eqmult::dense_matrix(g, d), v);
        }
    }

    json out = eqmult::vector_to_json(result);
    if (check_oracle) out["oracle_match"] = oracle_match;
    if (count_ops) out["op_report"] = eqmult::op_report_to_json(eqmult::op_report(counter));
    emit(out);
    return check_oracle && !oracle_match ? 1 : 0;
}

int run_oracle(const GroupArgs& gargs, const std::string& diagram_path,
               const std::string& csv_path) {
    const auto g = make_group(gargs);
    const auto d = eqmult::diagram_from_json(eqmult::load_json_file(diagram_path));
    const auto m = eqmult::dense_matrix(g, d);
    json header{{"rows", m.rows()},
                {"cols", m.cols()},
                {"group", eqmult::group_name(g.group)},
                {"n", g.n},
                {"diagram", eqmult::diagram_to_json(d)}};
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        eqmult::require(out.good(), eqmult::ErrorCode::file_not_found,
                        "cannot write " + csv_path);
        for (std::int64_t r = 0; r < m.rows(); ++r) {
            for (std::int64_t c = 0; c < m.cols(); ++c) {
                out << m.entry(r, c) << (c + 1 < m.cols() ? "," : "");
            }
            out << "\n";
        }
        header["csv"] = csv_path;
    }
    emit(header);
    return 0;
}

int run_factor(const GroupArgs& gargs, const std::string& diagram_path) {
    const auto g = make_group(gargs);
    const auto d = eqmult::diagram_from_json(eqmult::load_json_file(diagram_path));
    const auto f = eqmult::factor(g, d);
    const auto dec = eqmult::split_planar(g, f.planar);
    emit(eqmult::factorization_to_json(f, dec));
    return 0;
}

int run_enumerate(const GroupArgs& gargs, int k, int l) {
    const auto g = make_group(gargs);
    const auto diagrams = eqmult::enumerate_diagrams(g, k, l);
    json list = json::array();
    for (const auto& d : diagrams) list.push_back(eqmult::diagram_to_json(d));
    emit(json{{"group", eqmult::group_name(g.group)},
              {"n", g.n},
              {"k", k},
              {"l", l},
              {"count", diagrams.size()},
              {"diagrams", list}});
    return 0;
}

int run_bench(const std::string& group, const std::string& n_list, int k, int l, int diagrams,
              int repeats, std::uint64_t seed, bool check_oracle) {
    eqmult::BenchConfig config;
    config.group = eqmult::group_from_string(group);
    config.n_list = parse_int_list(n_list);
    config.bottom_order = k;
    config.top_order = l;
    config.diagram_count = diagrams;
    config.repeats = repeats;
    config.seed = seed;
    config.check_oracle = check_oracle;
    const auto report = eqmult::run_bench(config);
    emit(eqmult::bench_report_to_json(report));
    for (const auto& c : report.cases) {
        if (c.oracle_checked && !c.oracle_match) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning-set matrix multiplication for group equivariant layers"};
    app.require_subcommand(1);

    GroupArgs gargs;
    std::string diagram_path, vector_path, weights_path, csv_path;
    bool check_oracle = false, count_ops = false;
    int k = 0, l = 0;

    auto add_group_options = [&gargs](CLI::App* cmd, bool need_n) {
        cmd->add_option("--group", gargs.group, "group: O, SO, Sp, or Sn")->required();
        auto* n_opt = cmd->add_option("--n", gargs.n, "dimension of R^n");
        if (need_n) n_opt->required();
    };

    auto* mult = app.add_subcommand("mult", "multiply a vector by a spanning-set matrix");
    add_group_options(mult, true);
    mult->add_option("--diagram", diagram_path, "diagram JSON file");
    mult->add_option("--vector", vector_path, "vector JSON file")->required();
    mult->add_option("--weights", weights_path, "weight file for a full layer");
    mult->add_flag("--check-oracle", check_oracle, "compare against the dense oracle");
    mult->add_flag("--count-ops", count_ops, "report operation counts");

    auto* oracle = app.add_subcommand("oracle", "materialise the dense spanning-set matrix");
    add_group_options(oracle, true);
    oracle->add_option("--diagram", diagram_path, "diagram JSON file")->required();
    oracle->add_option("--csv", csv_path, "write entries to this CSV file");

    auto* factor_cmd = app.add_subcommand("factor", "factor a diagram into sigma_k, planar, sigma_l");
    add_group_options(factor_cmd, true);
    factor_cmd->add_option("--diagram", diagram_path, "diagram JSON file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "list the spanning diagrams for (group, k, l)");
    add_group_options(enumerate, false);
    enumerate->add_option("--k", k, "bottom row size (input order)")->required();
    enumerate->add_option("--l", l, "top row size (output order)")->required();

    std::string bench_group, n_list;
    int bench_k = 0, bench_l = 0, bench_diagrams = 0, bench_repeats = 3;
    std::uint64_t bench_seed = 0;
    bool bench_oracle = false;
    auto* bench = app.add_subcommand("bench", "compare naive and fast multiplication");
    bench->add_option("--group", bench_group, "group: O, SO, Sp, or Sn")->required();
    bench->add_option("--n-list", n_list, "comma separated dimensions")->required();
    bench->add_option("--k", bench_k, "bottom row size")->required();
    bench->add_option("--l", bench_l, "top row size")->required();
    bench->add_option("--diagrams", bench_diagrams, "number of seeded diagrams (0 = all)");
    bench->add_option("--repeats", bench_repeats, "timing repetitions per case");
    bench->add_option("--seed", bench_seed, "seed for diagrams and vectors");
    bench->add_flag("--check-oracle", bench_oracle, "verify every case against the oracle");

    try {
        app.parse(argc, argv);
        if (mult->parsed()) {
            return run_mult(gargs, diagram_path, vector_path, weights_path, check_oracle,
                            count_ops);
        }
        if (oracle->parsed()) return run_oracle(gargs, diagram_path, csv_path);
        if (factor_cmd->parsed()) return run_factor(gargs, diagram_path);
        if (enumerate->parsed()) return run_enumerate(gargs, k, l);
        if (bench->parsed()) {
            return run_bench(bench_group, n_list, bench_k, bench_l, bench_diagrams,
                             bench_repeats, bench_seed, bench_oracle);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit(json{{"error", json{{"code", "BadArguments"}, {"message", e.what()}}}});
        return 2;
    } catch (const eqmult::Error& e) {
        emit(json{{"error",
                   json{{"code", eqmult::error_code_name(e.code())}, {"message", e.what()}}}});
        return 1;
    } catch (const std::exception& e) {
        emit(json{{"error", json{{"code", "Internal"}, {"message", e.what()}}}});
        return 1;
    }
    return 0;
}
