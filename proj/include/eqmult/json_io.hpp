#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "eqmult/bench.hpp"
#include "eqmult/diagram.hpp"
#include "eqmult/factor.hpp"
#include "eqmult/layer.hpp"
#include "eqmult/op_count.hpp"
#include "eqmult/permutation.hpp"
#include "eqmult/tensor_vector.hpp"

namespace eqmult {

using nlohmann::json;

inline Group group_from_string(const std::string& name) {
    if (name == "O") return Group::orthogonal;
    if (name == "SO") return Group::special_orthogonal;
    if (name == "Sp") return Group::symplectic;
    if (name == "Sn") return Group::symmetric;
    fail(ErrorCode::bad_arguments, "unknown group '" + name + "' (expected O, SO, Sp, or Sn)");
}

inline json diagram_to_json(const PartitionDiagram& d) {
    json blocks = json::array();
    for (const auto& block : d.blocks()) blocks.push_back(block);
    return json{{"l", d.top_count()}, {"k", d.bottom_count()}, {"blocks", blocks}};
}

inline PartitionDiagram diagram_from_json(const json& j) {
    require(j.is_object() && j.contains("l") && j.contains("k") && j.contains("blocks"),
            ErrorCode::bad_arguments, "diagram JSON needs fields l, k, blocks");
    std::vector<Block> blocks;
    for (const auto& block : j.at("blocks")) {
        blocks.push_back(block.get<Block>());
    }
    return PartitionDiagram(j.at("l").get<int>(), j.at("k").get<int>(), std::move(blocks));
}

template <typename Scalar>
json vector_to_json(const TensorVector<Scalar>& v) {
    return json{{"n", v.n()}, {"order", v.order()}, {"coeffs", v.coeffs()}};
}

template <typename Scalar>
TensorVector<Scalar> vector_from_json(const json& j) {
    require(j.is_object() && j.contains("n") && j.contains("order") && j.contains("coeffs"),
            ErrorCode::bad_arguments, "vector JSON needs fields n, order, coeffs");
    return TensorVector<Scalar>(j.at("n").get<int>(), j.at("order").get<int>(),
                                j.at("coeffs").get<std::vector<Scalar>>());
}

inline json permutation_to_json(const Permutation& p) { return json(p.one_line()); }

inline Permutation permutation_from_json(const json& j) {
    return Permutation(j.get<std::vector<int>>());
}

inline json atom_to_json(const PlanarAtom& atom) {
    return json{{"type", atom_type_name(atom.type)},
                {"l", atom.top_order()},
                {"k", atom.bottom_order()},
                {"diagram", diagram_to_json(atom.diagram)}};
}

inline json factorization_to_json(const Factorization& f, const PlanarDecomposition& dec) {
    json atoms = json::array();
    for (const auto& atom : dec.atoms) atoms.push_back(atom_to_json(atom));
    return json{{"sigma_k", permutation_to_json(f.sigma_k)},
                {"planar", diagram_to_json(f.planar)},
                {"sigma_l", permutation_to_json(f.sigma_l)},
                {"atoms", atoms}};
}

inline json tally_to_json(const OpTally& t) {
    return json{{"real_mults", t.real_mults},
                {"real_adds", t.real_adds},
                {"formal_mults", t.formal_mults},
                {"formal_adds", t.formal_adds}};
}

inline json op_report_to_json(const OpReport& report) {
    json stages = json::array();
    for (const auto& stage : report.stages) {
        json row = tally_to_json(stage.ops);
        row["stage"] = stage.stage;
        stages.push_back(row);
    }
    return json{{"stages", stages}, {"total", tally_to_json(report.total)}};
}

template <typename Scalar>
json export_weights(const EquivariantLayer<Scalar>& layer) {
    return json{{"group", group_name(layer.group().group)},
                {"n", layer.group().n},
                {"k", layer.bottom_order()},
                {"l", layer.top_order()},
                {"basis_checksum", layer.checksum()},
                {"weights", layer.weights()}};
}

template <typename Scalar>
EquivariantLayer<Scalar> import_weights(const GroupSpec& g, int bottom_order, int top_order,
                                        const json& j) {
    require(j.is_object() && j.contains("group") && j.contains("n") && j.contains("k") &&
                j.contains("l") && j.contains("basis_checksum") && j.contains("weights"),
            ErrorCode::bad_arguments,
            "weight JSON needs fields group, n, k, l, basis_checksum, weights");
    require(group_from_string(j.at("group").get<std::string>()) == g.group &&
                j.at("n").get<int>() == g.n,
            ErrorCode::group_mismatch, "weight file was written for a different group");
    require(j.at("k").get<int>() == bottom_order && j.at("l").get<int>() == top_order,
            ErrorCode::weight_count_mismatch, "weight file was written for different (k, l)");
    auto layer = EquivariantLayer<Scalar>::build(g, bottom_order, top_order,
                                                 j.at("weights").get<std::vector<Scalar>>());
    require(j.at("basis_checksum").get<std::string>() == layer.checksum(),
            ErrorCode::checksum_mismatch,
            "basis checksum mismatch: incompatible enumeration order");
    return layer;
}

inline json bench_case_to_json(const BenchCase& c) {
    json row{{"n", c.n},
             {"diagram_index", c.diagram_index},
             {"diagram", c.diagram},
             {"naive_seconds", c.naive_seconds},
             {"fast_seconds", c.fast_seconds},
             {"naive_ops", tally_to_json(c.naive_ops)},
             {"fast_ops", tally_to_json(c.fast_ops)}};
    if (c.oracle_checked) row["oracle_match"] = c.oracle_match;
    return row;
}

inline json bench_report_to_json(const BenchReport& report) {
    json n_list = json::array();
    for (int n : report.config.n_list) n_list.push_back(n);
    json cases = json::array();
    for (const auto& c : report.cases) cases.push_back(bench_case_to_json(c));
    json aggregates = json::array();
    for (const auto& a : report.aggregates) {
        aggregates.push_back(json{{"diagram_index", a.diagram_index},
                                  {"diagram", a.diagram},
                                  {"naive_formal_mult_slope", a.naive_formal_mult_slope},
                                  {"fast_formal_mult_slope", a.fast_formal_mult_slope},
                                  {"naive_time_slope", a.naive_time_slope},
                                  {"fast_time_slope", a.fast_time_slope}});
    }
    return json{{"config",
                 json{{"group", group_name(report.config.group)},
                      {"n_list", n_list},
                      {"k", report.config.bottom_order},
                      {"l", report.config.top_order},
                      {"diagram_count", report.config.diagram_count},
                      {"repeats", report.config.repeats},
                      {"seed", report.config.seed},
                      {"check_oracle", report.config.check_oracle}}},
                {"cases", cases},
                {"aggregates", aggregates}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::file_not_found, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        fail(ErrorCode::bad_arguments, "invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace eqmult
