#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "eqmult/json_io.hpp"

namespace {

using nlohmann::json;

struct CliResult {
    int exit_code;
    json output;
    std::string raw;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(EQMULT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
        output.append(buffer, got);
    }
    const int status = pclose(pipe);
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.raw = output;
    if (!output.empty()) result.output = json::parse(output, nullptr, false);
    return result;
}

std::filesystem::path write_temp(const std::string& name, const json& content) {
    const auto path = std::filesystem::temp_directory_path() / ("eqmult_cli_" + name);
    std::ofstream out(path);
    out << content.dump();
    return path;
}

json strip_times(json j) {
    for (auto& row : j["cases"]) {
        row.erase("naive_seconds");
        row.erase("fast_seconds");
    }
    for (auto& row : j["aggregates"]) {
        row.erase("naive_time_slope");
        row.erase("fast_time_slope");
    }
    return j;
}

}  // namespace

TEST_CASE("mult subcommand on the identity diagram") {
    const auto diagram = write_temp("id11.json", json{{"l", 1}, {"k", 1}, {"blocks", {{1, 2}}}});
    const auto vector =
        write_temp("v2.json", json{{"n", 2}, {"order", 1}, {"coeffs", {3.0, 7.0}}});
    const auto result = run_cli("mult --group O --n 2 --diagram " + diagram.string() +
                                " --vector " + vector.string() + " --check-oracle --count-ops");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.at("coeffs") == json({3.0, 7.0}));
    CHECK(result.output.at("oracle_match") == true);
    CHECK(result.output.at("op_report").at("total").at("real_mults") == 0);
}

TEST_CASE("enumerate subcommand lists the canonical basis") {
    const auto result = run_cli("enumerate --group O --k 2 --l 2");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.at("count") == 3);
    CHECK(result.output.at("diagrams")[0].at("blocks") == json({{1, 2}, {3, 4}}));
}

TEST_CASE("factor subcommand reproduces the worked permutations") {
    const auto diagram = write_temp(
        "d1.json",
        json{{"l", 5}, {"k", 5}, {"blocks", {{2, 4}, {6, 7}, {5, 8}, {3, 9}, {1, 10}}}});
    const auto result = run_cli("factor --group O --n 2 --diagram " + diagram.string());
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.at("sigma_k") == json({5, 4, 3, 1, 2}));
    CHECK(result.output.at("sigma_l") == json({3, 1, 4, 2, 5}));
    CHECK(result.output.at("atoms").size() == 3);
}

TEST_CASE("oracle subcommand emits the header and CSV") {
    const auto diagram = write_temp("cup.json", json{{"l", 0}, {"k", 2}, {"blocks", {{1, 2}}}});
    const auto csv = std::filesystem::temp_directory_path() / "eqmult_cli_oracle.csv";
    const auto result = run_cli("oracle --group Sp --n 2 --diagram " + diagram.string() +
                                " --csv " + csv.string());
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.at("rows") == 1);
    CHECK(result.output.at("cols") == 4);
    CHECK(result.output.at("group") == "Sp");
    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "0,1,-1,0");
}

TEST_CASE("weights path applies a whole layer") {
    const auto g = eqmult::GroupSpec::orthogonal(2);
    const auto layer = eqmult::build_layer<double>(g, 2, 2, {1.0, 1.0, 1.0});
    const auto weights = write_temp("w.json", eqmult::export_weights(layer));
    const auto vector = write_temp(
        "v4.json", json{{"n", 2}, {"order", 2}, {"coeffs", {1.0, 2.0, 3.0, 4.0}}});

    const auto result = run_cli("mult --group O --n 2 --weights " + weights.string() +
                                " --vector " + vector.string() + " --check-oracle");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.at("coeffs") == json({7.0, 5.0, 5.0, 13.0}));
    CHECK(result.output.at("oracle_match") == true);

    SECTION("tampered checksum fails with ChecksumMismatch") {
        json tampered = eqmult::export_weights(layer);
        tampered["basis_checksum"] = "0000000000000000";
        const auto bad_file = write_temp("w_bad.json", tampered);
        const auto bad = run_cli("mult --group O --n 2 --weights " + bad_file.string() +
                                 " --vector " + vector.string());
        REQUIRE(bad.exit_code == 1);
        CHECK(bad.output.at("error").at("code") == "ChecksumMismatch");
    }
}

TEST_CASE("errors are structured JSON with nonzero exit") {
    SECTION("missing file") {
        const auto result = run_cli("factor --group O --n 2 --diagram /nonexistent.json");
        CHECK(result.exit_code == 1);
        CHECK(result.output.at("error").at("code") == "FileNotFound");
    }
    SECTION("unknown group") {
        const auto diagram =
            write_temp("id.json", json{{"l", 1}, {"k", 1}, {"blocks", {{1, 2}}}});
        const auto result = run_cli("factor --group XX --n 2 --diagram " + diagram.string());
        CHECK(result.exit_code == 1);
        CHECK(result.output.at("error").at("code") == "BadArguments");
    }
    SECTION("missing required flag") {
        const auto result = run_cli("enumerate --group O --k 2");
        CHECK(result.exit_code == 2);
        CHECK(result.output.at("error").at("code") == "BadArguments");
    }
    SECTION("inadmissible diagram") {
        const auto diagram =
            write_temp("bad.json", json{{"l", 0}, {"k", 2}, {"blocks", {{1}, {2}}}});
        const auto result = run_cli("mult --group O --n 2 --diagram " + diagram.string() +
                                    " --vector " +
                                    write_temp("v4b.json", json{{"n", 2},
                                                                {"order", 2},
                                                                {"coeffs", {1.0, 2.0, 3.0, 4.0}}})
                                        .string());
        CHECK(result.exit_code == 1);
        CHECK(result.output.at("error").at("code") == "KindMismatch");
    }
}

TEST_CASE("bench reports are seed-deterministic up to wall times") {
    const std::string args =
        "bench --group O --n-list 2,4 --k 2 --l 2 --repeats 1 --seed 7 --check-oracle";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    REQUIRE(second.exit_code == 0);
    CHECK(strip_times(first.output) == strip_times(second.output));
    for (const auto& row : first.output.at("cases")) {
        CHECK(row.at("oracle_match") == true);
    }
}
