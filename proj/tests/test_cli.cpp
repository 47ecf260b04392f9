#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ocp/skeleton_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(OCP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/ocp_cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const std::string kXFile =
    write_temp("x.poset", "d 5\n0 2\n1 2\n2 3\n2 4\nnames: a b c g h\n");

}  // namespace

TEST_CASE("stats on the witness poset") {
    const RunResult r = run("stats " + kXFile);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("edges_order: 24") != std::string::npos);
    CHECK(r.out.find("edges_chain: 24") != std::string::npos);
    CHECK(r.out.find("linear_extensions: 4") != std::string::npos);
    CHECK(r.out.find("x_free: false") != std::string::npos);
}

TEST_CASE("stats as JSON") {
    const RunResult r = run("stats --format json " + kXFile);
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["d"] == 5);
    CHECK(parsed["ideals"] == 8);
    CHECK(parsed["antichains"] == 8);
    CHECK(parsed["edges_order"] == 24);
    CHECK(parsed["edges_chain"] == 24);
    CHECK(parsed["linear_extensions"] == 4);
    CHECK(parsed["maximal_chains"] == 4);
    CHECK(parsed["x_free"] == false);
}

TEST_CASE("stats on the one-element poset") {
    const std::string path = write_temp("single.poset", "d 1\n");
    const RunResult r = run("stats --format json " + path);
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["ideals"] == 2);
    CHECK(parsed["antichains"] == 2);
    CHECK(parsed["edges_order"] == 1);
    CHECK(parsed["edges_chain"] == 1);
    CHECK(parsed["linear_extensions"] == 1);
}

TEST_CASE("exit codes: parse, cycle, size, config") {
    const std::string bad = write_temp("bad.poset", "d 2\n0 x\n");
    CHECK(run("stats " + bad).exit_code == 2);

    const std::string cyclic = write_temp("cyclic.poset", "d 2\n0 1\n1 0\n");
    CHECK(run("stats " + cyclic).exit_code == 3);

    const std::string big = write_temp("big.poset", "d 10\n0 1\n");
    CHECK(run("check --oracle " + big).exit_code == 4);

    CHECK(run("suite --exhaustive-max-d 9 --random-trials 0").exit_code == 5);
    const std::string bad_cfg = write_temp("bad_config.json", "{\"oracle_max_d\": 11}");
    CHECK(run("suite --config " + bad_cfg).exit_code == 5);
    CHECK(run("suite --config /nonexistent.json").exit_code == 5);
}

TEST_CASE("bijection table") {
    const RunResult r = run("bijection " + kXFile);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("({}, {a,b,c}) -> ({c}, {a,b})") != std::string::npos);
    CHECK(r.out.find("pairs: 24") != std::string::npos);

    const RunResult json = run("bijection --format json " + kXFile);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["count"] == 24);
    CHECK(parsed["rows"].size() == 24);
    CHECK(parsed["round_trip_ok"] == true);

    const std::string single = write_temp("single2.poset", "d 1\n");
    const auto one = nlohmann::json::parse(run("bijection --format json " + single).out);
    CHECK(one["count"] == 1);
    CHECK(one["rows"][0]["I"].empty());
    CHECK(one["rows"][0]["J"] == nlohmann::json::array({0}));
    CHECK(one["rows"][0]["A"] == nlohmann::json::array({0}));
    CHECK(one["rows"][0]["B"].empty());

    const std::string anti = write_temp("anti2.poset", "d 2\n");
    CHECK(nlohmann::json::parse(run("bijection --format json " + anti).out)["count"] == 4);
}

TEST_CASE("check on the witness poset and on a chain") {
    const RunResult r = run("check --format json --oracle " + kXFile);
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["x_free"] == false);
    CHECK(parsed["degree_sequence_order"] == nlohmann::json::array({6, 6, 6, 6, 6, 6, 6, 6}));
    CHECK(parsed["degree_sequence_chain"] == nlohmann::json::array({5, 6, 6, 6, 6, 6, 6, 7}));
    CHECK(parsed["facet_count_order"] == 8);
    CHECK(parsed["facet_count_chain"] == 9);
    CHECK(parsed["volume_order"] == 4);
    CHECK(parsed["volume_chain"] == 4);
    CHECK(parsed["violations"].empty());
    CHECK(parsed["ok"] == true);

    const std::string chain = write_temp("chain3.poset", "d 3\n0 1\n1 2\n");
    const auto chain_report = nlohmann::json::parse(run("check --format json " + chain).out);
    CHECK(chain_report["x_free"] == true);
    CHECK(chain_report["degree_sequence_order"] == chain_report["degree_sequence_chain"]);
    CHECK(chain_report["facet_count_order"] == chain_report["facet_count_chain"]);
    CHECK(chain_report["ok"] == true);
}

TEST_CASE("export JSON matches the library and DOT is well-formed") {
    const RunResult json = run("export --kind order --format json " + kXFile);
    CHECK(json.exit_code == 0);
    const ocp::SkeletonGraph g = ocp::skeleton_from_json(json.out);
    CHECK(g.kind == ocp::PolytopeKind::order);
    CHECK(g.vertices.size() == 8);
    CHECK(g.edges.size() == 24);

    const RunResult dot = run("export --kind chain --format dot " + kXFile);
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph chain_skeleton {") == 0);
    for (int v = 0; v < 8; ++v)
        CHECK(dot.out.find("v" + std::to_string(v) + " ") != std::string::npos);

    const RunResult to_file = run("export --kind order --format json -o /tmp/ocp_cli_out.json " + kXFile);
    CHECK(to_file.exit_code == 0);
    std::ifstream in("/tmp/ocp_cli_out.json");
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(ocp::skeleton_from_json(content) == g);
}

TEST_CASE("suite is deterministic at the byte level") {
    const std::string flags = "suite --seed 7 --exhaustive-max-d 3 --random-trials 10";
    const RunResult first = run(flags);
    const RunResult second = run(flags);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    const auto parsed = nlohmann::json::parse(first.out);
    CHECK(parsed["all_passed"] == true);
    CHECK(parsed["config"]["seed"] == 7);
}

TEST_CASE("suite honours a config file with flag overrides") {
    const std::string cfg = write_temp(
        "suite_config.json",
        "{\"exhaustive_max_d\":2,\"random_trials\":3,\"random_d_min\":4,"
        "\"random_d_max\":5,\"seed\":3,\"oracle_max_d\":3,\"edge_density\":\"1/3\"}");
    const RunResult base = run("suite --config " + cfg);
    CHECK(base.exit_code == 0);
    CHECK(nlohmann::json::parse(base.out)["config"]["random_trials"] == 3);
    const RunResult overridden = run("suite --config " + cfg + " --random-trials 5");
    CHECK(nlohmann::json::parse(overridden.out)["config"]["random_trials"] == 5);
    CHECK(nlohmann::json::parse(overridden.out)["posets_checked"] == 4 + 5);
}

TEST_CASE("stdin input") {
    const RunResult r = run("stats --format json - < " + kXFile);
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["edges_order"] == 24);
}
