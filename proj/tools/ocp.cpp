#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ocp/bijection.hpp"
#include "ocp/equivalence.hpp"
#include "ocp/harness.hpp"
#include "ocp/inequality.hpp"
#include "ocp/oracle.hpp"
#include "ocp/poset_io.hpp"
#include "ocp/skeleton_io.hpp"

namespace {

using nlohmann::ordered_json;

// exit codes: 0 ok, 1 invariant violation, 2 parse, 3 cycle, 4 size, 5 config
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitCycle = 3;
constexpr int kExitSize = 4;
constexpr int kExitConfig = 5;

constexpr int kCheckOracleMaxD = 6;

ocp::PosetFile read_input(const std::string& input) {
    if (input == "-") return ocp::parse_poset(std::cin);
    return ocp::load_poset_file(input);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ocp::Error("cannot open output file: " + path);
    out << content;
}

ordered_json set_to_json(ocp::ElementSet s) {
    ordered_json out = ordered_json::array();
    ocp::for_each_element(s, [&](int i) { out.push_back(i); });
    return out;
}

int cmd_stats(const ocp::PosetFile& file, const std::string& format) {
    const ocp::Poset& p = file.poset;
    const auto ideals = ocp::enumerate_ideals(p);
    const auto antichains = ocp::enumerate_antichains(p);
    const auto order = ocp::skeleton(p, ocp::PolytopeKind::order);
    const auto chain = ocp::skeleton(p, ocp::PolytopeKind::chain);
    const auto extensions = ocp::count_linear_extensions(p);
    const auto chains = ocp::maximal_chains(p);
    const bool x_free = !ocp::find_X_subposet(p).has_value();

    if (format == "json") {
        ordered_json out;
        out["d"] = p.size();
        out["ideals"] = ideals.size();
        out["antichains"] = antichains.size();
        out["edges_order"] = order.edges.size();
        out["edges_chain"] = chain.edges.size();
        out["linear_extensions"] = extensions;
        out["maximal_chains"] = chains.size();
        out["x_free"] = x_free;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "d: " << p.size() << "\n"
                  << "ideals: " << ideals.size() << "\n"
                  << "antichains: " << antichains.size() << "\n"
                  << "edges_order: " << order.edges.size() << "\n"
                  << "edges_chain: " << chain.edges.size() << "\n"
                  << "linear_extensions: " << extensions << "\n"
                  << "maximal_chains: " << chains.size() << "\n"
                  << "x_free: " << (x_free ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_bijection(const ocp::PosetFile& file, const std::string& format) {
    const ocp::Poset& p = file.poset;
    const auto omega = ocp::enumerate_omega(p);
    bool round_trip_ok = true;
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    for (const ocp::IdealPair& pair : omega) {
        const ocp::AntichainPair image = ocp::omega_to_psi(p, pair);
        if (ocp::psi_to_omega(p, image) != pair) {
            round_trip_ok = false;
            std::cerr << "round trip failed for (" << ocp::format_set(pair.smaller, file.names)
                      << ", " << ocp::format_set(pair.larger, file.names) << ")\n";
        }
        if (format == "json") {
            ordered_json row;
            row["I"] = set_to_json(pair.smaller);
            row["J"] = set_to_json(pair.larger);
            row["A"] = set_to_json(image.first);
            row["B"] = set_to_json(image.second);
            rows.push_back(std::move(row));
        } else {
            text << "(" << ocp::format_set(pair.smaller, file.names) << ", "
                 << ocp::format_set(pair.larger, file.names) << ") -> ("
                 << ocp::format_set(image.first, file.names) << ", "
                 << ocp::format_set(image.second, file.names) << ")\n";
        }
    }
    if (format == "json") {
        ordered_json out;
        out["d"] = p.size();
        out["count"] = omega.size();
        out["rows"] = std::move(rows);
        out["round_trip_ok"] = round_trip_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text.str();
        std::cout << "pairs: " << omega.size() << "\n";
    }
    return round_trip_ok ? 0 : kExitViolation;
}

int cmd_check(const ocp::PosetFile& file, bool oracle, const std::string& format) {
    const ocp::Poset& p = file.poset;
    if (oracle && p.size() > kCheckOracleMaxD)
        throw ocp::SizeError("--oracle is limited to d <= " + std::to_string(kCheckOracleMaxD) +
                             ", got d = " + std::to_string(p.size()));
    const auto facets = p.size() <= kCheckOracleMaxD ? ocp::FacetCounting::on
                                                     : ocp::FacetCounting::off;
    const ocp::EquivalenceReport report = ocp::check_equivalence(p, facets);
    std::vector<std::string> violations = ocp::report_violations(report);

    std::optional<std::int64_t> vol_order, vol_chain, extensions;
    if (oracle) {
        const auto order = ocp::skeleton(p, ocp::PolytopeKind::order);
        const auto chain = ocp::skeleton(p, ocp::PolytopeKind::chain);
        std::vector<ocp::LatticePoint> order_pts, chain_pts;
        for (const ocp::ElementSet v : order.vertices) order_pts.push_back(ocp::rho(v, p.size()));
        for (const ocp::ElementSet v : chain.vertices) chain_pts.push_back(ocp::rho(v, p.size()));
        auto agree = [&](const ocp::SkeletonGraph& g, const std::vector<ocp::LatticePoint>& pts) {
            std::vector<std::vector<bool>> adjacent(pts.size(),
                                                    std::vector<bool>(pts.size(), false));
            for (const auto& [u, v] : g.edges)
                adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            for (std::size_t u = 0; u < pts.size(); ++u)
                for (std::size_t v = u + 1; v < pts.size(); ++v)
                    if (ocp::is_geometric_edge(pts, u, v) != adjacent[u][v])
                        violations.push_back(ocp::to_string(g.kind) + " edge predicate disagrees "
                                             "with geometry on (" +
                                             ocp::format_set(g.vertices[u], file.names) + ", " +
                                             ocp::format_set(g.vertices[v], file.names) + ")");
        };
        agree(order, order_pts);
        agree(chain, chain_pts);
        vol_order = ocp::normalized_volume(ocp::h_description(p, ocp::PolytopeKind::order), p.size());
        vol_chain = ocp::normalized_volume(ocp::h_description(p, ocp::PolytopeKind::chain), p.size());
        extensions = static_cast<std::int64_t>(ocp::count_linear_extensions(p));
        if (*vol_order != *extensions || *vol_chain != *extensions)
            violations.push_back("normalized volumes (order " + std::to_string(*vol_order) +
                                 ", chain " + std::to_string(*vol_chain) + ") differ from " +
                                 std::to_string(*extensions) + " linear extensions");
    }

    auto witness_names = [&]() -> std::string {
        if (!report.witness) return "";
        const ocp::XWitness& w = *report.witness;
        std::string out;
        for (const int i : {w.a, w.b, w.c, w.g, w.h}) {
            if (!out.empty()) out += " ";
            out += file.names.empty() ? std::to_string(i) : file.label(i);
        }
        return out;
    };

    if (format == "json") {
        ordered_json out;
        out["d"] = report.d;
        out["vertex_count"] = report.vertex_count;
        out["edge_count_order"] = report.edge_count_order;
        out["edge_count_chain"] = report.edge_count_chain;
        out["degree_sequence_order"] = report.degseq_order;
        out["degree_sequence_chain"] = report.degseq_chain;
        out["x_free"] = report.x_free;
        if (report.witness) {
            const ocp::XWitness& w = *report.witness;
            out["x_witness"] = {w.a, w.b, w.c, w.g, w.h};
        } else {
            out["x_witness"] = nullptr;
        }
        out["facet_count_order"] =
            report.facet_count_order ? ordered_json(*report.facet_count_order) : ordered_json();
        out["facet_count_chain"] =
            report.facet_count_chain ? ordered_json(*report.facet_count_chain) : ordered_json();
        if (oracle) {
            out["volume_order"] = *vol_order;
            out["volume_chain"] = *vol_chain;
            out["linear_extensions"] = *extensions;
        }
        out["violations"] = violations;
        out["ok"] = violations.empty();
        std::cout << out.dump(2) << "\n";
    } else {
        auto seq = [](const std::vector<int>& s) {
            std::string out;
            for (const int v : s) {
                if (!out.empty()) out += " ";
                out += std::to_string(v);
            }
            return out;
        };
        std::cout << "d: " << report.d << "\n"
                  << "vertex_count: " << report.vertex_count << "\n"
                  << "edge_count_order: " << report.edge_count_order << "\n"
                  << "edge_count_chain: " << report.edge_count_chain << "\n"
                  << "degree_sequence_order: " << seq(report.degseq_order) << "\n"
                  << "degree_sequence_chain: " << seq(report.degseq_chain) << "\n"
                  << "x_free: " << (report.x_free ? "true" : "false") << "\n";
        if (report.witness) std::cout << "x_witness: " << witness_names() << "\n";
        if (report.facet_count_order)
            std::cout << "facet_count_order: " << *report.facet_count_order << "\n"
                      << "facet_count_chain: " << *report.facet_count_chain << "\n";
        if (oracle)
            std::cout << "volume_order: " << *vol_order << "\n"
                      << "volume_chain: " << *vol_chain << "\n"
                      << "linear_extensions: " << *extensions << "\n";
        for (const std::string& v : violations) std::cout << "violation: " << v << "\n";
        std::cout << "ok: " << (violations.empty() ? "true" : "false") << "\n";
    }
    return violations.empty() ? 0 : kExitViolation;
}

int cmd_export(const ocp::PosetFile& file, const std::string& kind, const std::string& format,
               const std::string& output) {
    const ocp::SkeletonGraph g = ocp::skeleton(file.poset, ocp::polytope_kind_from_string(kind));
    write_output(output, format == "dot" ? ocp::skeleton_to_dot(g) : ocp::skeleton_to_json(g));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"order and chain polytopes of finite posets: skeletons, the edge "
                 "bijection, and exact geometric verification"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "text";
    std::string kind = "order";
    std::string output;
    bool oracle = false;

    auto* stats = app.add_subcommand("stats", "vertex/edge/extension counts of both polytopes");
    stats->add_option("input", input, "poset file, or - for stdin");
    stats->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* bijection =
        app.add_subcommand("bijection", "edge bijection table between the two polytopes");
    bijection->add_option("input", input, "poset file, or - for stdin");
    bijection->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check", "equivalence report and invariant verification");
    check->add_option("input", input, "poset file, or - for stdin");
    check->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_flag("--oracle", oracle, "also verify edges and volume geometrically (d <= 6)");

    auto* export_cmd = app.add_subcommand("export", "write a skeleton as JSON or DOT");
    export_cmd->add_option("input", input, "poset file, or - for stdin");
    export_cmd->add_option("--kind", kind, "order or chain")
        ->check(CLI::IsMember({"order", "chain"}));
    std::string export_format = "json";
    export_cmd->add_option("--format", export_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    export_cmd->add_option("--output,-o", output, "output file (default stdout)");

    auto* suite = app.add_subcommand("suite", "run the property suite and print its report");
    std::string config_path;
    ocp::SuiteConfig cfg;
    std::string density_text;
    std::string mutation_text;
    suite->add_option("--config", config_path, "JSON config file; flags override its fields");
    auto* opt_emd = suite->add_option("--exhaustive-max-d", cfg.exhaustive_max_d,
                                      "enumerate all labeled posets up to this size (1..5)");
    auto* opt_trials = suite->add_option("--random-trials", cfg.random_trials);
    auto* opt_dmin = suite->add_option("--random-d-min", cfg.random_d_min);
    auto* opt_dmax = suite->add_option("--random-d-max", cfg.random_d_max);
    auto* opt_seed = suite->add_option("--seed", cfg.seed);
    auto* opt_omax = suite->add_option("--oracle-max-d", cfg.oracle_max_d,
                                       "run geometric checks for posets up to this size (1..6)");
    auto* opt_density = suite->add_option("--density", density_text, "cover probability, p/q or decimal");
    auto* opt_jobs = suite->add_option("--jobs", cfg.jobs, "worker threads");
    auto* opt_mut = suite->add_option("--mutate", mutation_text,
                                      "inject a known defect to exercise failure reporting");
    suite->add_option("--output,-o", output, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (stats->parsed()) return cmd_stats(read_input(input), format);
        if (bijection->parsed()) return cmd_bijection(read_input(input), format);
        if (check->parsed()) return cmd_check(read_input(input), oracle, format);
        if (export_cmd->parsed())
            return cmd_export(read_input(input), kind, export_format, output);
        if (suite->parsed()) {
            ocp::SuiteConfig base;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw ocp::ConfigError("cannot open config file: " + config_path);
                std::ostringstream buf;
                buf << in.rdbuf();
                base = ocp::suite_config_from_json(buf.str());
            }
            if (opt_emd->count()) base.exhaustive_max_d = cfg.exhaustive_max_d;
            if (opt_trials->count()) base.random_trials = cfg.random_trials;
            if (opt_dmin->count()) base.random_d_min = cfg.random_d_min;
            if (opt_dmax->count()) base.random_d_max = cfg.random_d_max;
            if (opt_seed->count()) base.seed = cfg.seed;
            if (opt_omax->count()) base.oracle_max_d = cfg.oracle_max_d;
            if (opt_jobs->count()) base.jobs = cfg.jobs;
            if (opt_density->count()) base.edge_density = ocp::density_from_string(density_text);
            if (opt_mut->count()) base.mutation = ocp::mutation_from_string(mutation_text);
            ocp::validate_config(base);

            const auto start = std::chrono::steady_clock::now();
            const ocp::SuiteReport report = ocp::run_property_suite(base);
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
            write_output(output, ocp::suite_report_to_json(report));
            std::cerr << "suite finished in " << elapsed << " ms ("
                      << report.posets_checked << " posets)\n";
            return report.all_passed ? 0 : kExitViolation;
        }
    } catch (const ocp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ocp::CycleError& e) {
        std::cerr << "cycle error: " << e.what() << "\n";
        return kExitCycle;
    } catch (const ocp::SizeError& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return kExitSize;
    } catch (const ocp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ocp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
