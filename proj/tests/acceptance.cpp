// Acceptance suite: each criterion prints one PASS/FAIL line and the
// binary exits nonzero if any fails. Criterion 9 additionally drives the
// CLI binary when its path is supplied as argv[1].

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "ocp/bijection.hpp"
#include "ocp/harness.hpp"
#include "ocp/inequality.hpp"
#include "ocp/oracle.hpp"
#include "ocp/poset_io.hpp"
#include "ocp/skeleton.hpp"

using namespace ocp;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string description, double budget_seconds)
        : number_(number), description_(std::move(description)), budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& detail) {
        if (!ok && problem_.empty()) problem_ = detail;
    }

    void finish() {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (problem_.empty() && elapsed > budget_)
            problem_ = "exceeded runtime budget of " + std::to_string(budget_) + " s";
        const bool ok = problem_.empty();
        if (!ok) ++failures;
        std::printf("%s  criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number_,
                    description_.c_str(), elapsed, ok ? "" : " -- ", problem_.c_str());
        std::fflush(stdout);
    }

private:
    int number_;
    std::string description_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    std::string problem_;
};

Poset make_x() { return Poset::from_covers(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}}); }

std::vector<Poset> exhaustive_corpus(int max_d) {
    std::vector<Poset> out;
    for (int d = 1; d <= max_d; ++d)
        enumerate_labeled_posets(d, [&](const Poset& p) { out.push_back(p); });
    return out;
}

std::vector<Poset> random_corpus(int count, int d_min, int d_max, std::uint64_t seed) {
    // Rotating density: sparse posets have the big vertex sets, dense ones
    // the long chains.
    const Density densities[4] = {{1, 8}, {1, 4}, {1, 2}, {3, 4}};
    std::vector<Poset> out;
    Rng master(seed);
    for (int trial = 0; trial < count; ++trial) {
        const std::uint64_t trial_seed = master.next();
        Rng rng(trial_seed);
        const int d = rng.int_in(d_min, d_max);
        out.push_back(random_poset_with(rng, d, densities[trial % 4]));
    }
    return out;
}

std::string run_capture(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return "<popen failed>";
    std::string out;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    pclose(pipe);
    return out;
}

void criterion_1() {
    Criterion c(1, "witness-poset skeletons match the known counts", 1.0);
    const Poset x = make_x();
    const SkeletonGraph order = skeleton(x, PolytopeKind::order);
    const SkeletonGraph chain = skeleton(x, PolytopeKind::chain);
    c.require(order.vertices.size() == 8, "order skeleton must have 8 vertices");
    c.require(chain.vertices.size() == 8, "chain skeleton must have 8 vertices");
    c.require(order.edges.size() == 24, "order skeleton must have 24 edges");
    c.require(chain.edges.size() == 24, "chain skeleton must have 24 edges");
    c.require(degree_sequence(order) == std::vector<int>{6, 6, 6, 6, 6, 6, 6, 6},
              "order degree sequence must be (6,6,6,6,6,6,6,6)");
    c.require(degree_sequence(chain) == std::vector<int>{5, 6, 6, 6, 6, 6, 6, 7},
              "chain degree sequence must be (5,6,6,6,6,6,6,7)");
    c.finish();
}

void criterion_2_and_3(const std::vector<Poset>& exhaustive4, const std::vector<Poset>& random8) {
    Criterion c2(2, "edge counts of both polytopes agree on 242 exhaustive + 1000 random posets",
                 120.0);
    Criterion c3(3, "the pair map is a bijection matching the edge count on the same corpus",
                 600.0);
    std::size_t at_d4 = 0;
    for (const Poset& p : exhaustive4) at_d4 += p.size() == 4 ? 1 : 0;
    c2.require(at_d4 == 219, "exhaustive corpus must hold 219 posets at d = 4");
    c2.require(random8.size() >= 1000, "random corpus must hold at least 1000 posets");

    auto check_both = [&](const Poset& p) {
        const std::size_t order_edges = skeleton(p, PolytopeKind::order).edges.size();
        const std::size_t chain_edges = skeleton(p, PolytopeKind::chain).edges.size();
        if (order_edges != chain_edges)
            c2.require(false, "edge counts differ on " + serialize_poset(p));

        const std::vector<IdealPair> omega = enumerate_omega(p);
        std::vector<AntichainPair> psi = enumerate_psi(p);
        if (omega.size() != order_edges || psi.size() != chain_edges)
            c3.require(false, "|Omega| or |Psi| differs from the edge count on " +
                                  serialize_poset(p));
        std::vector<AntichainPair> images;
        images.reserve(omega.size());
        for (const IdealPair& pair : omega) {
            const AntichainPair image = omega_to_psi(p, pair);
            if (psi_to_omega(p, image) != pair)
                c3.require(false, "round trip moved a pair on " + serialize_poset(p));
            images.push_back(image);
        }
        std::sort(images.begin(), images.end());
        std::sort(psi.begin(), psi.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
            c3.require(false, "pair map not injective on " + serialize_poset(p));
        if (images != psi) c3.require(false, "pair map not onto on " + serialize_poset(p));
    };
    for (const Poset& p : exhaustive4) check_both(p);
    for (const Poset& p : random8) check_both(p);
    c2.finish();
    c3.finish();
}

void criterion_4(const std::vector<Poset>& exhaustive4) {
    Criterion c(4, "combinatorial edges equal geometric edges on d <= 4 + 50 random d = 5",
                600.0);
    std::vector<Poset> corpus = exhaustive4;
    for (const Poset& p : random_corpus(50, 5, 5, 20240509)) corpus.push_back(p);
    for (const Poset& p : corpus) {
        for (const PolytopeKind kind : {PolytopeKind::order, PolytopeKind::chain}) {
            const SkeletonGraph g = skeleton(p, kind);
            std::vector<LatticePoint> points;
            points.reserve(g.vertices.size());
            for (const ElementSet v : g.vertices) points.push_back(rho(v, p.size()));
            std::vector<std::vector<bool>> adjacent(points.size(),
                                                    std::vector<bool>(points.size(), false));
            for (const auto& [u, v] : g.edges)
                adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            for (std::size_t u = 0; u < points.size(); ++u)
                for (std::size_t v = u + 1; v < points.size(); ++v)
                    if (is_geometric_edge(points, u, v) != adjacent[u][v])
                        c.require(false, to_string(kind) + " predicate disagrees with geometry on " +
                                             serialize_poset(p));
        }
    }
    c.finish();
}

void criterion_5_and_6(const std::vector<Poset>& exhaustive5, const std::vector<Poset>& random8) {
    Criterion c5(5, "degree sequences agree exactly when the witness poset is absent", 600.0);
    Criterion c6(6, "origin degree is d in the chain skeleton; order degrees >= d (+1 with X)",
                 600.0);
    auto check_both = [&](const Poset& p) {
        const SkeletonGraph order = skeleton(p, PolytopeKind::order);
        const SkeletonGraph chain = skeleton(p, PolytopeKind::chain);
        const bool x_present = find_X_subposet(p).has_value();
        const bool equal = degree_sequence(order) == degree_sequence(chain);
        if (equal != !x_present)
            c5.require(false, "degree-sequence criterion fails on " + serialize_poset(p));

        const std::vector<int> chain_degrees = vertex_degrees(chain);
        if (chain_degrees[0] != p.size())
            c6.require(false, "origin degree differs from d on " + serialize_poset(p));
        const int bound = p.size() + (x_present ? 1 : 0);
        for (const int deg : vertex_degrees(order))
            if (deg < bound)
                c6.require(false, "order-skeleton degree below bound on " + serialize_poset(p));
    };
    for (const Poset& p : exhaustive5) check_both(p);
    for (const Poset& p : random8) check_both(p);
    c5.finish();
    c6.finish();
}

void criterion_7(const std::vector<Poset>& exhaustive5) {
    Criterion c(7, "normalized volumes of both polytopes equal the linear-extension count",
                300.0);
    for (const Poset& p : exhaustive5) {
        const auto extensions = static_cast<std::int64_t>(count_linear_extensions(p));
        const auto vol_order = normalized_volume(h_description(p, PolytopeKind::order), p.size());
        const auto vol_chain = normalized_volume(h_description(p, PolytopeKind::chain), p.size());
        if (vol_order != extensions || vol_chain != extensions)
            c.require(false, "volume identity fails on " + serialize_poset(p));
    }
    c.finish();
}

void criterion_8(const std::vector<Poset>& exhaustive5) {
    Criterion c(8, "facet counts agree exactly when the witness poset is absent; 8 vs 9 for X",
                600.0);
    auto facets = [](const Poset& p, PolytopeKind kind) {
        const SkeletonGraph g = skeleton(p, kind);
        std::vector<LatticePoint> points;
        points.reserve(g.vertices.size());
        for (const ElementSet v : g.vertices) points.push_back(rho(v, p.size()));
        return count_facets(points, h_description(p, kind), p.size());
    };
    for (const Poset& p : exhaustive5) {
        const bool equal = facets(p, PolytopeKind::order) == facets(p, PolytopeKind::chain);
        if (equal != !find_X_subposet(p).has_value())
            c.require(false, "facet-count criterion fails on " + serialize_poset(p));
    }
    const Poset x = make_x();
    c.require(facets(x, PolytopeKind::order) == 8, "order polytope of X must have 8 facets");
    c.require(facets(x, PolytopeKind::chain) == 9, "chain polytope of X must have 9 facets");
    c.finish();
}

void criterion_9(const char* cli_path) {
    Criterion c(9, "suite reports are byte-identical for a fixed seed", 600.0);
    SuiteConfig cfg;
    cfg.exhaustive_max_d = 3;
    cfg.random_trials = 25;
    cfg.seed = 12345;
    const std::string first = suite_report_to_json(run_property_suite(cfg));
    const std::string second = suite_report_to_json(run_property_suite(cfg));
    c.require(first == second, "library-level reports differ");
    c.require(first.find("\"all_passed\": true") != std::string::npos,
              "suite must pass on the default corpus");
    if (cli_path != nullptr) {
        const std::string cmd = std::string(cli_path) +
                                " suite --seed 12345 --exhaustive-max-d 3 --random-trials 25"
                                " 2>/dev/null";
        const std::string out1 = run_capture(cmd);
        const std::string out2 = run_capture(cmd);
        c.require(!out1.empty() && out1 == out2, "CLI-level reports differ");
    }
    c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Poset> exhaustive4 = exhaustive_corpus(4);
    const std::vector<Poset> exhaustive5 = exhaustive_corpus(5);
    const std::vector<Poset> random8 = random_corpus(1000, 5, 8, 20240508);

    criterion_1();
    criterion_2_and_3(exhaustive4, random8);
    criterion_4(exhaustive4);
    criterion_5_and_6(exhaustive5, random8);
    criterion_7(exhaustive5);
    criterion_8(exhaustive5);
    criterion_9(argc > 1 ? argv[1] : nullptr);

    if (failures == 0) {
        std::printf("all 9 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
