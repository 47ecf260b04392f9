#include "ocp/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

#include "ocp/bijection.hpp"
#include "ocp/equivalence.hpp"
#include "ocp/inequality.hpp"
#include "ocp/oracle.hpp"
#include "ocp/poset_io.hpp"
#include "ocp/skeleton.hpp"

namespace ocp {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t mask = std::bit_ceil(n) - 1;
    while (true) {
        const std::uint64_t r = engine_() & mask;
        if (r < n) return r;
    }
}

int Rng::int_in(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

void enumerate_labeled_posets(int d, const std::function<void(const Poset&)>& fn) {
    if (d < 1 || d > 5)
        throw SizeError("exhaustive poset enumeration is limited to 1 <= d <= 5, got d = " +
                        std::to_string(d));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);

    std::vector<int> state(pairs.size(), 0);  // 0 incomparable, 1 i<j, 2 j<i
    std::vector<std::uint64_t> up(static_cast<std::size_t>(d));
    while (true) {
        for (int i = 0; i < d; ++i) up[static_cast<std::size_t>(i)] = element_bit(i);
        for (std::size_t q = 0; q < pairs.size(); ++q) {
            if (state[q] == 1) up[static_cast<std::size_t>(pairs[q].first)] |= element_bit(pairs[q].second);
            if (state[q] == 2) up[static_cast<std::size_t>(pairs[q].second)] |= element_bit(pairs[q].first);
        }
        bool transitive = true;
        for (int i = 0; i < d && transitive; ++i) {
            for_each_element(up[static_cast<std::size_t>(i)] & ~element_bit(i), [&](int j) {
                transitive = transitive && is_subset(up[static_cast<std::size_t>(j)], up[static_cast<std::size_t>(i)]);
            });
        }
        if (transitive) fn(Poset::from_relation(d, up));

        // ternary odometer, last pair fastest
        std::size_t q = pairs.size();
        while (q > 0 && state[q - 1] == 2) state[--q] = 0;
        if (q == 0) break;
        ++state[q - 1];
    }
}

std::vector<Poset> all_labeled_posets(int d) {
    std::vector<Poset> out;
    enumerate_labeled_posets(d, [&](const Poset& p) { out.push_back(p); });
    return out;
}

Poset random_poset_with(Rng& rng, int d, Density density) {
    if (density.den == 0 || density.num > density.den)
        throw ConfigError("edge density must be a rational in [0, 1]");
    std::vector<int> order(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
    rng.shuffle(order);
    std::vector<std::pair<int, int>> relations;
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v)
            if (rng.bernoulli(density.num, density.den))
                relations.emplace_back(order[static_cast<std::size_t>(u)], order[static_cast<std::size_t>(v)]);
    return Poset::from_covers(d, relations);
}

Poset random_poset(int d, Density density, std::uint64_t seed) {
    Rng rng(seed);
    return random_poset_with(rng, d, density);
}

std::string to_string(Mutation m) {
    switch (m) {
        case Mutation::none: return "none";
        case Mutation::break_order_edge: return "break-order-edge";
        case Mutation::break_chain_edge: return "break-chain-edge";
        case Mutation::break_degree_sequence: return "break-degree-sequence";
    }
    return "none";
}

Mutation mutation_from_string(const std::string& s) {
    if (s == "none") return Mutation::none;
    if (s == "break-order-edge") return Mutation::break_order_edge;
    if (s == "break-chain-edge") return Mutation::break_chain_edge;
    if (s == "break-degree-sequence") return Mutation::break_degree_sequence;
    throw ConfigError("unknown mutation: " + s);
}

void validate_config(const SuiteConfig& cfg) {
    if (cfg.exhaustive_max_d < 1 || cfg.exhaustive_max_d > 5)
        throw ConfigError("exhaustive_max_d must be in 1..5");
    if (cfg.random_trials < 0) throw ConfigError("random_trials must be nonnegative");
    if (cfg.random_d_min < 1 || cfg.random_d_min > cfg.random_d_max || cfg.random_d_max > 10)
        throw ConfigError("random d range must satisfy 1 <= min <= max <= 10");
    if (cfg.oracle_max_d < 1 || cfg.oracle_max_d > 6)
        throw ConfigError("oracle_max_d must be in 1..6");
    if (cfg.edge_density.den == 0 || cfg.edge_density.num > cfg.edge_density.den)
        throw ConfigError("edge density must be a rational in [0, 1]");
    if (cfg.jobs < 1 || cfg.jobs > 256) throw ConfigError("jobs must be in 1..256");
}

namespace {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    const int width = std::min<int>(jobs, static_cast<int>(count));
    pool.reserve(static_cast<std::size_t>(width));
    for (int w = 0; w < width; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

bool mutated_order_edge(const Poset& p, ElementSet i, ElementSet j, Mutation m) {
    if (m == Mutation::break_order_edge) {
        const ElementSet small = is_subset(i, j) ? i : j;
        const ElementSet large = is_subset(i, j) ? j : i;
        return small != large && is_subset(small, large);
    }
    return order_edge(p, i, j);
}

bool mutated_chain_edge(const Poset& p, ElementSet a, ElementSet b, Mutation m) {
    if (m == Mutation::break_chain_edge) return a != b;
    return chain_edge(p, a, b);
}

SkeletonGraph build_skeleton(const Poset& p, PolytopeKind kind, Mutation m) {
    if (m == Mutation::none) return skeleton(p, kind);
    SkeletonGraph g;
    g.kind = kind;
    g.d = p.size();
    g.vertices = kind == PolytopeKind::order ? enumerate_ideals(p) : enumerate_antichains(p);
    for (std::size_t u = 0; u < g.vertices.size(); ++u) {
        for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
            const bool edge = kind == PolytopeKind::order
                                  ? mutated_order_edge(p, g.vertices[u], g.vertices[v], m)
                                  : mutated_chain_edge(p, g.vertices[u], g.vertices[v], m);
            if (edge) g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    }
    return g;
}

constexpr std::size_t kPropertyCount = 8;

const std::array<const char*, kPropertyCount> kPropertyNames = {
    "edge-count-equality",   "bijection-round-trip", "degseq-iff-x-free",
    "degree-bounds",         "vertex-count-equality", "oracle-edge-agreement",
    "volume-identity",       "facet-count-iff-x-free",
};

struct PropertyOutcome {
    bool applicable = false;
    bool passed = true;
    std::string detail;
};

struct CorpusEntry {
    Poset poset;
    std::uint64_t seed = 0;
};

// All strict cross relations of a normalized pair must point from second
// into first; mixed directions would contradict connectivity.
bool mixed_cross_relations(const Poset& p, const AntichainPair& pair) {
    const ElementSet a_only = pair.first & ~pair.second;
    const ElementSet b_only = pair.second & ~pair.first;
    bool a_below_b = false;
    for_each_element(a_only, [&](int x) { a_below_b = a_below_b || (p.strictly_up(x) & b_only) != 0; });
    bool b_below_a = false;
    for_each_element(b_only, [&](int y) { b_below_a = b_below_a || (p.strictly_up(y) & a_only) != 0; });
    return a_below_b && b_below_a;
}

std::string check_bijection(const Poset& p, std::int64_t edge_count_order,
                            std::int64_t edge_count_chain) {
    const std::vector<IdealPair> omega = enumerate_omega(p);
    std::vector<AntichainPair> psi = enumerate_psi(p);
    if (static_cast<std::int64_t>(omega.size()) != edge_count_order)
        return "|Omega| = " + std::to_string(omega.size()) + " but order edge count = " +
               std::to_string(edge_count_order);
    if (static_cast<std::int64_t>(psi.size()) != edge_count_chain)
        return "|Psi| = " + std::to_string(psi.size()) + " but chain edge count = " +
               std::to_string(edge_count_chain);

    std::sort(psi.begin(), psi.end());
    std::vector<AntichainPair> images;
    images.reserve(omega.size());
    for (const IdealPair& pair : omega) {
        const ElementSet difference = pair.larger & ~pair.smaller;
        const ElementSet overlap = max_of(p, pair.smaller) & max_of(p, pair.larger);
        if (set_size(difference) > 1 && (min_of(p, difference) & overlap) != 0)
            return "min(J\\I) meets max(I) cap max(J) for (" + format_set(pair.smaller) + ", " +
                   format_set(pair.larger) + ")";
        AntichainPair image;
        try {
            image = omega_to_psi(p, pair);
        } catch (const Error& e) {
            return std::string("omega_to_psi failed: ") + e.what();
        }
        if (mixed_cross_relations(p, image))
            return "image of (" + format_set(pair.smaller) + ", " + format_set(pair.larger) +
                   ") has mixed comparability directions";
        IdealPair back;
        try {
            back = psi_to_omega(p, image);
        } catch (const Error& e) {
            return std::string("psi_to_omega failed: ") + e.what();
        }
        if (back != pair)
            return "round trip moved (" + format_set(pair.smaller) + ", " +
                   format_set(pair.larger) + ")";
        images.push_back(image);
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        return "omega_to_psi is not injective";
    if (images != psi) return "image of Omega is not Psi";
    for (const AntichainPair& pair : psi) {
        const IdealPair back = psi_to_omega(p, pair);
        if (omega_to_psi(p, back) != pair)
            return "round trip moved (" + format_set(pair.first) + ", " + format_set(pair.second) +
                   ") on the antichain side";
    }
    return {};
}

std::array<PropertyOutcome, kPropertyCount> evaluate_poset(const Poset& p,
                                                           const SuiteConfig& cfg) {
    std::array<PropertyOutcome, kPropertyCount> out;
    const SkeletonGraph order = build_skeleton(p, PolytopeKind::order, cfg.mutation);
    const SkeletonGraph chain = build_skeleton(p, PolytopeKind::chain, cfg.mutation);
    const bool x_free = !find_X_subposet(p).has_value();
    const int d = p.size();

    auto fail = [&](std::size_t idx, std::string detail) {
        out[idx].passed = false;
        out[idx].detail = std::move(detail);
    };

    // edge-count-equality
    out[0].applicable = true;
    if (order.edges.size() != chain.edges.size())
        fail(0, "order has " + std::to_string(order.edges.size()) + " edges, chain has " +
                    std::to_string(chain.edges.size()));

    // bijection-round-trip
    out[1].applicable = true;
    if (std::string detail = check_bijection(p, static_cast<std::int64_t>(order.edges.size()),
                                             static_cast<std::int64_t>(chain.edges.size()));
        !detail.empty())
        fail(1, std::move(detail));

    // degseq-iff-x-free
    out[2].applicable = true;
    const std::vector<int> degseq_order = degree_sequence(order);
    std::vector<int> degseq_chain = degree_sequence(chain);
    if (cfg.mutation == Mutation::break_degree_sequence) ++degseq_chain.back();
    if ((degseq_order == degseq_chain) != x_free)
        fail(2, std::string("degree sequences ") +
                    (degseq_order == degseq_chain ? "equal" : "differ") + " but witness poset " +
                    (x_free ? "absent" : "present"));

    // degree-bounds
    out[3].applicable = true;
    {
        const std::vector<int> chain_degrees = vertex_degrees(chain);
        // vertices are in ascending mask order, so index 0 is the empty set
        if (chain_degrees[0] != d)
            fail(3, "chain-skeleton degree of the origin is " + std::to_string(chain_degrees[0]) +
                        ", expected " + std::to_string(d));
        const int min_required = x_free ? d : d + 1;
        for (const int deg : vertex_degrees(order)) {
            if (deg < min_required) {
                fail(3, "order-skeleton vertex of degree " + std::to_string(deg) +
                            " below bound " + std::to_string(min_required));
                break;
            }
        }
    }

    // vertex-count-equality
    out[4].applicable = true;
    if (order.vertices.size() != chain.vertices.size())
        fail(4, "order has " + std::to_string(order.vertices.size()) + " vertices, chain has " +
                    std::to_string(chain.vertices.size()));

    if (d > cfg.oracle_max_d) return out;

    std::vector<LatticePoint> order_pts, chain_pts;
    order_pts.reserve(order.vertices.size());
    chain_pts.reserve(chain.vertices.size());
    for (const ElementSet v : order.vertices) order_pts.push_back(rho(v, d));
    for (const ElementSet v : chain.vertices) chain_pts.push_back(rho(v, d));

    // oracle-edge-agreement
    out[5].applicable = true;
    {
        auto agree = [&](const SkeletonGraph& g, const std::vector<LatticePoint>& pts,
                         PolytopeKind kind) -> std::string {
            std::vector<std::vector<bool>> adjacent(
                g.vertices.size(), std::vector<bool>(g.vertices.size(), false));
            for (const auto& [u, v] : g.edges)
                adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            for (std::size_t u = 0; u < pts.size(); ++u) {
                for (std::size_t v = u + 1; v < pts.size(); ++v) {
                    if (is_geometric_edge(pts, u, v) != adjacent[u][v])
                        return to_string(kind) + " pair (" + format_set(g.vertices[u]) + ", " +
                               format_set(g.vertices[v]) + ") disagrees with the geometric test";
                }
            }
            return {};
        };
        std::string detail = agree(order, order_pts, PolytopeKind::order);
        if (detail.empty()) detail = agree(chain, chain_pts, PolytopeKind::chain);
        if (!detail.empty()) fail(5, std::move(detail));
    }

    // volume-identity
    out[6].applicable = true;
    {
        const std::int64_t vol_order =
            normalized_volume(h_description(p, PolytopeKind::order), d);
        const std::int64_t vol_chain =
            normalized_volume(h_description(p, PolytopeKind::chain), d);
        const auto extensions = static_cast<std::int64_t>(count_linear_extensions(p));
        if (vol_order != extensions || vol_chain != extensions)
            fail(6, "normalized volumes (order " + std::to_string(vol_order) + ", chain " +
                        std::to_string(vol_chain) + ") vs " + std::to_string(extensions) +
                        " linear extensions");
    }

    // facet-count-iff-x-free
    out[7].applicable = true;
    {
        const std::int64_t facets_order =
            count_facets(order_pts, h_description(p, PolytopeKind::order), d);
        const std::int64_t facets_chain =
            count_facets(chain_pts, h_description(p, PolytopeKind::chain), d);
        if ((facets_order == facets_chain) != x_free)
            fail(7, "facet counts " + std::to_string(facets_order) + " vs " +
                        std::to_string(facets_chain) + " but witness poset " +
                        (x_free ? "absent" : "present"));
    }
    return out;
}

}  // namespace

SuiteReport run_property_suite(const SuiteConfig& cfg) {
    validate_config(cfg);

    std::vector<CorpusEntry> corpus;
    for (int d = 1; d <= cfg.exhaustive_max_d; ++d)
        enumerate_labeled_posets(d, [&](const Poset& p) { corpus.push_back({p, cfg.seed}); });
    Rng master(cfg.seed);
    for (int trial = 0; trial < cfg.random_trials; ++trial) {
        const std::uint64_t trial_seed = master.next();
        Rng rng(trial_seed);
        const int d = rng.int_in(cfg.random_d_min, cfg.random_d_max);
        corpus.push_back({random_poset_with(rng, d, cfg.edge_density), trial_seed});
    }

    std::vector<std::array<PropertyOutcome, kPropertyCount>> outcomes(corpus.size());
    parallel_for(corpus.size(), cfg.jobs,
                 [&](std::size_t i) { outcomes[i] = evaluate_poset(corpus[i].poset, cfg); });

    SuiteReport report;
    report.config = cfg;
    report.posets_checked = static_cast<std::int64_t>(corpus.size());
    for (std::size_t prop = 0; prop < kPropertyCount; ++prop) {
        PropertyResult result;
        result.name = kPropertyNames[prop];
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const PropertyOutcome& outcome = outcomes[i][prop];
            if (!outcome.applicable) continue;
            ++result.checked;
            if (outcome.passed) continue;
            ++result.failed;
            if (!result.first_counterexample)
                result.first_counterexample = Counterexample{
                    serialize_poset(corpus[i].poset), corpus[i].seed, outcome.detail};
        }
        if (result.failed > 0) report.all_passed = false;
        report.properties.push_back(std::move(result));
    }
    return report;
}

std::string to_string(const Density& density) {
    return std::to_string(density.num) + "/" + std::to_string(density.den);
}

Density density_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            // decimal like "0.25" -> 25/100; integers allowed
            const auto dot = text.find('.');
            if (dot == std::string::npos)
                return Density{static_cast<std::uint64_t>(std::stoull(text)), 1};
            const std::string whole = text.substr(0, dot);
            const std::string frac = text.substr(dot + 1);
            if (frac.empty() || frac.size() > 18) throw ConfigError("bad density: " + text);
            std::uint64_t den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            const std::uint64_t num =
                (whole.empty() ? 0 : std::stoull(whole)) * den + std::stoull(frac);
            return Density{num, den};
        }
        return Density{std::stoull(text.substr(0, slash)), std::stoull(text.substr(slash + 1))};
    } catch (const std::logic_error&) {
        throw ConfigError("bad density: " + text);
    }
}

namespace {

nlohmann::ordered_json config_json(const SuiteConfig& cfg) {
    nlohmann::ordered_json out;
    out["exhaustive_max_d"] = cfg.exhaustive_max_d;
    out["random_trials"] = cfg.random_trials;
    out["random_d_min"] = cfg.random_d_min;
    out["random_d_max"] = cfg.random_d_max;
    out["seed"] = cfg.seed;
    out["oracle_max_d"] = cfg.oracle_max_d;
    out["edge_density"] = to_string(cfg.edge_density);
    out["jobs"] = cfg.jobs;
    out["mutation"] = to_string(cfg.mutation);
    return out;
}

}  // namespace

std::string suite_config_to_json(const SuiteConfig& cfg) { return config_json(cfg).dump(2) + "\n"; }

SuiteConfig suite_config_from_json(const std::string& text) {
    nlohmann::json in;
    try {
        in = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config JSON: ") + e.what());
    }
    SuiteConfig cfg;
    try {
        if (in.contains("exhaustive_max_d")) cfg.exhaustive_max_d = in["exhaustive_max_d"].get<int>();
        if (in.contains("random_trials")) cfg.random_trials = in["random_trials"].get<int>();
        if (in.contains("random_d_min")) cfg.random_d_min = in["random_d_min"].get<int>();
        if (in.contains("random_d_max")) cfg.random_d_max = in["random_d_max"].get<int>();
        if (in.contains("seed")) cfg.seed = in["seed"].get<std::uint64_t>();
        if (in.contains("oracle_max_d")) cfg.oracle_max_d = in["oracle_max_d"].get<int>();
        if (in.contains("edge_density"))
            cfg.edge_density = density_from_string(in["edge_density"].get<std::string>());
        if (in.contains("jobs")) cfg.jobs = in["jobs"].get<int>();
        if (in.contains("mutation")) cfg.mutation = mutation_from_string(in["mutation"].get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config JSON: ") + e.what());
    }
    validate_config(cfg);
    return cfg;
}

std::string suite_report_to_json(const SuiteReport& report) {
    nlohmann::ordered_json out;
    out["config"] = config_json(report.config);
    out["posets_checked"] = report.posets_checked;
    auto& properties = out["properties"] = nlohmann::ordered_json::array();
    for (const PropertyResult& result : report.properties) {
        nlohmann::ordered_json entry;
        entry["name"] = result.name;
        entry["checked"] = result.checked;
        entry["failed"] = result.failed;
        if (result.first_counterexample) {
            nlohmann::ordered_json ce;
            ce["poset"] = result.first_counterexample->poset_text;
            ce["seed"] = result.first_counterexample->seed;
            ce["detail"] = result.first_counterexample->detail;
            entry["counterexample"] = std::move(ce);
        }
        properties.push_back(std::move(entry));
    }
    out["all_passed"] = report.all_passed;
    return out.dump(2) + "\n";
}

}  // namespace ocp
