#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ocp/poset.hpp"

namespace ocp {

// Deterministic RNG: the mt19937_64 stream is fixed by the standard, and
// bounded draws use masked rejection instead of std distributions (whose
// output is implementation-defined), so a seed pins results on every
// toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);

    // Uniform in [lo, hi], inclusive.
    int int_in(int lo, int hi);

    // Exact coin flip with probability num/den.
    bool bernoulli(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

// Exact probability for the random-poset model.
struct Density {
    std::uint64_t num = 1;
    std::uint64_t den = 2;

    bool operator==(const Density&) const = default;
};

// Accepts "p/q", "0.25", or an integer; ConfigError on anything else.
Density density_from_string(const std::string& text);
std::string to_string(const Density& density);

// Every labeled poset on d elements exactly once (1 <= d <= 5, SizeError
// beyond): each unordered element pair independently takes one of
// {incomparable, i<j, j<i}, and the assignments surviving the
// transitivity filter are emitted in ascending ternary-odometer order.
void enumerate_labeled_posets(int d, const std::function<void(const Poset&)>& fn);
std::vector<Poset> all_labeled_posets(int d);

// Samples a random linear order, keeps each of its pairs with the given
// probability, and closes transitively. density 0 gives the antichain,
// density 1 the chain. Deterministic in the seed.
Poset random_poset(int d, Density density, std::uint64_t seed);
Poset random_poset_with(Rng& rng, int d, Density density);

// Deliberate defect injection, used to demonstrate that the suite
// reports counterexamples when a predicate is wrong.
enum class Mutation {
    none,
    break_order_edge,       // order edges ignore connectivity of the difference
    break_chain_edge,       // chain edges ignore connectivity of the symmetric difference
    break_degree_sequence,  // chain degree sequence gets one degree bumped
};

std::string to_string(Mutation m);
Mutation mutation_from_string(const std::string& s);

struct SuiteConfig {
    int exhaustive_max_d = 4;  // hard cap 5
    int random_trials = 100;
    int random_d_min = 5;
    int random_d_max = 8;  // hard cap 10: skeletons are quadratic in 2^d
    std::uint64_t seed = 1;
    int oracle_max_d = 5;  // hard cap 6
    Density edge_density;
    int jobs = 1;
    Mutation mutation = Mutation::none;
};

// Throws ConfigError when a field is outside its guard.
void validate_config(const SuiteConfig& cfg);

struct Counterexample {
    std::string poset_text;  // poset-core text format
    std::uint64_t seed = 0;
    std::string detail;
};

struct PropertyResult {
    std::string name;
    std::int64_t checked = 0;
    std::int64_t failed = 0;
    std::optional<Counterexample> first_counterexample;
};

struct SuiteReport {
    SuiteConfig config;
    std::int64_t posets_checked = 0;
    std::vector<PropertyResult> properties;
    bool all_passed = true;
};

// Checks, over the exhaustive corpus for d <= exhaustive_max_d plus
// random_trials random posets with d in the configured range:
//   edge-count-equality, bijection-round-trip, degseq-iff-x-free,
//   degree-bounds, vertex-count-equality, and (for posets with
//   d <= oracle_max_d) oracle-edge-agreement, volume-identity,
//   facet-count-iff-x-free.
// Failures are recorded, never thrown; identical configs give identical
// reports regardless of jobs.
SuiteReport run_property_suite(const SuiteConfig& cfg);

// Deterministic serialization: no timing data, fixed key order.
std::string suite_report_to_json(const SuiteReport& report);
std::string suite_config_to_json(const SuiteConfig& cfg);
SuiteConfig suite_config_from_json(const std::string& text);

}  // namespace ocp
