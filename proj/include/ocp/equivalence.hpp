#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocp/oracle.hpp"
#include "ocp/poset.hpp"
#include "ocp/skeleton.hpp"

namespace ocp {

// Everything the equivalence criteria compare for one poset. The two
// polytopes are lattice-equivalent exactly when the witness poset is
// absent, which is also exactly when the degree sequences (and the facet
// counts) coincide; the edge counts agree unconditionally.
struct EquivalenceReport {
    int d = 0;
    bool x_free = true;
    std::optional<XWitness> witness;
    std::int64_t vertex_count = 0;
    std::int64_t edge_count_order = 0;
    std::int64_t edge_count_chain = 0;
    std::vector<int> degseq_order;
    std::vector<int> degseq_chain;
    // Filled only when facet counting was requested and within guard.
    std::optional<std::int64_t> facet_count_order;
    std::optional<std::int64_t> facet_count_chain;
};

enum class FacetCounting { off, on };

EquivalenceReport check_equivalence(const Poset& p, FacetCounting facets = FacetCounting::off,
                                    const OracleLimits& limits = {});

// Violations of the relations the report is required to satisfy; empty
// for every valid poset. Human-readable, one string per violation.
std::vector<std::string> report_violations(const EquivalenceReport& report);

}  // namespace ocp
