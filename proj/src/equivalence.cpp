#include "ocp/equivalence.hpp"

namespace ocp {

EquivalenceReport check_equivalence(const Poset& p, FacetCounting facets,
                                    const OracleLimits& limits) {
    EquivalenceReport report;
    report.d = p.size();
    report.witness = find_X_subposet(p);
    report.x_free = !report.witness.has_value();

    const SkeletonGraph order = skeleton(p, PolytopeKind::order);
    const SkeletonGraph chain = skeleton(p, PolytopeKind::chain);
    report.vertex_count = static_cast<std::int64_t>(order.vertices.size());
    report.edge_count_order = static_cast<std::int64_t>(order.edges.size());
    report.edge_count_chain = static_cast<std::int64_t>(chain.edges.size());
    report.degseq_order = degree_sequence(order);
    report.degseq_chain = degree_sequence(chain);

    if (order.vertices.size() != chain.vertices.size())
        throw Error("ideal and antichain counts differ; poset state is corrupt");

    if (facets == FacetCounting::on) {
        if (order.vertices.size() > limits.max_vertices)
            throw SizeError("facet counting limited to " + std::to_string(limits.max_vertices) +
                            " vertices");
        std::vector<LatticePoint> order_pts, chain_pts;
        order_pts.reserve(order.vertices.size());
        chain_pts.reserve(chain.vertices.size());
        for (const ElementSet v : order.vertices) order_pts.push_back(rho(v, p.size()));
        for (const ElementSet v : chain.vertices) chain_pts.push_back(rho(v, p.size()));
        report.facet_count_order =
            count_facets(order_pts, h_description(p, PolytopeKind::order), p.size());
        report.facet_count_chain =
            count_facets(chain_pts, h_description(p, PolytopeKind::chain), p.size());
    }
    return report;
}

std::vector<std::string> report_violations(const EquivalenceReport& report) {
    std::vector<std::string> out;
    if (report.edge_count_order != report.edge_count_chain)
        out.push_back("edge counts differ: order " + std::to_string(report.edge_count_order) +
                      " vs chain " + std::to_string(report.edge_count_chain));
    const bool degseq_equal = report.degseq_order == report.degseq_chain;
    if (degseq_equal != report.x_free)
        out.push_back(std::string("degree sequences ") + (degseq_equal ? "equal" : "differ") +
                      " but witness poset " + (report.x_free ? "absent" : "present"));
    if (report.facet_count_order && report.facet_count_chain) {
        const bool facets_equal = *report.facet_count_order == *report.facet_count_chain;
        if (facets_equal != report.x_free)
            out.push_back(std::string("facet counts ") + (facets_equal ? "equal" : "differ") +
                          " but witness poset " + (report.x_free ? "absent" : "present"));
    }
    return out;
}

}  // namespace ocp
