#include "ocp/skeleton.hpp"

#include <algorithm>

namespace ocp {

LatticePoint rho(ElementSet w, int d) {
    LatticePoint point(static_cast<std::size_t>(d), 0);
    for_each_element(w, [&](int i) { point[static_cast<std::size_t>(i)] = 1; });
    return point;
}

std::string to_string(PolytopeKind kind) {
    return kind == PolytopeKind::order ? "order" : "chain";
}

PolytopeKind polytope_kind_from_string(const std::string& s) {
    if (s == "order") return PolytopeKind::order;
    if (s == "chain") return PolytopeKind::chain;
    throw Error("unknown polytope kind: " + s);
}

bool order_edge(const Poset& p, ElementSet i, ElementSet j) {
    if (!is_ideal(p, i)) throw NotIdealError(format_set(i) + " is not an ideal");
    if (!is_ideal(p, j)) throw NotIdealError(format_set(j) + " is not an ideal");
    if (i == j) return false;
    const ElementSet small = is_subset(i, j) ? i : j;
    const ElementSet large = is_subset(i, j) ? j : i;
    if (!is_subset(small, large)) return false;
    return is_connected_subset(p, large & ~small);
}

bool chain_edge(const Poset& p, ElementSet a, ElementSet b) {
    if (!is_antichain(p, a)) throw NotAntichainError(format_set(a) + " is not an antichain");
    if (!is_antichain(p, b)) throw NotAntichainError(format_set(b) + " is not an antichain");
    if (a == b) return false;
    return is_connected_subset(p, a ^ b);
}

SkeletonGraph skeleton(const Poset& p, PolytopeKind kind) {
    SkeletonGraph g;
    g.kind = kind;
    g.d = p.size();
    g.vertices = kind == PolytopeKind::order ? enumerate_ideals(p) : enumerate_antichains(p);
    const auto n = static_cast<int>(g.vertices.size());
    for (int u = 0; u < n; ++u) {
        const ElementSet su = g.vertices[static_cast<std::size_t>(u)];
        for (int v = u + 1; v < n; ++v) {
            const ElementSet sv = g.vertices[static_cast<std::size_t>(v)];
            const bool edge = kind == PolytopeKind::order
                                  ? order_edge(p, su, sv)
                                  : chain_edge(p, su, sv);
            if (edge) g.edges.emplace_back(u, v);
        }
    }
    return g;
}

std::vector<int> vertex_degrees(const SkeletonGraph& g) {
    std::vector<int> deg(g.vertices.size(), 0);
    for (const auto& [u, v] : g.edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

std::vector<int> degree_sequence(const SkeletonGraph& g) {
    std::vector<int> deg = vertex_degrees(g);
    std::sort(deg.begin(), deg.end());
    return deg;
}

}  // namespace ocp
