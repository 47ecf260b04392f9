#include "ocp/skeleton_io.hpp"

#include <json.hpp>

#include <sstream>

namespace ocp {

std::string skeleton_to_json(const SkeletonGraph& g, int indent) {
    nlohmann::ordered_json out;
    out["kind"] = to_string(g.kind);
    auto& vertices = out["vertices"] = nlohmann::ordered_json::array();
    for (const ElementSet v : g.vertices) {
        nlohmann::ordered_json bits = nlohmann::ordered_json::array();
        for (int i = 0; i < g.d; ++i) bits.push_back(set_contains(v, i) ? 1 : 0);
        vertices.push_back(std::move(bits));
    }
    auto& edges = out["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(nlohmann::ordered_json::array({u, v}));
    return out.dump(indent) + "\n";
}

SkeletonGraph skeleton_from_json(const std::string& text) {
    nlohmann::json in;
    try {
        in = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("skeleton JSON: ") + e.what());
    }
    SkeletonGraph g;
    g.kind = polytope_kind_from_string(in.at("kind").get<std::string>());
    const auto& vertices = in.at("vertices");
    if (vertices.empty()) throw Error("skeleton JSON: empty vertex list");
    g.d = static_cast<int>(vertices.front().size());
    if (g.d < 1 || g.d > 64) throw Error("skeleton JSON: dimension out of range");
    for (const auto& bits : vertices) {
        if (static_cast<int>(bits.size()) != g.d)
            throw Error("skeleton JSON: ragged vertex list");
        ElementSet mask = 0;
        for (int i = 0; i < g.d; ++i) {
            const int bit = bits.at(static_cast<std::size_t>(i)).get<int>();
            if (bit != 0 && bit != 1) throw Error("skeleton JSON: vertex entries must be 0/1");
            if (bit) mask |= element_bit(i);
        }
        g.vertices.push_back(mask);
    }
    for (const auto& e : in.at("edges")) {
        const int u = e.at(0).get<int>();
        const int v = e.at(1).get<int>();
        if (u < 0 || v <= u || static_cast<std::size_t>(v) >= g.vertices.size())
            throw Error("skeleton JSON: bad edge endpoints");
        g.edges.emplace_back(u, v);
    }
    return g;
}

std::string skeleton_to_dot(const SkeletonGraph& g) {
    std::ostringstream out;
    out << "graph " << to_string(g.kind) << "_skeleton {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        out << "  v" << i << " [label=\"0x" << std::hex << g.vertices[i] << std::dec << "\"];\n";
    for (const auto& [u, v] : g.edges) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ocp
