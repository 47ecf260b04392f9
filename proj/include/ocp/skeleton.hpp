#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ocp/poset.hpp"

namespace ocp {

// Indicator point of a subset: coordinate i is 1 iff i is in the set.
using LatticePoint = std::vector<int>;

LatticePoint rho(ElementSet w, int d);

enum class PolytopeKind { order, chain };

std::string to_string(PolytopeKind kind);
PolytopeKind polytope_kind_from_string(const std::string& s);

// Edge test for the order polytope: the segment between the indicator
// points of two distinct ideals is an edge iff one ideal contains the
// other and their difference is connected. Orientation-insensitive;
// throws NotIdealError if either set is not an ideal.
bool order_edge(const Poset& p, ElementSet i, ElementSet j);

// Edge test for the chain polytope: the segment between the indicator
// points of two distinct antichains is an edge iff their symmetric
// difference is connected. Throws NotAntichainError.
bool chain_edge(const Poset& p, ElementSet a, ElementSet b);

// 1-skeleton of the order or chain polytope. Vertices are the ideal
// (resp. antichain) masks in ascending order; edges are the index pairs
// passing the matching predicate, with u < v, lexicographically sorted.
struct SkeletonGraph {
    PolytopeKind kind = PolytopeKind::order;
    int d = 0;
    std::vector<ElementSet> vertices;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const SkeletonGraph&) const = default;
};

SkeletonGraph skeleton(const Poset& p, PolytopeKind kind);

std::vector<int> vertex_degrees(const SkeletonGraph& g);

// Degrees sorted ascending.
std::vector<int> degree_sequence(const SkeletonGraph& g);

}  // namespace ocp
