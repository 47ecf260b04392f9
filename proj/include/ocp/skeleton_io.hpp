#pragma once

#include <string>

#include "ocp/skeleton.hpp"

namespace ocp {

// {"kind":"order","vertices":[[0,1,...],...],"edges":[[u,v],...]}
// Vertices are 0/1 coordinate lists in ascending mask order; edges have
// u < v. skeleton_from_json accepts exactly this shape.
std::string skeleton_to_json(const SkeletonGraph& g, int indent = 2);
SkeletonGraph skeleton_from_json(const std::string& text);

// Undirected DOT graph, one node per vertex labeled by its mask in hex.
std::string skeleton_to_dot(const SkeletonGraph& g);

}  // namespace ocp
