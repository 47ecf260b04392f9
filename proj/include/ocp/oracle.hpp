#pragma once

#include <cstdint>
#include <vector>

#include "ocp/inequality.hpp"
#include "ocp/skeleton.hpp"

namespace ocp {

struct OracleLimits {
    std::size_t max_vertices = 512;         // geometric edge test guard
    std::uint64_t max_points = 20'000'000;  // dilation enumeration budget
};

// True iff the segment between vertices u and v is a 1-face of the
// convex hull of the given points, decided exactly: the midpoint lies in
// the hull of the remaining vertices iff the pair is not an edge. All
// points must be hull vertices.
bool is_geometric_edge(const std::vector<LatticePoint>& vertices, std::size_t u, std::size_t v,
                       const OracleLimits& limits = {});

// Number of facets of a full-dimensional polytope in R^d given its
// vertices and a valid (possibly redundant) candidate inequality list:
// candidates whose tight vertex set contains d affinely independent
// points, counted once per distinct tight set. NotValidError if a
// candidate is violated by some vertex.
std::int64_t count_facets(const std::vector<LatticePoint>& vertices,
                          const std::vector<Inequality>& candidates, int d);

// Exact number of integer points in the t-th dilation of the polytope
// { a : every inequality holds } contained in [0,1]^d.
std::int64_t lattice_points_in_dilation(const std::vector<Inequality>& inequalities, int d,
                                        int t, const OracleLimits& limits = {});

// d! times the Euclidean volume, extracted as the d-th forward finite
// difference of the dilation counts at t = 0..d.
std::int64_t normalized_volume(const std::vector<Inequality>& inequalities, int d,
                               const OracleLimits& limits = {});

}  // namespace ocp
