#pragma once

#include <string>
#include <vector>

#include "ocp/poset.hpp"
#include "ocp/rational.hpp"
#include "ocp/skeleton.hpp"

namespace ocp {

// Affine inequality  coeff . a <= bound  over d coordinates.
struct Inequality {
    RationalVector coeff;
    Rational bound;

    Rational evaluate(const LatticePoint& point) const;
    Rational evaluate(const RationalVector& point) const;
    std::string to_string() const;
};

enum class OrderRelationMode {
    covers_only,    // one inequality per cover pair; the rest follow by transitivity
    all_relations,  // one per strict relation, for redundancy cross-checks
};

// Defining inequalities, possibly redundant.
//
// order: 0 <= a_i <= 1 for every coordinate, plus a_j <= a_i for every
//        cover x_i < x_j (coordinates decrease upward, so ideal
//        indicators are exactly the 0/1 solutions).
// chain: a_i >= 0 for every coordinate, plus sum over every maximal
//        chain <= 1.
std::vector<Inequality> h_description(const Poset& p, PolytopeKind kind,
                                      OrderRelationMode mode = OrderRelationMode::covers_only);

}  // namespace ocp
