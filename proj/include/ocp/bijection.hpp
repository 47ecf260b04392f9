#pragma once

#include <vector>

#include "ocp/poset.hpp"

namespace ocp {

// Edge-indexing pair of the order polytope: ideals with smaller strictly
// contained in larger and a connected difference.
struct IdealPair {
    ElementSet smaller = 0;  // I
    ElementSet larger = 0;   // J

    bool operator==(const IdealPair&) const = default;
    friend auto operator<=>(const IdealPair&, const IdealPair&) = default;
};

// Edge-indexing pair of the chain polytope: distinct antichains with a
// connected symmetric difference, oriented so that either second is a
// subset of first, or every strict comparability between them points
// from second up into first.
struct AntichainPair {
    ElementSet first = 0;   // A
    ElementSet second = 0;  // B

    bool operator==(const AntichainPair&) const = default;
    friend auto operator<=>(const AntichainPair&, const AntichainPair&) = default;
};

bool in_omega(const Poset& p, ElementSet smaller, ElementSet larger);

// Orients an unordered pair of antichains with connected symmetric
// difference into its canonical form; NotInPsiError when the pair does
// not index a chain-polytope edge.
AntichainPair normalize_antichain_pair(const Poset& p, ElementSet a, ElementSet b);

// The edge bijection, ideal side to antichain side:
//   A = max(J),
//   B = min(J \ I)  union  (max(I) intersect max(J)),
// where min(J \ I) is taken empty when |J \ I| = 1.
AntichainPair omega_to_psi(const Poset& p, const IdealPair& pair);

// Inverse direction: J is the ideal generated by A; I keeps the members
// of J lying above no element of B \ A, except that when B is contained
// in A the single element of A \ B is removed from J instead.
IdealPair psi_to_omega(const Poset& p, const AntichainPair& pair);

// All qualifying pairs, in ascending (smaller, larger) mask order.
std::vector<IdealPair> enumerate_omega(const Poset& p);

// All qualifying normalized pairs, in ascending order of the unordered
// mask pair they came from.
std::vector<AntichainPair> enumerate_psi(const Poset& p);

}  // namespace ocp
