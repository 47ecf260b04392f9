#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ocp/elementset.hpp"
#include "ocp/errors.hpp"

namespace ocp {

// Finite poset on elements 0..d-1 (1 <= d <= 64). Stores the full order
// relation as per-element up-/down-set masks, so comparability tests and
// closure arguments are single mask operations. Immutable after
// construction; all operations below are pure functions.
class Poset {
public:
    Poset() = default;

    // Reflexive-transitive closure of the given pairs, each meaning
    // x_i < x_j. Throws IndexError for labels outside 0..d-1 and
    // CycleError when the pair digraph is cyclic (antisymmetry would
    // fail). The pairs need not be covers.
    static Poset from_covers(int d, const std::vector<std::pair<int, int>>& covers);

    // Builds from full relation rows: up_rows[i] = mask of {j : x_i <= x_j},
    // i included. Validates reflexivity, antisymmetry and transitivity.
    static Poset from_relation(int d, const std::vector<std::uint64_t>& up_rows);

    static Poset chain(int d);
    static Poset antichain(int d);

    int size() const { return d_; }
    ElementSet all() const { return full_set(d_); }

    bool leq(int i, int j) const { return set_contains(up_[static_cast<std::size_t>(i)], j); }
    bool less(int i, int j) const { return i != j && leq(i, j); }
    bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

    // {j : x_i <= x_j}, includes i.
    ElementSet up(int i) const { return up_[static_cast<std::size_t>(i)]; }
    // {j : x_j <= x_i}, includes i.
    ElementSet down(int i) const { return down_[static_cast<std::size_t>(i)]; }
    ElementSet strictly_up(int i) const { return up(i) & ~element_bit(i); }
    ElementSet strictly_down(int i) const { return down(i) & ~element_bit(i); }
    // Everything comparable to i, i excluded.
    ElementSet comparables(int i) const { return (up(i) | down(i)) & ~element_bit(i); }

    bool operator==(const Poset&) const = default;

private:
    Poset(int d, std::vector<std::uint64_t> up, std::vector<std::uint64_t> down)
        : d_(d), up_(std::move(up)), down_(std::move(down)) {}

    int d_ = 0;
    std::vector<std::uint64_t> up_;
    std::vector<std::uint64_t> down_;
};

// Witness of an induced copy of the 5-element poset
//   a < c, b < c, c < g, c < h   with a || b and g || h
// (two minimal elements under a middle element under two maximal ones).
struct XWitness {
    int a, b, c, g, h;
    bool operator==(const XWitness&) const = default;
};

// Subset-enumeration guard: the subset scan and its result vector are
// exponential in d.
inline constexpr int kMaxEnumerationD = 22;
// Linear-extension counts above d = 20 overflow 64-bit integers
// (21! > 2^63).
inline constexpr int kMaxLinearExtensionD = 20;

// The Hasse relation: pairs (i, j) with x_i < x_j and nothing strictly
// between, in lexicographic order.
std::vector<std::pair<int, int>> cover_pairs(const Poset& p);

// True iff the comparability graph induced on s is connected. Throws
// EmptySetError for s == 0: every caller in this library passes a
// provably nonempty set, so no convention is defined for the empty one.
bool is_connected_subset(const Poset& p, ElementSet s);

bool is_ideal(const Poset& p, ElementSet s);
bool is_antichain(const Poset& p, ElementSet s);
bool is_chain(const Poset& p, ElementSet s);

// All downward-closed subsets (the vertex masks of the order polytope),
// in ascending mask order. Includes the empty set and the full set.
std::vector<ElementSet> enumerate_ideals(const Poset& p);

// All antichains (the vertex masks of the chain polytope), in ascending
// mask order. Includes the empty set.
std::vector<ElementSet> enumerate_antichains(const Poset& p);

// Maximal (resp. minimal) elements of the subposet induced on s.
ElementSet max_of(const Poset& p, ElementSet s);
ElementSet min_of(const Poset& p, ElementSet s);

// The ideal {x : x <= a for some a in A}. Requires A to be an antichain
// (NotAntichainError otherwise); then max_of(result) == A.
ElementSet ideal_generated_by(const Poset& p, ElementSet a);

// Every inclusion-maximal chain as an element set. Each runs from a
// minimal to a maximal element along covers; emitted in the order of a
// depth-first walk over covers from minimal elements, ascending.
std::vector<ElementSet> maximal_chains(const Poset& p);

// Exact number of linear extensions, by dynamic programming over the
// ideal lattice. SizeError for d > 20.
std::uint64_t count_linear_extensions(const Poset& p);

// Lexicographically first induced copy of the witness poset, or nullopt.
std::optional<XWitness> find_X_subposet(const Poset& p);

}  // namespace ocp
