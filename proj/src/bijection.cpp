#include "ocp/bijection.hpp"

#include "ocp/skeleton.hpp"

namespace ocp {

bool in_omega(const Poset& p, ElementSet smaller, ElementSet larger) {
    if (!is_ideal(p, smaller) || !is_ideal(p, larger)) return false;
    if (smaller == larger || !is_subset(smaller, larger)) return false;
    return is_connected_subset(p, larger & ~smaller);
}

namespace {

// True iff some x in a lies strictly below some y in b.
bool has_strict_relation_into(const Poset& p, ElementSet a, ElementSet b) {
    bool found = false;
    for_each_element(a, [&](int i) { found = found || (p.strictly_up(i) & b) != 0; });
    return found;
}

void require_antichains(const Poset& p, ElementSet a, ElementSet b) {
    if (!is_antichain(p, a)) throw NotInPsiError(format_set(a) + " is not an antichain");
    if (!is_antichain(p, b)) throw NotInPsiError(format_set(b) + " is not an antichain");
}

}  // namespace

AntichainPair normalize_antichain_pair(const Poset& p, ElementSet a, ElementSet b) {
    require_antichains(p, a, b);
    if (a == b) throw NotInPsiError("antichains must be distinct");
    if (!is_connected_subset(p, a ^ b))
        throw NotInPsiError("symmetric difference of " + format_set(a) + " and " +
                            format_set(b) + " is disconnected");
    if (is_subset(b, a)) return {a, b};
    if (is_subset(a, b)) return {b, a};
    // Strict comparabilities only run between the two difference sets;
    // connectivity rules out having them in both directions.
    const bool a_below_b = has_strict_relation_into(p, a & ~b, b & ~a);
    const bool b_below_a = has_strict_relation_into(p, b & ~a, a & ~b);
    if (a_below_b && !b_below_a) return {b, a};
    if (b_below_a && !a_below_b) return {a, b};
    if (a_below_b && b_below_a)
        throw NotInPsiError("mixed comparabilities between " + format_set(a) + " and " +
                            format_set(b));
    // No cross-comparability at all cannot occur for a connected symmetric
    // difference of size >= 2; kept deterministic regardless.
    return a < b ? AntichainPair{a, b} : AntichainPair{b, a};
}

AntichainPair omega_to_psi(const Poset& p, const IdealPair& pair) {
    if (!in_omega(p, pair.smaller, pair.larger))
        throw NotInOmegaError("(" + format_set(pair.smaller) + ", " + format_set(pair.larger) +
                              ") is not an order-polytope edge pair");
    const ElementSet difference = pair.larger & ~pair.smaller;
    const ElementSet a = max_of(p, pair.larger);
    ElementSet b = max_of(p, pair.smaller) & a;
    if (set_size(difference) > 1) b |= min_of(p, difference);
    return {a, b};
}

IdealPair psi_to_omega(const Poset& p, const AntichainPair& pair) {
    require_antichains(p, pair.first, pair.second);
    const ElementSet a = pair.first;
    const ElementSet b = pair.second;
    if (a == b) throw NotInPsiError("antichains must be distinct");
    if (!is_connected_subset(p, a ^ b))
        throw NotInPsiError("symmetric difference of " + format_set(a) + " and " +
                            format_set(b) + " is disconnected");

    const ElementSet larger = ideal_generated_by(p, a);
    ElementSet smaller;
    if (is_subset(b, a)) {
        // Connectivity forces the difference a \ b to be one element.
        const ElementSet removed = a & ~b;
        if (set_size(removed) != 1)
            throw NotInPsiError("subset-oriented pair with non-singleton difference");
        smaller = larger & ~removed;
    } else {
        ElementSet above_b = 0;
        for_each_element(b & ~a, [&](int y) { above_b |= p.up(y); });
        smaller = larger & ~above_b;
        if (has_strict_relation_into(p, a & ~b, b & ~a))
            throw NotInPsiError("pair is not normalized: " + format_set(a) +
                                " has elements below " + format_set(b));
    }
    IdealPair result{smaller, larger};
    if (!in_omega(p, result.smaller, result.larger))
        throw NotInPsiError("(" + format_set(a) + ", " + format_set(b) +
                            ") is not a normalized chain-polytope edge pair");
    return result;
}

std::vector<IdealPair> enumerate_omega(const Poset& p) {
    const std::vector<ElementSet> ideals = enumerate_ideals(p);
    std::vector<IdealPair> out;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        // Subset pairs always sort smaller-first in mask order.
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            if (is_subset(ideals[i], ideals[j]) &&
                is_connected_subset(p, ideals[j] & ~ideals[i]))
                out.push_back({ideals[i], ideals[j]});
        }
    }
    return out;
}

std::vector<AntichainPair> enumerate_psi(const Poset& p) {
    const std::vector<ElementSet> antichains = enumerate_antichains(p);
    std::vector<AntichainPair> out;
    for (std::size_t i = 0; i < antichains.size(); ++i) {
        for (std::size_t j = i + 1; j < antichains.size(); ++j) {
            if (chain_edge(p, antichains[i], antichains[j]))
                out.push_back(normalize_antichain_pair(p, antichains[i], antichains[j]));
        }
    }
    return out;
}

}  // namespace ocp
