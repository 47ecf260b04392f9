#include "ocp/poset.hpp"

#include <algorithm>
#include <string>

namespace ocp {

std::string format_set(ElementSet s, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for_each_element(s, [&](int i) {
        if (!first) out += ",";
        first = false;
        if (static_cast<std::size_t>(i) < names.size())
            out += names[static_cast<std::size_t>(i)];
        else
            out += std::to_string(i);
    });
    out += "}";
    return out;
}

namespace {

void check_d(int d) {
    if (d < 1 || d > 64)
        throw SizeError("element count must be in 1..64, got " + std::to_string(d));
}

}  // namespace

Poset Poset::from_covers(int d, const std::vector<std::pair<int, int>>& covers) {
    check_d(d);
    std::vector<std::uint64_t> succ(static_cast<std::size_t>(d), 0);
    for (const auto& [i, j] : covers) {
        if (i < 0 || i >= d || j < 0 || j >= d)
            throw IndexError("cover pair (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") out of range for d = " + std::to_string(d));
        if (i == j)
            throw CycleError("cover pair (" + std::to_string(i) + ", " + std::to_string(i) +
                             ") is a self-loop");
        succ[static_cast<std::size_t>(i)] |= element_bit(j);
    }

    // Kahn topological order; leftover nodes mean a directed cycle.
    std::vector<int> indeg(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i)
        for_each_element(succ[static_cast<std::size_t>(i)], [&](int j) { ++indeg[static_cast<std::size_t>(j)]; });
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(d));
    std::vector<int> ready;
    for (int i = d - 1; i >= 0; --i)
        if (indeg[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
    while (!ready.empty()) {
        int i = ready.back();
        ready.pop_back();
        order.push_back(i);
        for_each_element(succ[static_cast<std::size_t>(i)], [&](int j) {
            if (--indeg[static_cast<std::size_t>(j)] == 0) ready.push_back(j);
        });
    }
    if (order.size() != static_cast<std::size_t>(d))
        throw CycleError("cover pairs contain a directed cycle");

    std::vector<std::uint64_t> up(static_cast<std::size_t>(d), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int i = *it;
        std::uint64_t m = element_bit(i);
        for_each_element(succ[static_cast<std::size_t>(i)], [&](int j) { m |= up[static_cast<std::size_t>(j)]; });
        up[static_cast<std::size_t>(i)] = m;
    }
    std::vector<std::uint64_t> down(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i)
        for_each_element(up[static_cast<std::size_t>(i)], [&](int j) { down[static_cast<std::size_t>(j)] |= element_bit(i); });
    return Poset(d, std::move(up), std::move(down));
}

Poset Poset::from_relation(int d, const std::vector<std::uint64_t>& up_rows) {
    check_d(d);
    if (up_rows.size() != static_cast<std::size_t>(d))
        throw IndexError("relation must have exactly d rows");
    const ElementSet universe = full_set(d);
    for (int i = 0; i < d; ++i) {
        const std::uint64_t row = up_rows[static_cast<std::size_t>(i)];
        if ((row & ~universe) != 0) throw IndexError("relation row exceeds element range");
        if (!set_contains(row, i)) throw Error("relation is not reflexive");
        for_each_element(row & ~element_bit(i), [&](int j) {
            if (set_contains(up_rows[static_cast<std::size_t>(j)], i))
                throw CycleError("relation is not antisymmetric");
            if (!is_subset(up_rows[static_cast<std::size_t>(j)], row))
                throw Error("relation is not transitive");
        });
    }
    std::vector<std::uint64_t> down(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i)
        for_each_element(up_rows[static_cast<std::size_t>(i)], [&](int j) { down[static_cast<std::size_t>(j)] |= element_bit(i); });
    return Poset(d, up_rows, std::move(down));
}

Poset Poset::chain(int d) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < d; ++i) covers.emplace_back(i, i + 1);
    return from_covers(d, covers);
}

Poset Poset::antichain(int d) { return from_covers(d, {}); }

std::vector<std::pair<int, int>> cover_pairs(const Poset& p) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < p.size(); ++i) {
        for_each_element(p.strictly_up(i), [&](int j) {
            if ((p.strictly_up(i) & p.strictly_down(j)) == 0) out.emplace_back(i, j);
        });
    }
    return out;  // i ascending, j ascending within i: lexicographic
}

bool is_connected_subset(const Poset& p, ElementSet s) {
    if (s == 0) throw EmptySetError("connectivity of the empty set is undefined");
    ElementSet reached = element_bit(lowest_element(s));
    ElementSet frontier = reached;
    while (frontier != 0) {
        ElementSet next = 0;
        for_each_element(frontier, [&](int i) { next |= p.comparables(i) & s; });
        frontier = next & ~reached;
        reached |= frontier;
    }
    return reached == s;
}

bool is_ideal(const Poset& p, ElementSet s) {
    bool ok = true;
    for_each_element(s, [&](int i) { ok = ok && is_subset(p.down(i), s); });
    return ok;
}

bool is_antichain(const Poset& p, ElementSet s) {
    bool ok = true;
    for_each_element(s, [&](int i) { ok = ok && (p.comparables(i) & s) == 0; });
    return ok;
}

bool is_chain(const Poset& p, ElementSet s) {
    bool ok = true;
    for_each_element(s, [&](int i) { ok = ok && is_subset(s & ~element_bit(i), p.comparables(i)); });
    return ok;
}

namespace {

void check_enumeration_scale(int d) {
    if (d > kMaxEnumerationD)
        throw SizeError("subset enumeration is limited to d <= " +
                        std::to_string(kMaxEnumerationD) + ", got d = " + std::to_string(d));
}

}  // namespace

std::vector<ElementSet> enumerate_ideals(const Poset& p) {
    check_enumeration_scale(p.size());
    std::vector<ElementSet> out;
    const ElementSet end = full_set(p.size());
    for (ElementSet s = 0;; ++s) {
        if (is_ideal(p, s)) out.push_back(s);
        if (s == end) break;
    }
    return out;
}

std::vector<ElementSet> enumerate_antichains(const Poset& p) {
    check_enumeration_scale(p.size());
    std::vector<ElementSet> out;
    const ElementSet end = full_set(p.size());
    for (ElementSet s = 0;; ++s) {
        if (is_antichain(p, s)) out.push_back(s);
        if (s == end) break;
    }
    return out;
}

ElementSet max_of(const Poset& p, ElementSet s) {
    ElementSet out = 0;
    for_each_element(s, [&](int i) {
        if ((p.strictly_up(i) & s) == 0) out |= element_bit(i);
    });
    return out;
}

ElementSet min_of(const Poset& p, ElementSet s) {
    ElementSet out = 0;
    for_each_element(s, [&](int i) {
        if ((p.strictly_down(i) & s) == 0) out |= element_bit(i);
    });
    return out;
}

ElementSet ideal_generated_by(const Poset& p, ElementSet a) {
    if (!is_antichain(p, a))
        throw NotAntichainError("generator set " + format_set(a) + " is not an antichain");
    ElementSet out = 0;
    for_each_element(a, [&](int i) { out |= p.down(i); });
    return out;
}

std::vector<ElementSet> maximal_chains(const Poset& p) {
    const int d = p.size();
    std::vector<std::uint64_t> succ(static_cast<std::size_t>(d), 0);
    for (const auto& [i, j] : cover_pairs(p)) succ[static_cast<std::size_t>(i)] |= element_bit(j);

    std::vector<ElementSet> out;
    auto dfs = [&](auto&& self, int i, ElementSet path) -> void {
        path |= element_bit(i);
        if (succ[static_cast<std::size_t>(i)] == 0) {
            out.push_back(path);
            return;
        }
        for_each_element(succ[static_cast<std::size_t>(i)], [&](int j) { self(self, j, path); });
    };
    for (int i = 0; i < d; ++i)
        if (p.strictly_down(i) == 0) dfs(dfs, i, 0);
    return out;
}

std::uint64_t count_linear_extensions(const Poset& p) {
    if (p.size() > kMaxLinearExtensionD)
        throw SizeError("linear-extension counting is limited to d <= " +
                        std::to_string(kMaxLinearExtensionD) + ", got d = " +
                        std::to_string(p.size()));
    // Paths from {} to P in the ideal lattice; subsets sort below supersets
    // in mask order, so a single ascending pass suffices.
    const std::vector<ElementSet> ideals = enumerate_ideals(p);
    std::vector<std::uint64_t> count(ideals.size(), 0);
    count[0] = 1;  // ideals[0] == 0
    for (std::size_t k = 1; k < ideals.size(); ++k) {
        const ElementSet ideal = ideals[k];
        std::uint64_t total = 0;
        for_each_element(max_of(p, ideal), [&](int m) {
            const ElementSet prev = ideal & ~element_bit(m);
            const auto it = std::lower_bound(ideals.begin(), ideals.end(), prev);
            total += count[static_cast<std::size_t>(it - ideals.begin())];
        });
        count[k] = total;
    }
    return count.back();
}

std::optional<XWitness> find_X_subposet(const Poset& p) {
    const int d = p.size();
    if (d < 5) return std::nullopt;
    // Loop nesting (a, b, c, g, h) with a < b and g < h yields the
    // lexicographically first witness: both swaps fix the witness set.
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            if (p.comparable(a, b)) continue;
            ElementSet above = p.strictly_up(a) & p.strictly_up(b);
            bool found = false;
            XWitness w{};
            for_each_element(above, [&](int c) {
                if (found) return;
                for_each_element(p.strictly_up(c), [&](int g) {
                    if (found) return;
                    for_each_element(p.strictly_up(c) & ~full_set(g + 1), [&](int h) {
                        if (found || p.comparable(g, h)) return;
                        w = XWitness{a, b, c, g, h};
                        found = true;
                    });
                });
            });
            if (found) return w;
        }
    }
    return std::nullopt;
}

}  // namespace ocp
