#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ocp {

// Subset of the poset elements {0,...,d-1} as a machine-word bit mask.
// The same representation serves ideals, antichains, chains and arbitrary
// subsets; which role a mask plays is contextual.
using ElementSet = std::uint64_t;

constexpr ElementSet element_bit(int i) { return ElementSet{1} << i; }

constexpr bool set_contains(ElementSet s, int i) { return (s >> i) & 1; }

constexpr int set_size(ElementSet s) { return std::popcount(s); }

// All of {0,...,d-1}; well-defined for every 1 <= d <= 64.
constexpr ElementSet full_set(int d) {
    return d >= 64 ? ~ElementSet{0} : (ElementSet{1} << d) - 1;
}

constexpr bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }

inline int lowest_element(ElementSet s) { return std::countr_zero(s); }

// Visits the elements of s in ascending order.
template <typename F>
void for_each_element(ElementSet s, F&& f) {
    while (s != 0) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

inline std::vector<int> elements_of(ElementSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    for_each_element(s, [&](int i) { out.push_back(i); });
    return out;
}

// "{0,2,4}"; with a label table, "{a,c,h}".
std::string format_set(ElementSet s, const std::vector<std::string>& names = {});

}  // namespace ocp
