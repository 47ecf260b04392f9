#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ocp/poset.hpp"

namespace ocp {

// Poset text format:
//   d <n>            element count, must come first
//   <i> <j>          cover: x_i < x_j
//   names: a b c     optional element labels, d of them
//   # ...            comment; blank lines ignored
struct PosetFile {
    Poset poset;
    std::vector<std::string> names;  // empty when the file has no names line

    const std::string& label(int i) const;
};

PosetFile parse_poset(std::istream& in);
PosetFile parse_poset_text(const std::string& text);
PosetFile load_poset_file(const std::string& path);

// Canonical serialization: the d line, one cover pair per line in
// lexicographic order, then the names line if labels are present.
std::string serialize_poset(const Poset& p, const std::vector<std::string>& names = {});

}  // namespace ocp
