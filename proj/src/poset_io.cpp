#include "ocp/poset_io.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace ocp {

const std::string& PosetFile::label(int i) const {
    static const std::string empty;
    if (static_cast<std::size_t>(i) < names.size()) return names[static_cast<std::size_t>(i)];
    return empty;
}

namespace {

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

PosetFile parse_poset(std::istream& in) {
    int d = -1;
    int line_no = 0;
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> names;
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "d") {
            if (d != -1) throw ParseError(line_no, "duplicate d line");
            std::string rest;
            if (!(ls >> d) || d < 1 || (ls >> rest))
                throw ParseError(line_no, "expected `d <count>` with a positive count");
            if (d > 64) throw ParseError(line_no, "element count exceeds 64");
            continue;
        }
        if (first == "names:") {
            if (d == -1) throw ParseError(line_no, "names line before d line");
            if (!names.empty()) throw ParseError(line_no, "duplicate names line");
            std::string label;
            while (ls >> label) names.push_back(label);
            if (names.size() != static_cast<std::size_t>(d))
                throw ParseError(line_no, "expected exactly " + std::to_string(d) + " names");
            std::set<std::string> unique(names.begin(), names.end());
            if (unique.size() != names.size()) throw ParseError(line_no, "names must be distinct");
            continue;
        }
        if (d == -1) throw ParseError(line_no, "cover pair before d line");
        std::istringstream ps(line);
        int i = 0, j = 0;
        std::string rest;
        if (!(ps >> i >> j) || (ps >> rest))
            throw ParseError(line_no, "expected `<i> <j>` cover pair");
        if (i < 0 || i >= d || j < 0 || j >= d)
            throw ParseError(line_no, "element index out of range 0.." + std::to_string(d - 1));
        covers.emplace_back(i, j);
    }
    if (d == -1) throw ParseError(line_no, "missing d line");
    try {
        return PosetFile{Poset::from_covers(d, covers), std::move(names)};
    } catch (const IndexError& e) {
        throw ParseError(line_no, e.what());  // unreachable: ranges checked above
    }
}

PosetFile parse_poset_text(const std::string& text) {
    std::istringstream in(text);
    return parse_poset(in);
}

PosetFile load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open poset file: " + path);
    return parse_poset(in);
}

std::string serialize_poset(const Poset& p, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "d " << p.size() << "\n";
    for (const auto& [i, j] : cover_pairs(p)) out << i << " " << j << "\n";
    if (!names.empty()) {
        out << "names:";
        for (const auto& n : names) out << " " << n;
        out << "\n";
    }
    return out.str();
}

}  // namespace ocp
