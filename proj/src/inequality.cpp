#include "ocp/inequality.hpp"

namespace ocp {

Rational Inequality::evaluate(const LatticePoint& point) const {
    Rational acc = 0;
    for (std::size_t k = 0; k < coeff.size(); ++k)
        if (point[k] != 0) acc += coeff[k] * point[k];
    return acc;
}

Rational Inequality::evaluate(const RationalVector& point) const {
    Rational acc = 0;
    for (std::size_t k = 0; k < coeff.size(); ++k) acc += coeff[k] * point[k];
    return acc;
}

std::string Inequality::to_string() const {
    std::string out;
    bool any = false;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        if (coeff[k] == 0) continue;
        if (any) out += " + ";
        any = true;
        if (coeff[k] != 1) out += ocp::to_string(coeff[k]) + "*";
        out += "a" + std::to_string(k);
    }
    if (!any) out += "0";
    out += " <= " + ocp::to_string(bound);
    return out;
}

std::vector<Inequality> h_description(const Poset& p, PolytopeKind kind, OrderRelationMode mode) {
    const auto d = static_cast<std::size_t>(p.size());
    std::vector<Inequality> out;
    auto zero = [&] { return RationalVector(d, Rational(0)); };

    if (kind == PolytopeKind::order) {
        for (std::size_t i = 0; i < d; ++i) {
            Inequality lower{zero(), Rational(0)};  // -a_i <= 0
            lower.coeff[i] = -1;
            out.push_back(std::move(lower));
            Inequality upper{zero(), Rational(1)};  // a_i <= 1
            upper.coeff[i] = 1;
            out.push_back(std::move(upper));
        }
        if (mode == OrderRelationMode::covers_only) {
            for (const auto& [i, j] : cover_pairs(p)) {
                Inequality rel{zero(), Rational(0)};  // a_j - a_i <= 0
                rel.coeff[static_cast<std::size_t>(j)] = 1;
                rel.coeff[static_cast<std::size_t>(i)] = -1;
                out.push_back(std::move(rel));
            }
        } else {
            for (int i = 0; i < p.size(); ++i) {
                for_each_element(p.strictly_up(i), [&](int j) {
                    Inequality rel{zero(), Rational(0)};
                    rel.coeff[static_cast<std::size_t>(j)] = 1;
                    rel.coeff[static_cast<std::size_t>(i)] = -1;
                    out.push_back(std::move(rel));
                });
            }
        }
        return out;
    }

    for (std::size_t i = 0; i < d; ++i) {
        Inequality lower{zero(), Rational(0)};  // -a_i <= 0
        lower.coeff[i] = -1;
        out.push_back(std::move(lower));
    }
    for (const ElementSet chain : maximal_chains(p)) {
        Inequality sum{zero(), Rational(1)};
        for_each_element(chain, [&](int i) { sum.coeff[static_cast<std::size_t>(i)] = 1; });
        out.push_back(std::move(sum));
    }
    return out;
}

}  // namespace ocp
