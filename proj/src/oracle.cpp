#include "ocp/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ocp/simplex.hpp"

namespace ocp {

bool is_geometric_edge(const std::vector<LatticePoint>& vertices, std::size_t u, std::size_t v,
                       const OracleLimits& limits) {
    if (vertices.size() > limits.max_vertices)
        throw SizeError("geometric edge test limited to " + std::to_string(limits.max_vertices) +
                        " vertices, got " + std::to_string(vertices.size()));
    const std::size_t d = vertices[u].size();

    // Midpoint in conv(vertices \ {u, v})?  One equality per coordinate
    // plus the convex-combination normalization.
    std::vector<RationalVector> rows(d + 1);
    RationalVector rhs(d + 1);
    std::vector<std::size_t> others;
    others.reserve(vertices.size() - 2);
    for (std::size_t k = 0; k < vertices.size(); ++k)
        if (k != u && k != v) others.push_back(k);

    for (std::size_t coord = 0; coord < d; ++coord) {
        rows[coord].reserve(others.size());
        for (const std::size_t k : others) rows[coord].emplace_back(vertices[k][coord]);
        rhs[coord] = make_rational(vertices[u][coord] + vertices[v][coord], 2);
    }
    rows[d].assign(others.size(), Rational(1));
    rhs[d] = 1;

    return !rational_feasible(rows, rhs);
}

namespace {

// Rank of the differences q - points[first tight]; the tight set spans a
// facet iff this reaches d - 1. Empty tight sets rank below everything.
int difference_rank(const std::vector<LatticePoint>& vertices, const std::vector<int>& tight) {
    if (tight.empty()) return -1;
    if (tight.size() < 2) return 0;
    const std::size_t d = vertices[0].size();
    const LatticePoint& base = vertices[static_cast<std::size_t>(tight[0])];
    std::vector<RationalVector> m;
    m.reserve(tight.size() - 1);
    for (std::size_t i = 1; i < tight.size(); ++i) {
        RationalVector row(d);
        for (std::size_t k = 0; k < d; ++k)
            row[k] = vertices[static_cast<std::size_t>(tight[i])][k] - base[k];
        m.push_back(std::move(row));
    }
    int rank = 0;
    for (std::size_t col = 0; col < d && static_cast<std::size_t>(rank) < m.size(); ++col) {
        std::size_t pivot = m.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < m.size(); ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == m.size()) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        const RationalVector& prow = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][col] == 0) continue;
            const Rational factor = m[r][col] / prow[col];
            for (std::size_t k = col; k < d; ++k) m[r][k] -= factor * prow[k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::int64_t count_facets(const std::vector<LatticePoint>& vertices,
                          const std::vector<Inequality>& candidates, int d) {
    // A facet-defining candidate is determined by its tight set (the
    // affine hull of d affinely independent tight vertices is the
    // supporting hyperplane), so distinct tight sets count facets once
    // even when parallel duplicates appear among the candidates.
    std::set<std::vector<int>> facet_tight_sets;
    for (const Inequality& ineq : candidates) {
        std::vector<int> tight;
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            const Rational value = ineq.evaluate(vertices[k]);
            if (value > ineq.bound)
                throw NotValidError("vertex " + std::to_string(k) + " violates " +
                                    ineq.to_string());
            if (value == ineq.bound) tight.push_back(static_cast<int>(k));
        }
        if (difference_rank(vertices, tight) == d - 1) facet_tight_sets.insert(std::move(tight));
    }
    return static_cast<std::int64_t>(facet_tight_sets.size());
}

std::int64_t lattice_points_in_dilation(const std::vector<Inequality>& inequalities, int d,
                                        int t, const OracleLimits& limits) {
    std::uint64_t grid = 1;
    for (int k = 0; k < d; ++k) {
        grid *= static_cast<std::uint64_t>(t) + 1;
        if (grid > limits.max_points)
            throw SizeError("dilation enumeration budget exceeded: (t+1)^d > " +
                            std::to_string(limits.max_points));
    }

    // Clear denominators once; every candidate point is integral, so each
    // inequality becomes an exact integer comparison.
    const std::size_t m = inequalities.size();
    std::vector<std::vector<long>> coeff(m, std::vector<long>(static_cast<std::size_t>(d)));
    std::vector<long> bound(m);
    for (std::size_t i = 0; i < m; ++i) {
        mpz_class lcm_den = inequalities[i].bound.get_den();
        for (const Rational& c : inequalities[i].coeff)
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_class scaled_bound = inequalities[i].bound.get_num() *
                                 (lcm_den / inequalities[i].bound.get_den()) * t;
        if (!scaled_bound.fits_slong_p())
            throw SizeError("inequality bound exceeds machine range after scaling");
        bound[i] = scaled_bound.get_si();
        for (std::size_t k = 0; k < static_cast<std::size_t>(d); ++k) {
            const Rational& c = inequalities[i].coeff[k];
            mpz_class scaled = c.get_num() * (lcm_den / c.get_den());
            if (!scaled.fits_slong_p())
                throw SizeError("inequality coefficient exceeds machine range after scaling");
            coeff[i][k] = scaled.get_si();
        }
    }

    std::vector<int> point(static_cast<std::size_t>(d), 0);
    std::vector<std::vector<long>> partial(static_cast<std::size_t>(d) + 1,
                                           std::vector<long>(m, 0));
    std::int64_t count = 0;
    auto walk = [&](auto&& self, std::size_t level) -> void {
        if (level == static_cast<std::size_t>(d)) {
            for (std::size_t i = 0; i < m; ++i)
                if (partial[level][i] > bound[i]) return;
            ++count;
            return;
        }
        for (int value = 0; value <= t; ++value) {
            for (std::size_t i = 0; i < m; ++i)
                partial[level + 1][i] = partial[level][i] + coeff[i][level] * value;
            self(self, level + 1);
        }
    };
    walk(walk, 0);
    return count;
}

std::int64_t normalized_volume(const std::vector<Inequality>& inequalities, int d,
                               const OracleLimits& limits) {
    // The dilation count is a degree-d polynomial in t whose leading
    // coefficient is the volume; its d-th forward difference at 0 is
    // d! times that coefficient.
    std::vector<std::int64_t> counts(static_cast<std::size_t>(d) + 1);
    for (int t = 0; t <= d; ++t)
        counts[static_cast<std::size_t>(t)] = lattice_points_in_dilation(inequalities, d, t, limits);
    std::int64_t total = 0;
    std::int64_t binom = 1;  // C(d, k), sign (-1)^(d-k)
    for (int k = 0; k <= d; ++k) {
        const std::int64_t sign = ((d - k) % 2 == 0) ? 1 : -1;
        total += sign * binom * counts[static_cast<std::size_t>(k)];
        binom = binom * (d - k) / (k + 1);
    }
    return total;
}

}  // namespace ocp
