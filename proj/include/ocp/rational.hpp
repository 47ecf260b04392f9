#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ocp {

// Exact arbitrary-precision rational; every result of arithmetic is
// canonical. Floating point is not used anywhere downstream of this type.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;

inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "3", "-1/2"
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace ocp
