#pragma once

#include <gmpxx.h>

#include <string>

namespace qrank {

/* Exact arbitrary-precision rational, the coefficient type for all series.
 * mpq_class arithmetic keeps results canonical; only direct (num, den)
 * construction needs an explicit canonicalize, which rat() takes care of. */
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/* "p/q", or just "p" when the denominator is 1. */
inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

} // namespace qrank
