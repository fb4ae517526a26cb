#pragma once

#include <gmpxx.h>

#include <string>

namespace deltacalc {

// Exact rational scalar. GMP does the heavy lifting; everything built on top
// of this type is hand-rolled.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_parse(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

} // namespace deltacalc
