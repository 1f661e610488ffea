#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace parslice {

// All arithmetic in this library is exact. Rationals are GMP-backed; any
// expression-template result must be materialized into Rat before use.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Parses "a" or "a/b". Throws std::invalid_argument on malformed input.
Rat rat_parse(const std::string& s);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

using QVec = std::vector<Rat>;

} // namespace parslice
