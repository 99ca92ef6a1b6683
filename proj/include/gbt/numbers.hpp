#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gbt {

// Arbitrary-precision integers and rationals. All exact-path arithmetic in
// this project goes through these; fixed-width integers appear only where a
// size cap bounds the range.
using Int = mpz_class;
using Rat = mpq_class;

// num/den in canonical form (den > 0, gcd(|num|, den) = 1).
inline Rat make_rat(Int num, Int den) {
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Exact value of a finite double (binary fraction).
inline Rat rat_from_double(double x) { return Rat(x); }

inline int sign(const Rat& v) { return sgn(v); }
inline int sign(const Int& v) { return sgn(v); }

}  // namespace gbt
