#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cadec {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& z) { return sgn(z); }
inline int sign_of(const Rat& q) { return sgn(q); }

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, unsigned long e);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// The rational with the smallest denominator (then numerator) in [lo, hi].
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

std::string rat_to_string(const Rat& q);

}  // namespace cadec
