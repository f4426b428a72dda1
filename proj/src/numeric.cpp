#include "cadec/numeric.hpp"

namespace cadec {

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  // base is canonical, so num/den are coprime and powers stay coprime.
  return r;
}

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
  if (lo > hi) return simplest_rational_between(hi, lo);
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  // 0 < lo <= hi
  Int c = rat_ceil(lo);
  if (Rat(c) <= hi) return Rat(c);
  Int f = rat_floor(lo);
  // lo and hi share the integer part f; recurse on the fractional parts.
  Rat inv = simplest_rational_between(Rat(1) / (hi - Rat(f)), Rat(1) / (lo - Rat(f)));
  return Rat(f) + Rat(1) / inv;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace cadec
