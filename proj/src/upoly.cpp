#include "cadec/upoly.hpp"

#include <algorithm>

#include "cadec/errors.hpp"

namespace cadec::up {

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

Poly neg(Poly a) {
  for (auto& c : a) c = -c;
  return a;
}

Poly scale(Poly a, const Int& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Int(static_cast<unsigned long>(i));
  return trim(std::move(r));
}

Int content(const Poly& p) {
  Int g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Poly primitive_part(const Poly& p) {
  if (p.empty()) return p;
  Int g = content(p);
  Poly r = p;
  for (auto& c : r) c /= g;
  return r;
}

Poly normalized(const Poly& p) {
  Poly r = primitive_part(p);
  if (!r.empty() && r.back() < 0)
    for (auto& c : r) c = -c;
  return r;
}

Rat eval(const Poly& p, const Rat& x) {
  Rat acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
  return acc;
}

int sign_at(const Poly& p, const Rat& x) {
  // sum c_i * num^i * den^(n-i) has the sign of p(x)
  if (p.empty()) return 0;
  Int num(mpq_numref(x.get_mpq_t())), den(mpq_denref(x.get_mpq_t()));
  Int acc(0), dpow(1);
  std::vector<Int> npow(p.size(), Int(1));
  for (std::size_t i = 1; i < p.size(); ++i) npow[i] = npow[i - 1] * num;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc += p[i] * npow[i] * dpow;
    dpow *= den;
  }
  return sgn(acc);
}

namespace {

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_rem_int(Poly a, const Poly& b) {
  int da = deg(a), db = deg(b);
  if (db < 0) throw PreconditionError("pseudo_rem by zero");
  if (da < db) return a;
  const Int& lb = b.back();
  int steps = 0;
  while (!a.empty() && deg(a) >= db) {
    Int lead = a.back();
    int shift = deg(a) - db;
    Poly next(a.size() - 1, Int(0));
    // next = lb*a - lead*x^shift*b, dropping the cancelled leading term
    for (int i = 0; i < static_cast<int>(a.size()) - 1; ++i) next[i] = lb * a[i];
    for (int i = 0; i < db; ++i) next[i + shift] -= lead * b[i];
    a = trim(std::move(next));
    ++steps;
  }
  for (int k = steps; k < da - db + 1; ++k) a = scale(std::move(a), lb);
  return a;
}

}  // namespace

Poly gcd(Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  if (a.empty()) return normalized(b);
  if (b.empty()) return normalized(a);
  if (deg(a) < deg(b)) std::swap(a, b);
  a = primitive_part(a);
  b = primitive_part(b);
  while (true) {
    if (b.empty()) return normalized(a);
    if (deg(b) == 0) return {Int(1)};
    Poly r = pseudo_rem_int(a, b);
    a = std::move(b);
    b = primitive_part(trim(std::move(r)));
  }
}

Poly squarefree_part(const Poly& p) {
  if (deg(p) <= 0) return normalized(p);
  Poly g = gcd(p, derivative(p));
  auto q = divide_exact(p, g);
  return normalized(*q);
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return Poly{};
  if (deg(a) < deg(b)) return std::nullopt;
  // rational long division, then integrality check
  std::vector<Rat> rem(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) rem[i] = Rat(a[i]);
  std::vector<Rat> quot(a.size() - b.size() + 1, Rat(0));
  Rat lb(b.back());
  int db = deg(b);
  int dr = deg(a);
  auto rdeg = [&]() {
    int d = static_cast<int>(rem.size()) - 1;
    while (d >= 0 && rem[d] == 0) --d;
    return d;
  };
  while ((dr = rdeg()) >= db) {
    Rat c = rem[dr] / lb;
    quot[dr - db] = c;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * Rat(b[i]);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  Poly out(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (mpz_cmp_ui(mpq_denref(quot[i].get_mpq_t()), 1) != 0) return std::nullopt;
    out[i] = Int(mpq_numref(quot[i].get_mpq_t()));
  }
  return trim(std::move(out));
}

Rat root_bound(const Poly& p) {
  if (deg(p) <= 0) return Rat(1);
  // Cauchy: 1 + max |c_i| / |c_n|, rounded up to a power of two
  Rat m(0);
  Rat lead = rat_abs(Rat(p.back()));
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rat v = rat_abs(Rat(p[i])) / lead;
    if (v > m) m = v;
  }
  Rat bound = m + 1;
  Rat b(1);
  while (b < bound) b *= 2;
  return b;
}

namespace {

int sign_variations(const std::vector<Int>& cs) {
  int v = 0, last = 0;
  for (const auto& c : cs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int descartes_bound(const Poly& p, const Rat& a, const Rat& b) {
  // Horner evaluation of G(t) = (Q(1+t))^n * P((A+Bt)/(Q(1+t)))-style form with
  // A/Q = a, B/Q = b on a common denominator; variations of G bound the roots
  // of P in the open interval (a, b).
  if (p.empty()) throw PreconditionError("descartes_bound of zero polynomial");
  Int qa(mpq_denref(a.get_mpq_t())), qb(mpq_denref(b.get_mpq_t()));
  Int Q;
  mpz_lcm(Q.get_mpz_t(), qa.get_mpz_t(), qb.get_mpz_t());
  Int A = Int(mpq_numref(a.get_mpq_t())) * (Q / qa);
  Int B = Int(mpq_numref(b.get_mpq_t())) * (Q / qb);
  // N(t) = A + B t, M(t) = Q + Q t
  Poly N = trim(Poly{A, B});
  Poly M = {Q, Q};
  Poly U = {p.back()};
  Poly Mp = {Int(1)};
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    Mp = mul(Mp, M);
    U = add(mul(U, N), scale(Mp, p[i]));
  }
  return sign_variations(U);
}

namespace {

void isolate_rec(const Poly& p, const Rat& a, const Rat& b,
                 std::vector<RootInterval>& out) {
  int v = descartes_bound(p, a, b);
  if (v == 0) return;
  if (v == 1 && sign_at(p, a) != 0 && sign_at(p, b) != 0) {
    out.push_back({a, b});
    return;
  }
  Rat m = (a + b) / 2;
  if (sign_at(p, m) == 0) out.push_back({m, m});
  isolate_rec(p, a, m, out);
  isolate_rec(p, m, b, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const Poly& squarefree) {
  Poly p = trim(squarefree);
  if (deg(p) <= 0) return {};
  std::vector<RootInterval> out;
  // strip the root at zero
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  Poly q(p.begin() + static_cast<long>(k), p.end());
  Rat bound = root_bound(q);
  std::vector<RootInterval> neg, pos;
  isolate_rec(q, -bound, Rat(0), neg);
  isolate_rec(q, Rat(0), bound, pos);
  std::sort(neg.begin(), neg.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  std::sort(pos.begin(), pos.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  out = std::move(neg);
  if (k > 0) out.push_back({Rat(0), Rat(0)});
  out.insert(out.end(), pos.begin(), pos.end());
  // detect simple rational roots early: probe the simplest rational inside
  for (auto& iv : out) {
    if (iv.exact()) continue;
    Rat probe = simplest_rational_between(iv.lo, iv.hi);
    if (probe > iv.lo && probe < iv.hi && sign_at(q, probe) == 0) iv = {probe, probe};
  }
  return out;
}

RootInterval bisect_once(const Poly& p, const RootInterval& iv) {
  if (iv.exact()) return iv;
  Rat m = (iv.lo + iv.hi) / 2;
  int sm = sign_at(p, m);
  if (sm == 0) return {m, m};
  return sign_at(p, iv.lo) * sm < 0 ? RootInterval{iv.lo, m} : RootInterval{m, iv.hi};
}

Poly from_multipoly(const MultiPoly& p, std::size_t var) {
  std::vector<MultiPoly> cs = p.coeffs_wrt(var);
  Int den_lcm(1);
  std::vector<Rat> rats(cs.size(), Rat(0));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!cs[i].is_constant())
      throw PreconditionError("from_multipoly: polynomial is not univariate in var");
    rats[i] = cs[i].constant_value();
    Int den(mpq_denref(rats[i].get_mpq_t()));
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
  }
  Poly out(rats.size());
  for (std::size_t i = 0; i < rats.size(); ++i) {
    Rat v = rats[i] * Rat(den_lcm);
    out[i] = Int(mpq_numref(v.get_mpq_t()));
  }
  return trim(std::move(out));
}

MultiPoly to_multipoly(const Poly& p, const VarOrderPtr& order, std::size_t var) {
  MultiPoly r = MultiPoly::zero(order);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    ExpVec e(order->size(), 0);
    e[var] = static_cast<std::uint32_t>(i);
    r += MultiPoly::monomial(order, std::move(e), Rat(p[i]));
  }
  return r;
}

}  // namespace cadec::up
