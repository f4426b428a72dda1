#include "cadec/algnum.hpp"

#include <algorithm>
#include <sstream>

#include "cadec/elim.hpp"
#include "cadec/errors.hpp"
#include "cadec/interval.hpp"

namespace cadec {

// ---------------------------------------------------------------------------
// RealAlgebraic

RealAlgebraic RealAlgebraic::from_rational(const Rat& v) {
  RealAlgebraic r;
  r.exact_ = true;
  r.value_ = v;
  return r;
}

RealAlgebraic RealAlgebraic::from_root(up::Poly defpoly, up::RootInterval iv) {
  if (iv.exact()) return from_rational(iv.lo);
  if (up::deg(defpoly) == 1) {
    Rat v(-defpoly[0], defpoly[1]);
    v.canonicalize();
    return from_rational(v);
  }
  Rat probe = simplest_rational_between(iv.lo, iv.hi);
  if (probe > iv.lo && probe < iv.hi && up::sign_at(defpoly, probe) == 0)
    return from_rational(probe);
  RealAlgebraic r;
  r.exact_ = false;
  r.defpoly_ = up::normalized(defpoly);
  r.lo_ = iv.lo;
  r.hi_ = iv.hi;
  return r;
}

const Rat& RealAlgebraic::value() const {
  if (!exact_) throw PreconditionError("RealAlgebraic is not an exact rational");
  return value_;
}

RealAlgebraic RealAlgebraic::refined_once() const {
  if (exact_) return *this;
  up::RootInterval iv = up::bisect_once(defpoly_, {lo_, hi_});
  if (iv.exact()) return from_rational(iv.lo);
  RealAlgebraic r = *this;
  r.lo_ = iv.lo;
  r.hi_ = iv.hi;
  return r;
}

RealAlgebraic RealAlgebraic::refined_below(const Rat& width) const {
  RealAlgebraic r = *this;
  while (!r.exact_ && r.width() > width) r = r.refined_once();
  return r;
}

int RealAlgebraic::sign() const {
  if (exact_) return sign_of(value_);
  if (lo_ >= 0) return 1;
  if (hi_ <= 0) return -1;
  if (up::sign_at(defpoly_, Rat(0)) == 0) return 0;  // the interval's root is 0
  RealAlgebraic r = *this;
  while (!r.is_exact() && r.lo() < 0 && r.hi() > 0) r = r.refined_once();
  return r.sign();
}

int RealAlgebraic::compare_to_rational(const Rat& c) const {
  if (exact_) return cmp(value_, c);
  if (c <= lo_) return 1;
  if (c >= hi_) return -1;
  int sc = up::sign_at(defpoly_, c);
  if (sc == 0) return 0;  // c is the unique root inside the interval
  int slo = up::sign_at(defpoly_, lo_);
  return slo * sc < 0 ? -1 : 1;  // sign change on (lo, c) puts the root below c
}

int RealAlgebraic::compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.exact_) return -b.compare_to_rational(a.value_);
  if (b.exact_) return a.compare_to_rational(b.value_);
  // decisive equality test: a common root inside the overlap forces equality
  Rat lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
  if (lo < hi) {
    up::Poly g = up::gcd(a.defpoly_, b.defpoly_);
    if (up::deg(g) >= 1 && up::sign_at(g, lo) * up::sign_at(g, hi) < 0) return 0;
  }
  RealAlgebraic x = a, y = b;
  while (true) {
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    if (x.is_exact()) return -y.compare_to_rational(x.value());
    if (y.is_exact()) return x.compare_to_rational(y.value());
    x = x.refined_once();
    y = y.refined_once();
  }
}

double RealAlgebraic::approx() const {
  if (exact_) return value_.get_d();
  RealAlgebraic r = refined_below(Rat(1, 1 << 20));
  Rat mid = (r.lo() + r.hi()) / 2;
  return mid.get_d();
}

std::string RealAlgebraic::to_string() const {
  if (exact_) return rat_to_string(value_);
  std::ostringstream os;
  os << "root(";
  bool first = true;
  for (std::size_t i = defpoly_.size(); i-- > 0;) {
    if (defpoly_[i] == 0) continue;
    if (!first && defpoly_[i] > 0) os << "+";
    first = false;
    if (i == 0) {
      os << defpoly_[i].get_str();
    } else {
      if (defpoly_[i] == -1) os << "-";
      else if (defpoly_[i] != 1) os << defpoly_[i].get_str() << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  os << ", (" << rat_to_string(lo_) << ", " << rat_to_string(hi_) << "))";
  return os.str();
}

// ---------------------------------------------------------------------------
// SamplePoint

SamplePoint SamplePoint::extended(RealAlgebraic next) const {
  std::vector<RealAlgebraic> cs = coords_;
  cs.push_back(std::move(next));
  return SamplePoint(std::move(cs));
}

bool SamplePoint::all_rational() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const RealAlgebraic& c) { return c.is_exact(); });
}

std::vector<Rat> SamplePoint::rational_coords() const {
  std::vector<Rat> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.value());
  return out;
}

std::string SamplePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// isolation / refinement

std::vector<RealAlgebraic> isolate_real_roots(const MultiPoly& p) {
  if (p.is_zero()) throw PreconditionError("isolate_real_roots of the zero polynomial");
  if (p.is_constant()) return {};
  int v = p.mvar();
  up::Poly u = up::from_multipoly(p, static_cast<std::size_t>(v));
  up::Poly sf = up::squarefree_part(u);
  std::vector<RealAlgebraic> out;
  for (auto iv : up::isolate_roots(sf)) {
    if (!iv.exact()) {
      while (iv.lo == 0 || iv.hi == 0) iv = up::bisect_once(sf, iv);
    }
    out.push_back(RealAlgebraic::from_root(sf, iv));
  }
  return out;
}

RealAlgebraic refine(const RealAlgebraic& a, const Rat& width) {
  if (width <= 0) throw PreconditionError("refine width must be positive");
  return a.refined_below(width);
}

void separate(RealAlgebraic& a, RealAlgebraic& b) {
  while (!(a.hi() < b.lo())) {
    if (a.is_exact() && b.is_exact()) {
      if (a.value() < b.value()) return;  // adjacent exact values, strict gap exists
      throw PreconditionError("separate: roots are not in ascending order");
    }
    a = a.refined_once();
    b = b.refined_once();
  }
}

// ---------------------------------------------------------------------------
// sign_at

namespace {

MultiPoly lift_to_ext(const MultiPoly& p, const VarOrderPtr& ext) {
  MultiPoly r = MultiPoly::zero(ext);
  for (const auto& [e, c] : p.terms()) {
    ExpVec ne = e;
    ne.resize(ext->size(), 0);
    r += MultiPoly::monomial(ext, std::move(ne), c);
  }
  return r;
}

std::vector<QInterval> box_for(const std::vector<RealAlgebraic>& coords, std::size_t n) {
  std::vector<QInterval> box(n);
  for (std::size_t i = 0; i < coords.size() && i < n; ++i)
    box[i] = QInterval(coords[i].lo(), coords[i].hi());
  return box;
}

MultiPoly substitute_rationals(const MultiPoly& p, const SamplePoint& s) {
  std::map<std::size_t, Rat> bind;
  for (std::size_t i = 0; i < s.size() && i < p.nvars(); ++i)
    if (p.uses_var(i) && s.coord(i).is_exact()) bind[i] = s.coord(i).value();
  return bind.empty() ? p : p.eval_partial(bind);
}

std::vector<std::size_t> algebraic_vars_of(const MultiPoly& p, const SamplePoint& s) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < s.size() && i < p.nvars(); ++i)
    if (p.uses_var(i)) vars.push_back(i);
  return vars;
}

// Exact sign of a univariate integer polynomial at one algebraic point.
int sign_univariate_at(const up::Poly& u, const RealAlgebraic& alpha) {
  if (up::is_zero(u)) return 0;
  if (alpha.is_exact()) return up::sign_at(u, alpha.value());
  up::Poly g = up::gcd(u, alpha.defpoly());
  if (up::deg(g) >= 1 &&
      up::sign_at(g, alpha.lo()) * up::sign_at(g, alpha.hi()) < 0)
    return 0;
  // u(alpha) != 0 from here on; refine until the interval is sign-definite
  up::Poly usf = up::squarefree_part(u);
  RealAlgebraic a = alpha;
  while (!a.is_exact()) {
    int slo = up::sign_at(u, a.lo()), shi = up::sign_at(u, a.hi());
    if (slo != 0 && slo == shi && up::descartes_bound(usf, a.lo(), a.hi()) == 0)
      return slo;
    a = a.refined_once();
  }
  return up::sign_at(u, a.value());
}

}  // namespace

int sign_at(const MultiPoly& p, const SamplePoint& s) {
  if (p.is_constant()) return sign_of(p.constant_value());
  if (p.mvar() >= static_cast<int>(s.size()))
    throw PreconditionError("sign_at: sample point does not cover the polynomial");
  MultiPoly q = substitute_rationals(p, s);
  if (q.is_constant()) return sign_of(q.constant_value());
  std::vector<std::size_t> avars = algebraic_vars_of(q, s);
  if (avars.size() == 1)
    return sign_univariate_at(up::from_multipoly(q, avars[0]), s.coord(avars[0]));

  // several algebraic coordinates: intervals first, exact elimination for zero
  std::vector<RealAlgebraic> coords = s.coords();
  for (int round = 0; round < 3; ++round) {
    int sg = eval_box(q, box_for(coords, q.nvars())).sign();
    if (sg != 0) return sg;
    for (std::size_t v : avars) coords[v] = coords[v].refined_once();
  }

  // cheap nonzero witness: eliminate the coordinates from q itself
  bool known_nonzero = false;
  {
    MultiPoly w = q;
    bool degenerate = false;
    for (std::size_t v : avars) {
      if (w.degree(v) == 0) continue;
      MultiPoly defp = up::to_multipoly(s.coord(v).defpoly(), w.order(), v);
      MultiPoly r = resultant(defp, w, v);
      if (r.is_zero()) {
        degenerate = true;
        break;
      }
      w = r.normalized_primitive();
    }
    if (!degenerate && w.is_constant() && !w.is_zero()) known_nonzero = true;
  }

  // window (zlo, zhi) around 0 containing no conjugate value other than 0
  bool zero_window = false;
  Rat zlo(0), zhi(0);
  if (!known_nonzero) {
    std::vector<std::string> names = p.order()->names();
    names.push_back("@t");
    VarOrderPtr ext = VarOrder::make(std::move(names));
    std::size_t tvar = ext->size() - 1;
    MultiPoly g = MultiPoly::variable(ext, tvar) - lift_to_ext(q, ext);
    for (std::size_t v : avars) {
      if (g.degree(v) == 0) continue;
      MultiPoly defp = up::to_multipoly(s.coord(v).defpoly(), ext, v);
      g = resultant(defp, g, v).normalized_primitive();
    }
    up::Poly E = up::from_multipoly(g, tvar);
    if (up::is_zero(E)) throw Error("sign_at: degenerate value elimination");
    if (up::sign_at(E, Rat(0)) != 0) {
      known_nonzero = true;
    } else {
      // 0 is a root of E; bound the nearest nonzero roots away from it
      up::Poly Eq = up::squarefree_part(E);
      while (!Eq.empty() && Eq[0] == 0) Eq.erase(Eq.begin());
      Rat bound = up::root_bound(Eq);
      zlo = -bound;
      zhi = bound;
      for (auto iv : up::isolate_roots(Eq)) {
        while (!iv.exact() && (iv.lo == 0 || iv.hi == 0))
          iv = up::bisect_once(Eq, iv);
        if (iv.exact()) {
          if (iv.lo < 0 && iv.lo > zlo) zlo = iv.lo;
          if (iv.lo > 0 && iv.lo < zhi) zhi = iv.lo;
        } else if (iv.hi <= 0) {
          if (iv.hi > zlo) zlo = iv.hi;
        } else {
          if (iv.lo < zhi) zhi = iv.lo;
        }
      }
      zero_window = true;
    }
  }

  while (true) {
    QInterval j = eval_box(q, box_for(coords, q.nvars()));
    if (int sg = j.sign()) return sg;
    if (zero_window && j.lo > zlo && j.hi < zhi) return 0;
    for (std::size_t v : avars) coords[v] = coords[v].refined_once();
  }
}

// ---------------------------------------------------------------------------
// roots_at

bool nullified_at(const MultiPoly& p, const SamplePoint& s, std::size_t var) {
  for (const auto& c : p.coeffs_wrt(var))
    if (!c.is_zero() && sign_at(c, s) != 0) return false;
  return true;
}

std::vector<RealAlgebraic> roots_at(const MultiPoly& p, const SamplePoint& s,
                                    std::size_t var) {
  if (p.is_zero()) throw PreconditionError("roots_at of the zero polynomial");
  if (p.degree(var) == 0)
    throw PreconditionError("roots_at: polynomial does not involve the variable");
  if (nullified_at(p, s, var)) throw NullifiedError(p.to_string());

  MultiPoly work = substitute_rationals(p, s);
  std::vector<std::size_t> avars = algebraic_vars_of(work, s);

  // local defining polynomials; degeneracy recovery may shrink them to the
  // factor that actually carries the coordinate
  std::vector<up::Poly> defs(work.nvars());
  for (std::size_t v : avars) defs[v] = s.coord(v).defpoly();

  auto strip_common = [&](std::size_t v) {
    while (work.degree(v) > 0) {
      MultiPoly qv = up::to_multipoly(defs[v], work.order(), v);
      MultiPoly g = gcd(work, qv);
      if (g.is_constant()) return;
      if (sign_univariate_at(up::from_multipoly(g, v), s.coord(v)) == 0)
        throw NullifiedError(p.to_string());
      work = *divide_exact(work, g);
    }
  };

  up::Poly cand;
  while (true) {
    for (std::size_t v : avars)
      if (work.degree(v) > 0) strip_common(v);
    MultiPoly c = work;
    bool degenerate = false;
    for (std::size_t v : avars) {
      if (c.degree(v) == 0) continue;
      MultiPoly qv = up::to_multipoly(defs[v], c.order(), v);
      MultiPoly r = resultant(qv, c, v);
      if (r.is_zero()) {
        // a conjugate root of defs[v] nullifies the chain; split the defining
        // polynomial and keep the factor containing our coordinate
        up::Poly h = up::from_multipoly(gcd(c, qv), v);
        up::Poly rest = *up::divide_exact(defs[v], h);
        bool alpha_in_h =
            !s.coord(v).is_exact() &&
            up::sign_at(h, s.coord(v).lo()) * up::sign_at(h, s.coord(v).hi()) < 0;
        defs[v] = alpha_in_h ? h : rest;
        degenerate = true;
        break;
      }
      c = r.normalized_primitive();
    }
    if (degenerate) continue;
    cand = up::from_multipoly(c, var);
    break;
  }

  if (up::deg(cand) <= 0) return {};
  up::Poly csf = up::squarefree_part(cand);
  std::vector<RealAlgebraic> kept;
  if (avars.empty()) {
    // fully rational specialization: the candidates are exactly the roots
    for (auto iv : up::isolate_roots(csf)) kept.push_back(RealAlgebraic::from_root(csf, iv));
    return kept;
  }
  for (auto iv : up::isolate_roots(csf)) {
    RealAlgebraic gamma = RealAlgebraic::from_root(csf, iv);
    bool is_root = false;
    if (gamma.is_exact()) {
      is_root = sign_at(work, s.extended(gamma)) == 0;
    } else {
      // endpoint sign change across the isolating interval certifies the root
      // without an exact zero test
      RealAlgebraic g2 = gamma;
      bool decided = false;
      for (int tries = 0; tries < 6 && !g2.is_exact(); ++tries) {
        int slo = sign_at(work, s.extended(RealAlgebraic::from_rational(g2.lo())));
        int shi = sign_at(work, s.extended(RealAlgebraic::from_rational(g2.hi())));
        if (slo != 0 && shi != 0) {
          if (slo != shi) {
            is_root = true;
            decided = true;
          }
          break;
        }
        g2 = g2.refined_once();
      }
      gamma = g2;
      if (!decided && !is_root) is_root = sign_at(work, s.extended(g2)) == 0;
    }
    if (is_root) kept.push_back(std::move(gamma));
  }
  return kept;
}

}  // namespace cadec
