#include "cadec/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cadec/detail/lexer.hpp"
#include "cadec/errors.hpp"

namespace cadec {

namespace {

const Rat kRatZero(0);

ExpVec zero_exps(std::size_t n) { return ExpVec(n, 0); }

}  // namespace

MultiPoly MultiPoly::zero(VarOrderPtr order) {
  MultiPoly p;
  p.order_ = std::move(order);
  return p;
}

MultiPoly MultiPoly::constant(VarOrderPtr order, const Rat& c) {
  MultiPoly p = zero(std::move(order));
  if (c != 0) p.terms_.emplace(zero_exps(p.nvars()), c);
  return p;
}

MultiPoly MultiPoly::variable(VarOrderPtr order, std::size_t index) {
  MultiPoly p = zero(std::move(order));
  if (index >= p.nvars()) throw PreconditionError("variable index out of range");
  ExpVec e = zero_exps(p.nvars());
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

MultiPoly MultiPoly::monomial(VarOrderPtr order, ExpVec exps, const Rat& c) {
  MultiPoly p = zero(std::move(order));
  if (exps.size() != p.nvars()) throw PreconditionError("exponent vector length mismatch");
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return kRatZero;
  if (!is_constant()) throw PreconditionError("polynomial is not constant");
  return terms_.begin()->second;
}

int MultiPoly::mvar() const {
  int m = -1;
  for (const auto& [e, c] : terms_)
    for (std::size_t v = e.size(); v-- > 0;) {
      if (e[v] > 0 && static_cast<int>(v) > m) m = static_cast<int>(v);
      if (static_cast<int>(v) <= m) break;
    }
  return m;
}

int MultiPoly::degree(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    d = std::max(d, s);
  }
  return d;
}

std::vector<int> MultiPoly::degrees_per_var() const {
  std::vector<int> out(nvars(), 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t v = 0; v < e.size(); ++v)
      out[v] = std::max(out[v], static_cast<int>(e[v]));
  return out;
}

const ExpVec& MultiPoly::lead_monomial() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rat& MultiPoly::lead_coeff() const {
  if (terms_.empty()) return kRatZero;
  return terms_.begin()->second;
}

void MultiPoly::add_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_order(order_, o.order_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_order(order_, o.order_);
  for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_order(a.order_, b.order_);
  MultiPoly r = MultiPoly::zero(a.order_);
  ExpVec e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const MultiPoly& a, const Rat& c) {
  MultiPoly r = MultiPoly::zero(a.order_);
  if (c == 0) return r;
  for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, k * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
  MultiPoly r = constant(order_, Rat(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

int MultiPoly::compare(const MultiPoly& o) const {
  auto it = terms_.begin(), jt = o.terms_.begin();
  MonoLexGreater gt;
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return gt(it->first, jt->first) ? 1 : -1;
    int c = cmp(it->second, jt->second);
    if (c != 0) return c;
  }
  if (it != terms_.end()) return 1;
  if (jt != o.terms_.end()) return -1;
  return 0;
}

std::vector<MultiPoly> MultiPoly::coeffs_wrt(std::size_t var) const {
  if (is_zero()) return {};
  std::vector<MultiPoly> out(static_cast<std::size_t>(degree(var)) + 1, zero(order_));
  for (const auto& [e, c] : terms_) {
    ExpVec r = e;
    std::uint32_t k = r[var];
    r[var] = 0;
    out[k].add_term(r, c);
  }
  return out;
}

MultiPoly MultiPoly::from_coeffs_wrt(VarOrderPtr order, std::size_t var,
                                     const std::vector<MultiPoly>& coeffs) {
  MultiPoly r = zero(order);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms()) {
      ExpVec ne = e;
      ne[var] += static_cast<std::uint32_t>(k);
      r.add_term(ne, c);
    }
  }
  return r;
}

MultiPoly MultiPoly::coeff_of(std::size_t var, unsigned power) const {
  MultiPoly r = zero(order_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    ExpVec ne = e;
    ne[var] = 0;
    r.add_term(ne, c);
  }
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r = zero(order_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec ne = e;
    ne[var] -= 1;
    r.add_term(ne, c * Rat(static_cast<unsigned long>(e[var])));
  }
  return r;
}

MultiPoly MultiPoly::eval_partial(const std::map<std::size_t, Rat>& bind) const {
  for (const auto& [v, val] : bind)
    if (v >= nvars()) throw PreconditionError("bound variable out of range");
  MultiPoly r = zero(order_);
  for (const auto& [e, c] : terms_) {
    Rat k = c;
    ExpVec ne = e;
    for (const auto& [v, val] : bind) {
      if (ne[v] > 0) {
        k *= rat_pow(val, ne[v]);
        ne[v] = 0;
      }
    }
    r.add_term(ne, k);
  }
  return r;
}

Rat MultiPoly::eval_full(const std::vector<Rat>& point) const {
  if (point.size() != nvars()) throw PreconditionError("point dimension mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat k = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) k *= rat_pow(point[v], e[v]);
    acc += k;
  }
  return acc;
}

MultiPoly MultiPoly::normalized_primitive() const {
  if (terms_.empty()) return *this;
  // lcm of denominators, gcd of numerators
  Int den_lcm(1), num_gcd(0);
  for (const auto& [e, c] : terms_) {
    Int den(mpq_denref(c.get_mpq_t()));
    Int num(mpq_numref(c.get_mpq_t()));
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (lead_coeff() < 0) scale = -scale;
  return *this * scale;
}

// ---------------------------------------------------------------------------
// division / gcd

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  require_same_order(p.order(), q.order());
  if (q.is_zero()) return std::nullopt;
  MultiPoly rem = p;
  MultiPoly quot = MultiPoly::zero(p.order());
  const ExpVec& lmq = q.lead_monomial();
  const Rat& lcq = q.lead_coeff();
  std::size_t n = p.nvars();
  while (!rem.is_zero()) {
    const ExpVec& lmr = rem.lead_monomial();
    ExpVec d(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (lmr[i] < lmq[i]) return std::nullopt;
      d[i] = lmr[i] - lmq[i];
    }
    MultiPoly t = MultiPoly::monomial(p.order(), std::move(d), rem.lead_coeff() / lcq);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

MultiPoly pseudo_rem(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  require_same_order(f.order(), g.order());
  int df = f.degree(var), dg = g.degree(var);
  if (g.is_zero() || g.degree(var) == 0)
    throw PreconditionError("pseudo_rem divisor must have positive degree in var");
  if (df < dg) {
    // convention: lc^(delta+1) with delta < 0 still means multiply by lc^0
    return f;
  }
  MultiPoly lg = g.lc_wrt(var);
  MultiPoly rem = f;
  int steps = 0;
  while (!rem.is_zero() && rem.degree(var) >= dg) {
    int dr = rem.degree(var);
    MultiPoly lead = rem.lc_wrt(var);
    // rem := lg * rem - lead * x^(dr-dg) * g
    MultiPoly shift = MultiPoly::variable(f.order(), var).pow(dr - dg);
    rem = rem * lg - lead * shift * g;
    ++steps;
  }
  // pad to the exact lc^(df - dg + 1) convention
  for (int k = steps; k < df - dg + 1; ++k) rem = rem * lg;
  return rem;
}

namespace {

// content of p with respect to var: gcd of the coefficients (polynomials in
// the remaining variables), normalized-primitive
MultiPoly content_wrt(const MultiPoly& p, std::size_t var) {
  std::vector<MultiPoly> cs = p.coeffs_wrt(var);
  std::vector<MultiPoly> nz;
  for (auto& c : cs)
    if (!c.is_zero()) nz.push_back(std::move(c));
  return gcd_list(nz);
}

MultiPoly primitive_wrt(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  MultiPoly c = content_wrt(p, var);
  auto q = divide_exact(p, c);
  return q->normalized_primitive();
}

}  // namespace

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q) {
  require_same_order(p.order(), q.order());
  if (p.is_zero()) return q.normalized_primitive();
  if (q.is_zero()) return p.normalized_primitive();
  if (p.is_constant() || q.is_constant())
    return MultiPoly::constant(p.order(), Rat(1));
  int v = std::max(p.mvar(), q.mvar());
  std::size_t var = static_cast<std::size_t>(v);
  if (p.degree(var) == 0) return gcd(p, content_wrt(q, var));
  if (q.degree(var) == 0) return gcd(content_wrt(p, var), q);

  MultiPoly cp = content_wrt(p, var), cq = content_wrt(q, var);
  MultiPoly cg = gcd(cp, cq);
  MultiPoly a = divide_exact(p, cp)->normalized_primitive();
  MultiPoly b = divide_exact(q, cq)->normalized_primitive();
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  // primitive polynomial remainder sequence
  while (true) {
    if (b.is_zero()) break;
    if (b.degree(var) == 0) {
      // primitive parts coprime in var
      return cg.normalized_primitive();
    }
    MultiPoly r = pseudo_rem(a, b, var);
    a = b;
    b = r.is_zero() ? r : primitive_wrt(r, var);
  }
  return (cg * a).normalized_primitive();
}

MultiPoly gcd_list(const std::vector<MultiPoly>& ps) {
  if (ps.empty()) throw PreconditionError("gcd_list of empty list");
  MultiPoly g = ps[0].normalized_primitive();
  for (std::size_t i = 1; i < ps.size() && !g.is_constant(); ++i) g = gcd(g, ps[i]);
  if (g.is_zero()) return g;
  return g.normalized_primitive();
}

std::pair<MultiPoly, MultiPoly> content_prim(const MultiPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw PreconditionError("variable index out of range");
  if (p.is_zero()) return {p, p};
  MultiPoly prim = primitive_wrt(p, var);
  MultiPoly content = *divide_exact(p, prim);
  return {content, prim};
}

std::vector<std::pair<MultiPoly, int>> squarefree_decompose(const MultiPoly& p,
                                                            std::size_t var) {
  if (p.degree(var) <= 0)
    throw PreconditionError("squarefree_decompose input must have positive degree in var");
  // Yun's algorithm over Q[lower vars][var]
  std::vector<std::pair<MultiPoly, int>> out;
  MultiPoly f = p.normalized_primitive();
  MultiPoly fp = f.derivative(var);
  MultiPoly g = gcd(f, fp);
  MultiPoly b = *divide_exact(f, g);
  MultiPoly c = *divide_exact(fp, g);
  MultiPoly d = c - b.derivative(var);
  int i = 1;
  while (!(b.is_constant())) {
    MultiPoly a = gcd(b, d);
    if (!a.is_constant()) out.emplace_back(a.normalized_primitive(), i);
    b = *divide_exact(b, a);
    c = *divide_exact(d, a);
    d = c - b.derivative(var);
    ++i;
  }
  return out;
}

MultiPoly squarefree_part(const MultiPoly& p, std::size_t var) {
  if (p.degree(var) <= 0) return p.normalized_primitive();
  MultiPoly g = gcd(p, p.derivative(var));
  return divide_exact(p, g)->normalized_primitive();
}

// ---------------------------------------------------------------------------
// PolySet

void PolySet::insert(const MultiPoly& p) {
  if (!order_) order_ = p.order();
  require_same_order(order_, p.order());
  if (p.is_zero() || p.is_constant()) return;
  elems_.insert(p.normalized_primitive());
}

void PolySet::insert_all(const PolySet& other) {
  for (const auto& p : other) insert(p);
}

bool PolySet::contains(const MultiPoly& p) const {
  return elems_.count(p.normalized_primitive()) > 0;
}

PolySet squarefree_basis(const PolySet& A, std::size_t var) {
  PolySet basis(A.order());
  for (const auto& p : A) {
    if (p.mvar() != static_cast<int>(var))
      throw PreconditionError("squarefree_basis: element main variable mismatch");
    MultiPoly prim = content_prim(p, var).second;
    for (const auto& [f, mult] : squarefree_decompose(prim, var)) basis.insert(f);
  }
  // pairwise gcd refinement to a fixed point
  std::vector<MultiPoly> work = basis.to_vector();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        MultiPoly g = gcd(work[i], work[j]);
        if (g.is_constant()) continue;
        MultiPoly a = divide_exact(work[i], g)->normalized_primitive();
        MultiPoly b = divide_exact(work[j], g)->normalized_primitive();
        std::vector<MultiPoly> next;
        for (std::size_t k = 0; k < work.size(); ++k)
          if (k != i && k != j) next.push_back(work[k]);
        for (auto& q : {g, a, b})
          if (!q.is_constant()) next.push_back(q);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        work = std::move(next);
        changed = true;
      }
    }
  }
  PolySet out(A.order());
  for (const auto& p : work) out.insert(p);
  return out;
}

// ---------------------------------------------------------------------------
// printing / parsing

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += order_->name(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      os << rat_to_string(a);
    } else if (a == 1) {
      os << mono;
    } else {
      os << rat_to_string(a) << "*" << mono;
    }
  }
  return os.str();
}

namespace {

using detail::Tok;
using detail::Token;

class PolyParser {
 public:
  PolyParser(const std::vector<Token>& toks, std::size_t& pos, VarOrderPtr order)
      : toks_(toks), pos_(pos), order_(std::move(order)) {}

  MultiPoly parse_expr() {
    MultiPoly acc = parse_term();
    while (cur().kind == Tok::kPlus || cur().kind == Tok::kMinus) {
      bool minus = cur().kind == Tok::kMinus;
      ++pos_;
      MultiPoly t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }

  MultiPoly parse_term() {
    bool neg = false;
    while (cur().kind == Tok::kMinus || cur().kind == Tok::kPlus) {
      if (cur().kind == Tok::kMinus) neg = !neg;
      ++pos_;
    }
    MultiPoly acc = parse_factor();
    while (cur().kind == Tok::kStar) {
      ++pos_;
      acc = acc * parse_factor();
    }
    return neg ? -acc : acc;
  }

  MultiPoly parse_factor() {
    MultiPoly base = parse_base();
    if (cur().kind == Tok::kCaret) {
      ++pos_;
      if (cur().kind != Tok::kNumber || cur().value < 0 ||
          mpz_cmp_ui(mpq_denref(cur().value.get_mpq_t()), 1) != 0)
        throw ParseError("exponent must be a nonnegative integer", cur().pos);
      unsigned long e = mpz_get_ui(mpq_numref(cur().value.get_mpq_t()));
      ++pos_;
      return base.pow(e);
    }
    return base;
  }

  MultiPoly parse_base() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::kNumber:
        ++pos_;
        return MultiPoly::constant(order_, t.value);
      case Tok::kIdent: {
        int idx = order_->index_of(t.text);
        if (idx < 0) throw ParseError("unknown variable '" + t.text + "'", t.pos);
        ++pos_;
        return MultiPoly::variable(order_, static_cast<std::size_t>(idx));
      }
      case Tok::kLParen: {
        ++pos_;
        MultiPoly inner = parse_expr();
        if (cur().kind != Tok::kRParen) throw ParseError("expected ')'", cur().pos);
        ++pos_;
        return inner;
      }
      case Tok::kMinus: {
        ++pos_;
        return -parse_base();
      }
      default:
        throw ParseError("expected polynomial", t.pos);
    }
  }

  const std::vector<Token>& toks_;
  std::size_t& pos_;
  VarOrderPtr order_;
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, VarOrderPtr order) {
  std::vector<Token> toks = detail::lex(text);
  std::size_t pos = 0;
  PolyParser parser(toks, pos, order);
  MultiPoly p = parser.parse_expr();
  if (toks[pos].kind != Tok::kEnd)
    throw ParseError("trailing input after polynomial", toks[pos].pos);
  return p;
}

}  // namespace cadec
