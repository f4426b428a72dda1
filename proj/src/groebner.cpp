#include "cadec/groebner.hpp"

#include <algorithm>
#include <set>

#include "cadec/errors.hpp"

namespace cadec {

namespace {

bool mono_divides(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExpVec mono_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExpVec mono_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

int mono_total(const ExpVec& a) {
  int s = 0;
  for (auto x : a) s += static_cast<int>(x);
  return s;
}

MultiPoly reduce_by(const MultiPoly& p, const std::vector<MultiPoly>& gens) {
  MultiPoly rem = MultiPoly::zero(p.order());
  MultiPoly h = p;
  while (!h.is_zero()) {
    bool reduced_step = false;
    const ExpVec& lm = h.lead_monomial();
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (!mono_divides(g.lead_monomial(), lm)) continue;
      MultiPoly t = MultiPoly::monomial(p.order(), mono_sub(lm, g.lead_monomial()),
                                        h.lead_coeff() / g.lead_coeff());
      h -= t * g;
      reduced_step = true;
      break;
    }
    if (!reduced_step) {
      MultiPoly lt = MultiPoly::monomial(p.order(), lm, h.lead_coeff());
      rem += lt;
      h -= lt;
    }
  }
  return rem;
}

}  // namespace

MultiPoly reduce(const MultiPoly& p, const GroebnerBasis& G) {
  require_same_order(p.order(), G.order.vars);
  return reduce_by(p, G.gens);
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  require_same_order(f.order(), g.order());
  ExpVec l = mono_lcm(f.lead_monomial(), g.lead_monomial());
  MultiPoly tf = MultiPoly::monomial(f.order(), mono_sub(l, f.lead_monomial()),
                                     g.lead_coeff());
  MultiPoly tg = MultiPoly::monomial(f.order(), mono_sub(l, g.lead_monomial()),
                                     f.lead_coeff());
  return tf * f - tg * g;
}

GroebnerBasis buchberger(const PolySet& F, const MonomialOrder& order) {
  if (F.empty()) throw PreconditionError("buchberger: empty input");
  GroebnerBasis out;
  out.order = order;
  out.order.vars = F.order();

  std::vector<MultiPoly> gens;
  for (const auto& p : F) gens.push_back(p.normalized_primitive());

  struct Pair {
    std::size_t i, j;
    ExpVec lcm;
    int total;
  };
  auto make_pair = [&](std::size_t i, std::size_t j) {
    Pair p{i, j, mono_lcm(gens[i].lead_monomial(), gens[j].lead_monomial()), 0};
    p.total = mono_total(p.lcm);
    return p;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    if (a.total != b.total) return a.total < b.total;
    if (a.lcm != b.lcm) return MonoLexGreater{}(b.lcm, a.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> done;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) pending.push_back(make_pair(i, j));

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair pr = *it;
    pending.erase(it);
    done.insert({pr.i, pr.j});

    const MultiPoly& f = gens[pr.i];
    const MultiPoly& g = gens[pr.j];
    // first criterion: coprime leading monomials
    ExpVec prod(f.nvars());
    for (std::size_t k = 0; k < prod.size(); ++k)
      prod[k] = f.lead_monomial()[k] + g.lead_monomial()[k];
    if (prod == pr.lcm) continue;
    // chain criterion: some k with lm(k) | lcm(i,j) and both other pairs done
    bool skip = false;
    for (std::size_t k = 0; k < gens.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!mono_divides(gens[k].lead_monomial(), pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    MultiPoly s = s_polynomial(f, g);
    MultiPoly r = reduce_by(s, gens);
    if (r.is_zero()) continue;
    r = r.normalized_primitive();
    if (r.is_constant()) {
      out.gens = {MultiPoly::constant(F.order(), Rat(1))};
      out.reduced = true;
      return out;
    }
    std::size_t idx = gens.size();
    gens.push_back(r);
    for (std::size_t k = 0; k < idx; ++k) pending.push_back(make_pair(k, idx));
  }

  // minimalize: drop generators whose leading term is divisible by another's
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < gens.size() && !drop; ++j) {
      if (i == j) continue;
      if (mono_divides(gens[j].lead_monomial(), gens[i].lead_monomial())) {
        if (gens[j].lead_monomial() == gens[i].lead_monomial())
          drop = j < i;  // keep one representative per leading monomial
        else
          drop = true;
      }
    }
    if (!drop) minimal.push_back(gens[i]);
  }
  // inter-reduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MultiPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      MultiPoly r = reduce_by(minimal[i], others);
      if (r.is_zero()) {
        minimal.erase(minimal.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      r = r.normalized_primitive();
      if (!(r == minimal[i])) {
        minimal[i] = r;
        changed = true;
      }
    }
  }

  // unit ideal: canonicalize to { 1 }
  for (const auto& g : minimal) {
    if (g.is_constant() && !g.is_zero()) {
      out.gens = {MultiPoly::constant(F.order(), Rat(1))};
      out.reduced = true;
      return out;
    }
  }
  std::sort(minimal.begin(), minimal.end());
  out.gens = std::move(minimal);
  out.reduced = true;
  return out;
}

std::map<std::size_t, PolySet> elimination_split(const GroebnerBasis& G) {
  std::map<std::size_t, PolySet> buckets;
  const VarOrderPtr& ord = G.order.vars;
  for (std::size_t v = 0; v < ord->size(); ++v) buckets.emplace(v, PolySet(ord));
  for (const auto& g : G.gens) {
    int mv = g.mvar();
    if (mv >= 0) buckets.at(static_cast<std::size_t>(mv)).insert(g);
  }
  return buckets;
}

}  // namespace cadec
