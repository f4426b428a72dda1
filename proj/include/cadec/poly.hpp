#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cadec/numeric.hpp"
#include "cadec/varorder.hpp"

namespace cadec {

// Exponent vector, one entry per variable of the order (dense).
using ExpVec = std::vector<std::uint32_t>;

// Pure lexicographic order with the highest variable most significant,
// greater-first so that map iteration starts at the leading term.
struct MonoLexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

// Exact multivariate polynomial over the rationals under a fixed variable
// order.  Canonical: no zero coefficients stored; the zero polynomial is the
// empty term map.
class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, Rat, MonoLexGreater>;

  MultiPoly() = default;  // placeholder with no order; assign before use

  static MultiPoly zero(VarOrderPtr order);
  static MultiPoly constant(VarOrderPtr order, const Rat& c);
  static MultiPoly variable(VarOrderPtr order, std::size_t index);
  static MultiPoly monomial(VarOrderPtr order, ExpVec exps, const Rat& c);

  const VarOrderPtr& order() const { return order_; }
  std::size_t nvars() const { return order_ ? order_->size() : 0; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // 0 for the zero polynomial

  // Highest variable index with positive degree, or -1 for constants.
  int mvar() const;
  int degree(std::size_t var) const;  // 0 for constants and the zero polynomial
  int total_degree() const;
  std::vector<int> degrees_per_var() const;
  bool uses_var(std::size_t var) const { return degree(var) > 0; }

  const ExpVec& lead_monomial() const;
  const Rat& lead_coeff() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator*(const MultiPoly& a, const Rat& c);
  MultiPoly pow(unsigned long e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  // Deterministic total order for canonical containers.
  int compare(const MultiPoly& o) const;
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.compare(b) < 0; }

  // Univariate view with respect to one variable: index = power of var.
  std::vector<MultiPoly> coeffs_wrt(std::size_t var) const;
  static MultiPoly from_coeffs_wrt(VarOrderPtr order, std::size_t var,
                                   const std::vector<MultiPoly>& coeffs);
  MultiPoly coeff_of(std::size_t var, unsigned power) const;
  MultiPoly lc_wrt(std::size_t var) const { return coeff_of(var, degree(var)); }

  MultiPoly derivative(std::size_t var) const;
  MultiPoly eval_partial(const std::map<std::size_t, Rat>& bind) const;
  Rat eval_full(const std::vector<Rat>& point) const;

  // Integer-primitive with positive leading coefficient (lex); constants map
  // to 1, zero stays zero.
  MultiPoly normalized_primitive() const;

  std::string to_string() const;
  static MultiPoly parse(const std::string& text, VarOrderPtr order);

 private:
  VarOrderPtr order_;
  TermMap terms_;
  void add_term(const ExpVec& e, const Rat& c);
  friend class PolyBuilder;
};

// Exact division in Q[x...]; nullopt when q does not divide p.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);
inline bool divides(const MultiPoly& q, const MultiPoly& p) {
  return divide_exact(p, q).has_value();
}

// Pseudo-remainder of f by g with respect to var: lc_v(g)^(deg f - deg g + 1) f = q g + rem.
MultiPoly pseudo_rem(const MultiPoly& f, const MultiPoly& g, std::size_t var);

// Normalized-primitive, positive-lc gcd; gcd(0, q) = normalized q.
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);
MultiPoly gcd_list(const std::vector<MultiPoly>& ps);

// p = content * prim with prim integer-primitive, positive-lc and content-free
// with respect to var; content is the exact cofactor p / prim.  (0, 0) for p = 0.
std::pair<MultiPoly, MultiPoly> content_prim(const MultiPoly& p, std::size_t var);

// Yun decomposition with respect to var: list of (factor, multiplicity) with
// pairwise-coprime squarefree factors.  Input must have positive degree in var.
std::vector<std::pair<MultiPoly, int>> squarefree_decompose(const MultiPoly& p,
                                                            std::size_t var);
MultiPoly squarefree_part(const MultiPoly& p, std::size_t var);

// Deduplicated set of normalized nonconstant polynomials.
class PolySet {
 public:
  PolySet() = default;
  explicit PolySet(VarOrderPtr order) : order_(std::move(order)) {}

  // Normalizes to integer-primitive positive-lc form; drops constants and zero.
  void insert(const MultiPoly& p);
  void insert_all(const PolySet& other);
  bool contains(const MultiPoly& p) const;
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  std::vector<MultiPoly> to_vector() const { return {elems_.begin(), elems_.end()}; }
  const VarOrderPtr& order() const { return order_; }

  friend bool operator==(const PolySet& a, const PolySet& b) { return a.elems_ == b.elems_; }

 private:
  VarOrderPtr order_;
  std::set<MultiPoly> elems_;
};

// Finest squarefree basis: squarefree factors of each element refined by
// pairwise gcd splitting until pairwise coprime.  Every element of A has main
// variable var (precondition).
PolySet squarefree_basis(const PolySet& A, std::size_t var);

}  // namespace cadec
