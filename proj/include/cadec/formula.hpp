#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cadec/algnum.hpp"
#include "cadec/poly.hpp"

namespace cadec {

enum class Rel { kEq, kNeq, kLt, kLe, kGt, kGe };

std::string rel_to_string(Rel r);
bool rel_holds(Rel r, int sign);

// Quantifier-free Tarski formula: And/Or/Not over sign conditions p rel 0.
class QFF;
using QFFPtr = std::shared_ptr<const QFF>;

class QFF {
 public:
  enum class Kind { kAnd, kOr, kNot, kAtom };

  static QFFPtr make_atom(MultiPoly p, Rel rel);
  static QFFPtr make_and(std::vector<QFFPtr> children);
  static QFFPtr make_or(std::vector<QFFPtr> children);
  static QFFPtr make_not(QFFPtr child);

  Kind kind() const { return kind_; }
  const std::vector<QFFPtr>& children() const { return children_; }
  const MultiPoly& poly() const { return poly_; }
  Rel rel() const { return rel_; }

  std::string to_string() const;

 private:
  Kind kind_ = Kind::kAtom;
  std::vector<QFFPtr> children_;
  MultiPoly poly_;
  Rel rel_ = Rel::kEq;
};

struct ParsedFormula {
  QFFPtr formula;
  VarOrderPtr order;
};

// Input grammar: optional `vars: z > y > x > w` header (highest first), then
// one formula over /\ \/ ~ (also && || !) and relations = != < <= > >=.
// order_override wins over the header; with neither, variables are collected
// and sorted ascending by name.
ParsedFormula parse_formula(const std::string& text,
                            VarOrderPtr order_override = nullptr);

// Parse just the variable-order header syntax "z > y > x > w" (highest first).
VarOrderPtr parse_order_spec(const std::string& text);

PolySet defining_polynomials(const QFFPtr& f);

// Polynomials p with an atom p = 0 reachable from the root through And nodes
// only (the syntactic sufficient condition for an equational constraint).
PolySet explicit_ecs(const QFFPtr& f);

bool eval_truth(const QFFPtr& f, const SamplePoint& s);
bool eval_truth_rational(const QFFPtr& f, const std::vector<Rat>& point);

// Negation normal form (tests use it to cross-check evaluation).
QFFPtr nnf(const QFFPtr& f, bool negate = false);

}  // namespace cadec
