#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cadec/numeric.hpp"
#include "cadec/poly.hpp"
#include "cadec/upoly.hpp"

namespace cadec {

// A real algebraic number: either an exact rational, or a squarefree
// integer-coefficient defining polynomial together with an open isolating
// interval (endpoints non-roots, exactly one root inside, sign change).
class RealAlgebraic {
 public:
  static RealAlgebraic from_rational(const Rat& v);
  // Assumes (defpoly, iv) is a valid isolating pair; detects rational roots
  // (degree one, exact interval, simplest-rational probe).
  static RealAlgebraic from_root(up::Poly defpoly, up::RootInterval iv);

  bool is_exact() const { return exact_; }
  const Rat& value() const;                 // pre: is_exact
  const up::Poly& defpoly() const { return defpoly_; }
  // Enclosing interval; degenerate [v, v] for exact values.
  Rat lo() const { return exact_ ? value_ : lo_; }
  Rat hi() const { return exact_ ? value_ : hi_; }
  Rat width() const { return hi() - lo(); }
  Rat midpoint() const { return (lo() + hi()) / 2; }

  RealAlgebraic refined_once() const;
  RealAlgebraic refined_below(const Rat& width) const;

  int sign() const;
  int compare_to_rational(const Rat& c) const;  // -1 / 0 / +1
  static int compare(const RealAlgebraic& a, const RealAlgebraic& b);

  double approx() const;
  std::string to_string() const;

  friend bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) {
    return compare(a, b) < 0;
  }
  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
    return compare(a, b) == 0;
  }

 private:
  bool exact_ = true;
  Rat value_;           // exact case
  up::Poly defpoly_;    // algebraic case
  Rat lo_, hi_;
};

// Sample-point coordinates for x_1 .. x_k.
class SamplePoint {
 public:
  SamplePoint() = default;
  explicit SamplePoint(std::vector<RealAlgebraic> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  const RealAlgebraic& coord(std::size_t i) const { return coords_[i]; }
  const std::vector<RealAlgebraic>& coords() const { return coords_; }
  SamplePoint extended(RealAlgebraic next) const;
  bool all_rational() const;
  std::vector<Rat> rational_coords() const;  // pre: all_rational
  std::string to_string() const;

 private:
  std::vector<RealAlgebraic> coords_;
};

// One RealAlgebraic per distinct real root, ascending.  Errors: zero input;
// constants yield the empty list.
std::vector<RealAlgebraic> isolate_real_roots(const MultiPoly& p);

RealAlgebraic refine(const RealAlgebraic& a, const Rat& width);

// Exact sign of p at s; zero is decided exactly (resultant/gcd based), never
// by interval shrinkage alone.  p's variables must be covered by s.
int sign_at(const MultiPoly& p, const SamplePoint& s);

// True when every coefficient of p with respect to var vanishes at s.
bool nullified_at(const MultiPoly& p, const SamplePoint& s, std::size_t var);

// Real roots in var of p specialized at s (which binds all variables below
// var), ascending, each with a rational-coefficient defining polynomial.
// Throws NullifiedError when p vanishes identically at s.
std::vector<RealAlgebraic> roots_at(const MultiPoly& p, const SamplePoint& s,
                                    std::size_t var);

// Refine a and b until their intervals are disjoint (a < b required).
void separate(RealAlgebraic& a, RealAlgebraic& b);

}  // namespace cadec
