#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "cadec/numeric.hpp"
#include "cadec/poly.hpp"

namespace cadec {

// Closed interval with exact rational endpoints.
struct QInterval {
  Rat lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
  static QInterval point(const Rat& v) { return QInterval(v, v); }

  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  // +1 / -1 when the sign is decided, 0 when the interval straddles zero.
  int sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 0;
  }
  Rat width() const { return hi - lo; }

  friend QInterval operator+(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo + b.lo, a.hi + b.hi);
  }
  friend QInterval operator*(const QInterval& a, const QInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return QInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                     std::max(std::max(p1, p2), std::max(p3, p4)));
  }
  QInterval pow(unsigned e) const {
    if (e == 0) return point(Rat(1));
    QInterval r = *this;
    for (unsigned i = 1; i < e; ++i) r = r * *this;
    return r;
  }
  friend QInterval operator*(const Rat& c, const QInterval& a) {
    return c >= 0 ? QInterval(c * a.lo, c * a.hi) : QInterval(c * a.hi, c * a.lo);
  }
};

// Interval evaluation over a box binding every variable the polynomial uses.
inline QInterval eval_box(const MultiPoly& p, const std::vector<QInterval>& box) {
  QInterval acc = QInterval::point(Rat(0));
  for (const auto& [e, c] : p.terms()) {
    QInterval t = QInterval::point(Rat(1));
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) t = t * box[v].pow(e[v]);
    acc = acc + c * t;
  }
  return acc;
}

}  // namespace cadec
