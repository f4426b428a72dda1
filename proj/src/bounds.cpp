#include "cadec/bounds.hpp"

#include <sstream>

#include "cadec/errors.hpp"

namespace cadec {

namespace {

Int pow2(const Int& e) {
  if (e < 0) throw PreconditionError("negative power of two in a count");
  return int_pow(Int(2), e.get_ui());
}

Int ipow(const Int& b, const Int& e) {
  if (e < 0) throw PreconditionError("negative exponent in an integer power");
  return int_pow(b, e.get_ui());
}

std::string pow_str(const std::string& base, const Int& e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^" + e.get_str();
}

std::string factored_str(const Int& exp2, const std::string& sym, const Int& esym) {
  std::string a = pow_str("2", exp2), b = pow_str(sym, esym);
  if (a.empty() && b.empty()) return "1";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " " + b;
}

}  // namespace

Int BoundRow::number(const Int& m) const { return pow2(num_exp2) * ipow(m, num_expm); }
Int BoundRow::degree(const Int& d) const { return pow2(deg_exp2) * ipow(d, deg_expd); }
std::string BoundRow::number_str() const { return factored_str(num_exp2, "m", num_expm); }
std::string BoundRow::degree_str() const { return factored_str(deg_exp2, "d", deg_expd); }

const BoundRow& BoundTable::row_for_level(int vars_remaining) const {
  for (const auto& r : rows)
    if (r.vars_remaining == vars_remaining) return r;
  throw PreconditionError("bound table has no such level");
}

BoundTable table_growth(int n, const Int& m, const Int& d, int ell,
                        TableVariant variant) {
  if (n < 1 || m < 1 || d < 1 || ell < 0 || ell > n - 1)
    throw PreconditionError("table_growth: parameter out of range");
  BoundTable t;
  t.n = n;
  t.ell = ell;
  t.m = m;
  t.d = d;
  t.variant = variant;

  if (variant == TableVariant::kIteratedResultant) {
    BoundRow row;
    row.vars_remaining = n;
    row.num_exp2 = 0;
    row.num_expm = 1;
    row.deg_exp2 = 0;
    row.deg_expd = 1;
    t.rows.push_back(row);
    for (int k = n - 1; k >= 1; --k) {
      BoundRow next = t.rows.back();
      next.vars_remaining = k;
      if (n - k <= ell) {
        next.num_exp2 += 1;  // reduced operator: one constraint drives the count
      } else {
        next.num_exp2 *= 2;  // full operator: pairwise products square the count
        next.num_expm *= 2;
      }
      next.deg_exp2 = 2 * next.deg_exp2 + 1;  // resultant of two degree-D polys: 2D^2
      next.deg_expd *= 2;
      t.rows.push_back(next);
    }
  } else {
    for (int s = 0; s <= ell && n - s >= 1; ++s) {
      BoundRow row;
      row.vars_remaining = n - s;
      row.has_ec_column = true;
      row.ec_expd = s + 1;
      row.others_expd = Int(s) * (s + 1) / 2 + 1;
      row.num_exp2 = 0;
      row.num_expm = 0;
      row.deg_exp2 = 0;
      row.deg_expd = row.others_expd;
      t.rows.push_back(row);
    }
    for (int k = n - ell - 1; k >= 1; --k) {
      BoundRow next = t.rows.back();
      next.vars_remaining = k;
      next.has_ec_column = false;
      next.ec_expd = 0;
      next.others_expd *= 2;  // constants ignored: degree squares
      next.deg_expd = next.others_expd;
      t.rows.push_back(next);
    }
  }
  return t;
}

BoundRow printed_row_iterated(int n, int ell, int vars_remaining) {
  BoundRow row;
  row.vars_remaining = vars_remaining;
  int s = n - vars_remaining;
  if (s <= ell) {
    row.num_exp2 = s;
    row.num_expm = 1;
    row.deg_exp2 = pow2(Int(s)) - 1;
    row.deg_expd = pow2(Int(s));
  } else {
    int r = s - ell;
    row.num_exp2 = pow2(Int(r)) * ell;
    row.num_expm = pow2(Int(r));
    row.deg_exp2 = pow2(Int(ell + r)) - 1;
    row.deg_expd = pow2(Int(ell + r));
  }
  return row;
}

BoundRow printed_row_gb(int n, int ell, int vars_remaining) {
  BoundRow row;
  row.vars_remaining = vars_remaining;
  int s = n - vars_remaining;
  if (s <= ell) {
    row.has_ec_column = true;
    row.ec_expd = s + 1;
    row.others_expd = Int(s) * (s + 1) / 2 + 1;
  } else {
    int r = s - ell;
    row.others_expd = pow2(Int(r - 1)) * ell * (ell + 1) + pow2(Int(r));
  }
  row.deg_expd = row.others_expd;
  return row;
}

Int cell_bound_product(const BoundTable& table) {
  if (table.variant != TableVariant::kIteratedResultant)
    throw PreconditionError("cell bound needs the Number column of the count table");
  Int prod(1);
  for (const auto& row : table.rows)
    prod *= 2 * row.number(table.m) * row.degree(table.d) + 1;
  return prod;
}

Int cell_bound_ec_lifting(const BoundTable& table) {
  if (table.variant != TableVariant::kIteratedResultant)
    throw PreconditionError("cell bound needs the Number column of the count table");
  Int prod(2);
  for (const auto& row : table.rows) {
    if (row.vars_remaining >= table.n - table.ell)
      prod *= row.degree(table.d);
    else
      prod *= 2 * row.number(table.m) * row.degree(table.d) + 1;
  }
  return prod;
}

Int dominant_sign_invariant(int n, const Int& m, const Int& d) {
  Int e = pow2(Int(n)) - 1;
  return ipow(2 * d, e) * ipow(m, e) * pow2(pow2(Int(n - 1)) - 1);
}

Rat dominant_ec(int n, const Int& m, const Int& d, int ell) {
  Int e = pow2(Int(n)) - 1;
  Rat out(ipow(2 * d, e));
  Int me = pow2(Int(n - ell)) - 2;
  if (me >= 0)
    out *= Rat(ipow(m, me));
  else
    out /= Rat(ipow(m, -me));
  Int te = ell * pow2(Int(n - ell)) - 3 * ell;
  if (te >= 0)
    out *= Rat(pow2(te));
  else
    out /= Rat(pow2(-te));
  return out;
}

Int degree_exponent_printed(int n, int ell) {
  Int a = pow2(Int(n - ell)) * (Int(ell) * ell + ell + 2) / 2;
  return a - (Int(ell) * ell + ell) / 2 - 2;
}

Int degree_exponent_direct(int n, int ell) {
  Int total(0);
  for (int s = 0; s <= ell; ++s) total += s + 1;
  for (int r = 1; r <= n - ell - 1; ++r)
    total += pow2(Int(r - 1)) * ell * (ell + 1) + pow2(Int(r));
  return total;
}

std::vector<ObservedRow> measure_run(const ProjectionRun& run) {
  std::vector<ObservedRow> out;
  for (auto it = run.stats.rbegin(); it != run.stats.rend(); ++it) {
    ObservedRow row;
    row.level = it->level;
    row.count = it->count_A;
    row.max_degree = it->max_degree;
    for (int d : it->max_degree) row.max_degree_any = std::max(row.max_degree_any, d);
    row.max_total_degree = it->max_total_degree;
    out.push_back(std::move(row));
  }
  return out;
}

std::string render_table(const BoundTable& table) {
  std::ostringstream os;
  if (table.variant == TableVariant::kIteratedResultant) {
    os << "Variables | Number | Degree\n";
    for (const auto& row : table.rows) {
      os << row.vars_remaining << " | " << row.number_str() << " = "
         << row.number(table.m).get_str() << " | " << row.degree_str() << " = "
         << row.degree(table.d).get_str() << "\n";
    }
  } else {
    os << "Variables | EC degree | Others degree\n";
    for (const auto& row : table.rows) {
      os << row.vars_remaining << " | ";
      if (row.has_ec_column)
        os << pow_str("d", row.ec_expd) << " | " << pow_str("d", row.others_expd);
      else
        os << "- | " << pow_str("d", row.others_expd);
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace cadec
