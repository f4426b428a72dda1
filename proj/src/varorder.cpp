#include "cadec/varorder.hpp"

#include <set>

#include "cadec/errors.hpp"

namespace cadec {

std::shared_ptr<const VarOrder> VarOrder::make(std::vector<std::string> names) {
  if (names.empty()) throw PreconditionError("variable order must not be empty");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw PreconditionError("variable names must be nonempty");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name: " + n);
  }
  return std::shared_ptr<const VarOrder>(new VarOrder(std::move(names)));
}

int VarOrder::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

void require_same_order(const VarOrderPtr& a, const VarOrderPtr& b) {
  if (!a || !b) throw OrderMismatchError("operand has no variable order");
  if (a.get() == b.get()) return;
  if (!a->same_as(*b)) throw OrderMismatchError("operands use different variable orders");
}

}  // namespace cadec
