#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cadec {

// Immutable ordered list of variable names; index 0 is the lowest variable
// (projections eliminate from the highest index downwards).
class VarOrder {
 public:
  static std::shared_ptr<const VarOrder> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(std::string_view name) const;
  bool same_as(const VarOrder& other) const { return names_ == other.names_; }

 private:
  explicit VarOrder(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

void require_same_order(const VarOrderPtr& a, const VarOrderPtr& b);

}  // namespace cadec
