#include "vrg/var_table.hpp"

#include <cctype>
#include <set>

#include "vrg/errors.hpp"

namespace vrg {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

VarTable::VarTable(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.empty()) throw InvalidSpec("at least one variable is required");
  if (names_.size() > kMaxVars) throw InvalidSpec("too many variables");
  if (names_.size() != weights_.size()) throw InvalidSpec("one weight per variable is required");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i])) throw InvalidSpec("invalid variable name '" + names_[i] + "'");
    if (!seen.insert(names_[i]).second)
      throw InvalidSpec("duplicate variable name '" + names_[i] + "'");
    if (weights_[i] < 1) throw InvalidSpec("weight of '" + names_[i] + "' must be >= 1");
  }
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Ring make_ring(std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const VarTable>(std::move(names), std::move(weights));
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace vrg
