#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vrg {

/// Upper bound on the number of variables in any ring, including the tag
/// variables added for elimination and the auxiliary fiber parameter.
inline constexpr std::size_t kMaxVars = 14;

/// Ordered variable names with positive integer weights.
class VarTable {
 public:
  VarTable(std::vector<std::string> names, std::vector<int> weights);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarTable&, const VarTable&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using Ring = std::shared_ptr<const VarTable>;

Ring make_ring(std::vector<std::string> names, std::vector<int> weights);

/// Same variables and weights (pointer identity not required).
bool same_ring(const Ring& a, const Ring& b);

bool is_identifier(std::string_view name);

}  // namespace vrg
