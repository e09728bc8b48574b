#pragma once

#include <cstddef>
#include <string>

#include "vrg/poly.hpp"

namespace vrg {

enum class OrderKind { grevlex, lex, block_elimination };

/// Monomial order on a weighted ring. `grevlex` is weighted graded reverse
/// lexicographic (the printing order); `block_elimination(k)` compares the
/// first k variables by weighted grevlex and breaks ties with weighted
/// grevlex on the rest, so it eliminates the first block.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, 0); }
  static MonomialOrder block_elimination(std::size_t k) {
    return MonomialOrder(OrderKind::block_elimination, k);
  }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b, const VarTable& vars) const;

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::size_t block) : kind_(kind), block_(block) {}

  OrderKind kind_;
  std::size_t block_;
};

}  // namespace vrg
