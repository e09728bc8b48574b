#include "vrg/monomial_order.hpp"

namespace vrg {

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, const VarTable& vars, std::size_t lo,
                  std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t j = lo; j < hi; ++j) {
    da += a[j] * vars.weight(j);
    db += b[j] * vars.weight(j);
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t j = hi; j-- > lo;)
    if (a[j] != b[j]) return a[j] < b[j] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, const VarTable& vars) const {
  switch (kind_) {
    case OrderKind::grevlex:
      return grevlex_range(a, b, vars, 0, vars.size());
    case OrderKind::lex:
      for (std::size_t j = 0; j < vars.size(); ++j)
        if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
      return 0;
    case OrderKind::block_elimination: {
      std::size_t k = block_ < vars.size() ? block_ : vars.size();
      if (int c = grevlex_range(a, b, vars, 0, k); c != 0) return c;
      return grevlex_range(a, b, vars, k, vars.size());
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::lex:
      return "lex";
    case OrderKind::block_elimination:
      return "block-elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace vrg
