#pragma once

#include <random>
#include <string>
#include <vector>

#include "vrg/poly.hpp"

namespace testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline vrg::Rat small_rat(Rng& rng, int num = 5, int den = 3) {
  int n = 0;
  while (n == 0) n = uniform(rng, -num, num);
  return vrg::make_rat(n, uniform(rng, 1, den));
}

/// Nonzero polynomial with up to `terms` terms and exponents up to `max_exp`.
inline vrg::Poly random_poly(Rng& rng, const vrg::Ring& ring, int terms = 4, int max_exp = 3) {
  for (;;) {
    vrg::Poly p(ring);
    int t = uniform(rng, 1, terms);
    for (int i = 0; i < t; ++i) {
      vrg::Monomial m;
      for (std::size_t j = 0; j < ring->size(); ++j) m[j] = uniform(rng, 0, max_exp);
      p.add_term(m, small_rat(rng));
    }
    if (!p.is_zero()) return p;
  }
}

/// All monomials of weighted degree d.
inline std::vector<vrg::Monomial> monomials_of_degree(const vrg::VarTable& vars, int d) {
  std::vector<vrg::Monomial> out;
  vrg::Monomial m;
  auto rec = [&](auto&& self, std::size_t j, int left) -> void {
    if (j + 1 == vars.size()) {
      if (left % vars.weight(j) == 0) {
        m[j] = left / vars.weight(j);
        out.push_back(m);
      }
      return;
    }
    for (int e = 0; e * vars.weight(j) <= left; ++e) {
      m[j] = e;
      self(self, j + 1, left - e * vars.weight(j));
    }
    m[j] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// Random weighted-homogeneous polynomial of degree d, or zero when the
/// degree has no monomials.
inline vrg::Poly random_homogeneous(Rng& rng, const vrg::Ring& ring, int d) {
  auto monos = monomials_of_degree(*ring, d);
  vrg::Poly p(ring);
  if (monos.empty()) return p;
  while (p.is_zero())
    for (const auto& m : monos)
      if (uniform(rng, 0, 2) > 0) p.add_term(m, vrg::Rat(uniform(rng, -4, 4)));
  return p;
}

}  // namespace testing
