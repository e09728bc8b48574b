#pragma once

#include <utility>
#include <vector>

#include "vrg/poly.hpp"

namespace vrg {

/// p = unit * prod factors[i].first ^ factors[i].second, with every factor a
/// canonical associate and the list sorted by `factor_less`.
struct Factorization {
  Rat unit;
  std::vector<std::pair<Poly, int>> factors;

  Poly expand(const Ring& ring) const;
  std::string to_string() const;
};

/// Order used for listing factors: total degree first, then the terms
/// compared from the lexicographically largest down (so X before Y).
bool factor_less(const Poly& a, const Poly& b);

/// Canonical-associate gcd (recursive primitive PRS). gcd(0, 0) = 0.
Poly gcd(const Poly& p, const Poly& q);
/// Canonical-associate lcm; lcm(p, 0) = 0.
Poly lcm(const Poly& p, const Poly& q);
/// gcd of the coefficients of p viewed as a polynomial in `var`.
Poly content_in(const Poly& p, std::size_t var);

/// Square-free decomposition: pairwise coprime square-free factors, each
/// tagged with its multiplicity. Variables dividing p come out as separate
/// entries. p must be nonzero.
Factorization squarefree(const Poly& p);

/// Complete factorization into irreducibles over Q. p must be nonzero.
Factorization factor(const Poly& p);

/// Largest k with q^k | p. q nonconstant, p nonzero.
int valuation(const Poly& q, const Poly& p);

}  // namespace vrg
