#pragma once

#include <vector>

#include "vrg/poly.hpp"
#include "vrg/rational.hpp"

namespace vrg {

/// Dense univariate polynomial over Q; c[i] is the coefficient of x^i and
/// the top coefficient is nonzero unless the polynomial is zero.
struct UPoly {
  std::vector<Rat> c;

  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly constant(const Rat& v);
  static UPoly x_power(int k);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Rat& lc() const { return c.back(); }
  void trim();

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rat& k);
  friend bool operator==(const UPoly&, const UPoly&) = default;
};

struct UDivMod {
  UPoly quotient;
  UPoly remainder;
};

UDivMod divmod(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& a);
UPoly derivative(const UPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

struct UXgcd {
  UPoly g, s, t;  // s*a + t*b = g, g monic
};
UXgcd xgcd(const UPoly& a, const UPoly& b);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

Rat evaluate(const UPoly& p, const Rat& x);

UPoly to_upoly(const Poly& p, std::size_t var);
Poly from_upoly(const UPoly& p, std::size_t var, const Ring& ring);

}  // namespace vrg
