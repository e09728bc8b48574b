#include "vrg/upoly.hpp"

#include <algorithm>

#include "vrg/errors.hpp"

namespace vrg {

UPoly::UPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rat& v) { return UPoly(std::vector<Rat>{v}); }

UPoly UPoly::x_power(int k) {
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
  v.back() = 1;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const Rat& k) {
  std::vector<Rat> r = a.c;
  for (auto& v : r) v *= k;
  return UPoly(std::move(r));
}

UDivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error("univariate division by zero");
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<Rat> r = a.c;
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rat inv = 1 / b.lc();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rat t = r[static_cast<std::size_t>(k + b.degree())] * inv;
    q[static_cast<std::size_t>(k)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= b.degree(); ++j)
      r[static_cast<std::size_t>(k + j)] -= t * b.c[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).remainder; }

UPoly monic(const UPoly& a) {
  if (a.is_zero()) return a;
  return a * (1 / a.lc());
}

UPoly derivative(const UPoly& a) {
  if (a.degree() < 1) return {};
  std::vector<Rat> r(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = rem(x, y);
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

UXgcd xgcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  UPoly t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = 1 / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  auto [g, s, t] = xgcd(rem(a, m), m);
  if (g.degree() != 0) throw Error("inverse_mod: not coprime");
  return rem(s, m);
}

Rat evaluate(const UPoly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly to_upoly(const Poly& p, std::size_t var) {
  std::vector<Rat> c;
  for (const auto& [m, v] : p.terms()) {
    Monomial rest = m;
    rest[var] = 0;
    if (!rest.is_one()) throw Error("to_upoly: polynomial involves other variables");
    auto k = static_cast<std::size_t>(m[var]);
    if (c.size() <= k) c.resize(k + 1);
    c[k] = v;
  }
  return UPoly(std::move(c));
}

Poly from_upoly(const UPoly& p, std::size_t var, const Ring& ring) {
  Poly r(ring);
  for (std::size_t k = 0; k < p.c.size(); ++k)
    r.add_term(Monomial::unit(var, static_cast<int>(k)), p.c[k]);
  return r;
}

}  // namespace vrg
