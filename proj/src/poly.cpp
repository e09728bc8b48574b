#include "vrg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vrg/errors.hpp"

namespace vrg {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] + o.exp[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] - o.exp[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

int Monomial::total_degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

int Monomial::weighted_degree(const VarTable& vars) const {
  int d = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) d += exp[i] * vars.weight(i);
  return d;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::min(a.exp[i], b.exp[i]);
  return r;
}

Monomial Monomial::unit(std::size_t var, int power) {
  Monomial r;
  r.exp.at(var) = power;
  return r;
}

int compare_graded(const Monomial& a, const Monomial& b, const VarTable& vars) {
  int da = a.weighted_degree(vars);
  int db = b.weighted_degree(vars);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t j = vars.size(); j-- > 0;) {
    if (a[j] != b[j]) return a[j] < b[j] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------

Poly::Poly(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error("polynomial without a ring");
}

Poly::Poly(Ring ring, const Rat& constant) : Poly(std::move(ring)) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly Poly::variable(Ring ring, std::size_t index) {
  if (index >= ring->size()) throw Error("variable index out of range");
  return term(std::move(ring), Monomial::unit(index), Rat(1));
}

Poly Poly::term(Ring ring, const Monomial& m, const Rat& c) {
  Poly p(std::move(ring));
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Poly::constant_term() const { return coefficient(Monomial{}); }

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_ring(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) throw Error("polynomials over different rings");
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  Poly r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------

Poly pow(const Poly& p, int exponent) {
  if (exponent < 0) throw Error("negative exponent");
  Poly result(p.ring(), Rat(1));
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::optional<Poly> divide_if_exact(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw Error("division by zero polynomial");
  if (!same_ring(p.ring(), q.ring())) throw Error("polynomials over different rings");
  Poly rem = p;
  Poly quo(p.ring());
  const auto& [lead_m, lead_c] = *q.terms().rbegin();
  while (!rem.is_zero()) {
    auto top = *rem.terms().rbegin();
    if (!lead_m.divides(top.first)) return std::nullopt;
    Monomial shift = top.first / lead_m;
    Rat k = top.second / lead_c;
    quo.add_term(shift, k);
    for (const auto& [m, c] : q.terms()) rem.add_term(m * shift, -k * c);
  }
  return quo;
}

Poly exact_div(const Poly& p, const Poly& q) {
  auto r = divide_if_exact(p, q);
  if (!r) throw NotDivisible();
  return std::move(*r);
}

WeightedDegree weighted_degree(const Poly& p) {
  if (p.is_zero()) throw DegreeUndefined();
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    int d = m.weighted_degree(p.vars());
    if (first) {
      lo = hi = d;
      first = false;
    } else {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  return {hi, lo == hi};
}

Poly partial_derivative(const Poly& p, std::size_t var) {
  if (var >= p.num_vars()) throw Error("variable index out of range");
  Poly r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

Poly compose(const Poly& p, std::span<const Poly> images) {
  if (images.size() != p.num_vars()) throw Error("compose: one image per variable required");
  const Ring& target = images.front().ring();
  // Cache powers of each image; desk-scale degrees keep this small.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power_of = [&](std::size_t j, int e) -> const Poly& {
    auto& cache = powers[j];
    if (cache.empty()) cache.emplace_back(target, Rat(1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[j]);
    return cache[e];
  };
  Poly result(target);
  for (const auto& [m, c] : p.terms()) {
    Poly t(target, c);
    for (std::size_t j = 0; j < images.size(); ++j)
      if (m[j] > 0) t = t * power_of(j, m[j]);
    result += t;
  }
  return result;
}

Poly change_ring(const Poly& p, const Ring& target, std::span<const std::size_t> index_map) {
  if (index_map.size() != p.num_vars()) throw Error("change_ring: bad index map");
  Poly r(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial t;
    for (std::size_t j = 0; j < index_map.size(); ++j) {
      if (m[j] == 0) continue;
      if (index_map[j] >= target->size()) throw Error("change_ring: index out of range");
      t[index_map[j]] += m[j];
    }
    r.add_term(t, c);
  }
  return r;
}

int total_degree(const Poly& p) {
  int d = -1;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.total_degree());
  return d;
}

int degree_in(const Poly& p, std::size_t var) {
  int d = -1;
  for (const auto& [m, c] : p.terms()) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

bool involves(const Poly& p, std::size_t var) { return degree_in(p, var) > 0; }

std::vector<std::size_t> variables_used(const Poly& p) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < p.num_vars(); ++j)
    if (involves(p, j)) out.push_back(j);
  return out;
}

std::vector<std::pair<Monomial, Rat>> terms_descending(const Poly& p) {
  std::vector<std::pair<Monomial, Rat>> out(p.terms().begin(), p.terms().end());
  const VarTable& vars = p.vars();
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return compare_graded(a.first, b.first, vars) > 0;
  });
  return out;
}

Rat leading_coefficient(const Poly& p) {
  if (p.is_zero()) return Rat(0);
  const VarTable& vars = p.vars();
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it)
    if (compare_graded(it->first, best->first, vars) > 0) best = it;
  return best->second;
}

Rat rational_content(const Poly& p) {
  Int num = 0, den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rat(num, den);
}

Rat associate_unit(const Poly& p) {
  if (p.is_zero()) throw Error("zero polynomial has no associate unit");
  Rat unit = rational_content(p);
  if (leading_coefficient(p) < 0) unit = -unit;
  return unit;
}

Poly canonical_associate(const Poly& p) {
  if (p.is_zero()) return p;
  Rat inv = 1 / associate_unit(p);
  return p * inv;
}

bool associated(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return canonical_associate(a) == canonical_associate(b);
}

bool poly_less(const Poly& a, const Poly& b) {
  auto ta = terms_descending(a);
  auto tb = terms_descending(b);
  const VarTable& vars = a.vars();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    int c = compare_graded(ta[i].first, tb[i].first, vars);
    if (c != 0) return c < 0;
    if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
  }
  return ta.size() < tb.size();
}

std::vector<Poly> coefficients_in(const Poly& p, std::size_t var) {
  std::vector<Poly> out;
  for (const auto& [m, c] : p.terms()) {
    auto k = static_cast<std::size_t>(m[var]);
    while (out.size() <= k) out.emplace_back(p.ring());
    Monomial rest = m;
    rest[var] = 0;
    out[k].add_term(rest, c);
  }
  return out;
}

Poly from_coefficients(const std::vector<Poly>& coeffs, std::size_t var, const Ring& ring) {
  Poly r(ring);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& [m, c] : coeffs[k].terms()) {
      Monomial t = m;
      t[var] += static_cast<std::int32_t>(k);
      r.add_term(t, c);
    }
  return r;
}

Rat evaluate(const Poly& p, std::span<const Rat> point) {
  if (point.size() != p.num_vars()) throw Error("evaluate: point has wrong dimension");
  Rat sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat t = c;
    for (std::size_t j = 0; j < point.size(); ++j)
      for (int e = 0; e < m[j]; ++e) t *= point[j];
    sum += t;
  }
  return sum;
}

std::complex<double> evaluate(const Poly& p, std::span<const std::complex<double>> point) {
  if (point.size() != p.num_vars()) throw Error("evaluate: point has wrong dimension");
  std::complex<double> sum = 0;
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> t = c.get_d();
    for (std::size_t j = 0; j < point.size(); ++j)
      if (m[j] > 0) t *= std::pow(point[j], m[j]);
    sum += t;
  }
  return sum;
}

std::string to_string(const Monomial& m, const VarTable& vars) {
  std::string out;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (m[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(j);
    if (m[j] > 1) out += '^' + std::to_string(m[j]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_descending(p)) {
    bool negative = c < 0;
    Rat mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += to_string(m, p.vars());
    } else {
      out += to_string(mag) + '*' + to_string(m, p.vars());
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

std::string format_product(const Rat& unit, const std::vector<std::pair<Poly, int>>& factors) {
  std::vector<std::string> parts;
  for (const auto& [f, mult] : factors) {
    std::string s = to_string(f);
    if (f.size() > 1 && (factors.size() > 1 || mult > 1 || unit != 1)) s = '(' + s + ')';
    if (mult > 1) s += '^' + std::to_string(mult);
    parts.push_back(std::move(s));
  }
  std::string out;
  if (parts.empty()) return to_string(unit);
  if (unit == -1) {
    out = "-";
  } else if (unit != 1) {
    out = to_string(unit) + '*';
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '*';
    out += parts[i];
  }
  return out;
}

}  // namespace vrg
