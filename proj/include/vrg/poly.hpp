#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vrg/rational.hpp"
#include "vrg/var_table.hpp"

namespace vrg {

/// Dense exponent vector. Entries past the ring's arity stay zero, so the
/// defaulted comparison is plain lexicographic order with variable 0 first.
struct Monomial {
  std::array<std::int32_t, kMaxVars> exp{};

  std::int32_t& operator[](std::size_t i) { return exp[i]; }
  std::int32_t operator[](std::size_t i) const { return exp[i]; }

  auto operator<=>(const Monomial&) const = default;

  Monomial operator*(const Monomial& o) const;
  /// Requires `o.divides(*this)`.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  bool is_one() const;
  int total_degree() const;
  int weighted_degree(const VarTable& vars) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial unit(std::size_t var, int power = 1);
};

/// Weighted graded reverse lexicographic comparison used for printing and
/// for choosing canonical associates. Returns <0, 0, >0.
int compare_graded(const Monomial& a, const Monomial& b, const VarTable& vars);

/// Multivariate polynomial with rational coefficients over a named ring.
/// No zero coefficient is ever stored; the zero polynomial has no terms.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rat>;

  explicit Poly(Ring ring);
  Poly(Ring ring, const Rat& constant);

  static Poly variable(Ring ring, std::size_t index);
  static Poly term(Ring ring, const Monomial& m, const Rat& c);

  const Ring& ring() const noexcept { return ring_; }
  const VarTable& vars() const noexcept { return *ring_; }
  std::size_t num_vars() const noexcept { return ring_->size(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  Rat coefficient(const Monomial& m) const;

  /// Adds c*m, removing the term if it cancels.
  void add_term(const Monomial& m, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void check_ring(const Poly& o) const;

  Ring ring_;
  TermMap terms_;
};

Poly pow(const Poly& p, int exponent);

/// Quotient when q divides p exactly; nullopt otherwise. q must be nonzero.
std::optional<Poly> divide_if_exact(const Poly& p, const Poly& q);
/// Throws NotDivisible when the remainder is nonzero.
Poly exact_div(const Poly& p, const Poly& q);

struct WeightedDegree {
  int degree;
  bool homogeneous;
};
/// Throws DegreeUndefined for p == 0.
WeightedDegree weighted_degree(const Poly& p);

Poly partial_derivative(const Poly& p, std::size_t var);

/// Substitutes variable j of p's ring by images[j]; the result lives in the
/// images' ring.
Poly compose(const Poly& p, std::span<const Poly> images);

/// Re-expresses p in `target`, sending variable i to variable index_map[i].
Poly change_ring(const Poly& p, const Ring& target, std::span<const std::size_t> index_map);

int total_degree(const Poly& p);
int degree_in(const Poly& p, std::size_t var);
bool involves(const Poly& p, std::size_t var);
std::vector<std::size_t> variables_used(const Poly& p);

/// Terms sorted by decreasing weighted grevlex (printing) order.
std::vector<std::pair<Monomial, Rat>> terms_descending(const Poly& p);
Rat leading_coefficient(const Poly& p);

/// Positive gcd of numerators over lcm of denominators; 0 for p == 0.
Rat rational_content(const Poly& p);
/// Integer content 1 and positive leading coefficient in printing order.
Poly canonical_associate(const Poly& p);
/// The scalar u with p == u * canonical_associate(p). p must be nonzero.
Rat associate_unit(const Poly& p);
bool associated(const Poly& a, const Poly& b);

/// Total order on polynomials following the printing order term by term.
bool poly_less(const Poly& a, const Poly& b);

/// Coefficients c_k (not involving var) with p = sum c_k * var^k.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t var);
Poly from_coefficients(const std::vector<Poly>& coeffs, std::size_t var, const Ring& ring);

Rat evaluate(const Poly& p, std::span<const Rat> point);
std::complex<double> evaluate(const Poly& p, std::span<const std::complex<double>> point);

std::string to_string(const Poly& p);
std::string to_string(const Monomial& m, const VarTable& vars);
std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Renders unit * prod factors^mult as "6*X*Y^2*(X^2 - Y^3)".
std::string format_product(const Rat& unit, const std::vector<std::pair<Poly, int>>& factors);

}  // namespace vrg
