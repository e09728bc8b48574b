#pragma once

#include <memory>
#include <span>
#include <vector>

#include "vrg/monomial_order.hpp"
#include "vrg/poly.hpp"

namespace vrg {

/// Cap on the total degree of S-pair lcms; VRG_MAX_DEGREE overrides the
/// default of 200.
int default_max_degree();

struct GroebnerOptions {
  int max_degree = default_max_degree();
};

/// Reduced Groebner basis. Generators are canonical associates sorted by
/// increasing leading monomial.
class GroebnerBasis {
 public:
  const std::vector<Poly>& generators() const noexcept { return generators_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const Ring& ring() const noexcept { return ring_; }

  bool is_unit_ideal() const;
  std::vector<Monomial> leading_monomials() const;

  struct Impl;

 private:
  friend GroebnerBasis groebner(std::span<const Poly>, const MonomialOrder&,
                                const GroebnerOptions&);
  friend Poly normal_form(const Poly&, const GroebnerBasis&);

  GroebnerBasis(Ring ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

  Ring ring_;
  MonomialOrder order_;
  std::vector<Poly> generators_;
  std::shared_ptr<const Impl> impl_;
};

/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and the
/// sugar selection strategy. Zero inputs are ignored; the zero ideal gives an
/// empty basis. Throws DegreeCapExceeded past `options.max_degree`.
GroebnerBasis groebner(std::span<const Poly> gens, const MonomialOrder& order,
                       const GroebnerOptions& options = {});

/// Fully reduced remainder of p modulo the basis; zero iff p is in the ideal.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

Monomial leading_monomial(const Poly& p, const MonomialOrder& order);

/// Monomials outside the initial ideal, in increasing order; requires a
/// zero-dimensional ideal (throws otherwise).
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

}  // namespace vrg
