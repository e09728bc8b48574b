#pragma once

#include <optional>

#include "vrg/extension_spec.hpp"
#include "vrg/groebner.hpp"

namespace vrg {

/// True iff (f_1, ..., f_n) is zero-dimensional, i.e. the grevlex basis has a
/// pure power of every variable among its leading terms.
bool check_finite(const ExtensionSpec& spec, const GroebnerOptions& options = {});

/// Decides membership in A = Q[f] by reducing modulo the basis of
/// (y_i - f_i) under the order eliminating the X block. The basis is built
/// once and shared by later queries.
class SubalgebraOracle {
 public:
  explicit SubalgebraOracle(const ExtensionSpec& spec, const GroebnerOptions& options = {});

  /// g in the tag ring with g(f) = p, or nullopt when p is not in A.
  std::optional<Poly> represent(const Poly& p) const;
  const GroebnerBasis& basis() const noexcept { return basis_; }

 private:
  ExtensionSpec spec_;
  GroebnerBasis basis_;
};

std::optional<Poly> subalgebra_membership(const Poly& p, const ExtensionSpec& spec);

/// Generator of (Q, y - f) ∩ Q[y] in canonical form. Throws
/// ContractionNotPrincipal when the gcd of the y-only basis elements does
/// not generate the elimination ideal.
Poly contract_prime(const Poly& Q, const ExtensionSpec& spec, const GroebnerOptions& options = {});

}  // namespace vrg
