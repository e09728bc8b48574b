#include "vrg/ideal.hpp"

#include "vrg/errors.hpp"
#include "vrg/factor.hpp"

namespace vrg {

bool check_finite(const ExtensionSpec& spec, const GroebnerOptions& options) {
  auto gb = groebner(spec.generators(), MonomialOrder::grevlex(), options);
  if (gb.is_unit_ideal()) return true;
  auto leads = gb.leading_monomials();
  for (std::size_t j = 0; j < spec.n(); ++j) {
    bool pure = false;
    for (const auto& m : leads)
      if (m[j] > 0 && m == Monomial::unit(j, m[j])) pure = true;
    if (!pure) return false;
  }
  return true;
}

namespace {

GroebnerBasis tag_basis(const ExtensionSpec& spec, const GroebnerOptions& options) {
  return groebner(spec.tag_relations(), MonomialOrder::block_elimination(spec.n()), options);
}

}  // namespace

SubalgebraOracle::SubalgebraOracle(const ExtensionSpec& spec, const GroebnerOptions& options)
    : spec_(spec), basis_(tag_basis(spec, options)) {}

std::optional<Poly> SubalgebraOracle::represent(const Poly& p) const {
  if (!same_ring(p.ring(), spec_.ring())) throw Error("membership: polynomial over a different ring");
  Poly nf = normal_form(spec_.embed_base(p), basis_);
  return spec_.extract_tag(nf);
}

std::optional<Poly> subalgebra_membership(const Poly& p, const ExtensionSpec& spec) {
  return SubalgebraOracle(spec).represent(p);
}

Poly contract_prime(const Poly& Q, const ExtensionSpec& spec, const GroebnerOptions& options) {
  if (Q.is_constant()) throw Error("contract_prime: constant polynomial");
  std::vector<Poly> gens = spec.tag_relations();
  gens.push_back(spec.embed_base(Q));
  auto gb = groebner(gens, MonomialOrder::block_elimination(spec.n()), options);
  Poly g(spec.tag_ring());
  for (const auto& b : gb.generators())
    if (auto t = spec.extract_tag(b)) g = gcd(g, *t);
  if (g.is_zero())
    throw ContractionNotPrincipal("contraction of " + to_string(Q) + " is zero");
  if (!normal_form(spec.embed_tag(g), gb).is_zero())
    throw ContractionNotPrincipal("contraction of " + to_string(Q) + " is not principal");
  return canonical_associate(g);
}

}  // namespace vrg
