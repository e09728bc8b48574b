#include "vrg/analyzer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "vrg/errors.hpp"
#include "vrg/ideal.hpp"
#include "vrg/jacobian.hpp"

namespace vrg {

namespace {

constexpr const char* kAbsoluteIrreducibility =
    "ramification is computed over Q; every Q-irreducible factor is assumed to be "
    "absolutely irreducible";

int degree_of(const ExtensionSpec& spec) {
  Int num = 1, den = 1;
  for (int a : spec.gen_weights()) num *= a;
  for (int b : spec.ring()->weights()) den *= b;
  if (num % den != 0) throw Error("degree not integral");
  return static_cast<int>(Int(num / den).get_si());
}

ContractionPullback pullback_factors(const ExtensionSpec& spec, const Poly& contraction) {
  Factorization f = factor(spec.pullback(contraction));
  ContractionPullback out{contraction, f.unit, {}};
  for (auto& [q, k] : f.factors) out.factors.push_back({q, k, k >= 2});
  return out;
}

bool pattern_holds(const ContractionPullback& p) {
  bool all_ramified = std::all_of(p.factors.begin(), p.factors.end(),
                                  [](const PullbackFactor& f) { return f.multiplicity >= 2; });
  bool all_simple = std::all_of(p.factors.begin(), p.factors.end(),
                                [](const PullbackFactor& f) { return f.multiplicity == 1; });
  return all_ramified || all_simple;
}

std::vector<Poly> distinct_contractions(const std::vector<RamificationDatum>& ram) {
  std::vector<Poly> out;
  for (const auto& d : ram)
    if (std::find(out.begin(), out.end(), d.contraction) == out.end()) out.push_back(d.contraction);
  return out;
}

Poly product_of(const Ring& ring, const std::vector<RamificationDatum>& ram,
                const std::function<int(const RamificationDatum&)>& exponent) {
  Poly p(ring, Rat(1));
  for (const auto& d : ram) p *= pow(d.Q, exponent(d));
  return canonical_associate(p);
}

Poly lcm_of(const Ring& tag_ring, const std::vector<Poly>& polys) {
  Poly l(tag_ring, Rat(1));
  for (const auto& p : polys) l = lcm(l, p);
  return l;
}

WellRamifiedVerdict decide(const ExtensionSpec& spec, const std::vector<RamificationDatum>& ram,
                           const SubalgebraOracle& oracle,
                           std::vector<ContractionPullback>* pullbacks) {
  WellRamifiedVerdict v{false, false, false, std::nullopt, std::nullopt};
  Poly R = product_of(spec.ring(), ram, [](const RamificationDatum& d) { return d.index; });
  v.representation = oracle.represent(R);
  v.by_membership = v.representation.has_value();
  v.by_factor_pattern = true;
  for (const auto& c : distinct_contractions(ram)) {
    auto pb = pullback_factors(spec, c);
    if (!pattern_holds(pb) && v.by_factor_pattern) {
      v.by_factor_pattern = false;
      v.failing = pb;
    }
    if (pullbacks) pullbacks->push_back(std::move(pb));
  }
  if (v.by_membership != v.by_factor_pattern)
    throw CharacterizationMismatch(
        std::string("characterization mismatch: R ") + (v.by_membership ? "lies" : "does not lie") +
        " in A but the factor pattern says " + (v.by_factor_pattern ? "yes" : "no"));
  v.verdict = v.by_membership;
  return v;
}

}  // namespace

bool ContractionPullback::mixed() const { return !pattern_holds(*this); }

std::vector<Poly> AnalysisReport::contractions() const { return distinct_contractions(ramification); }

int validate(const ExtensionSpec& spec, const GroebnerOptions& options) {
  if (!check_finite(spec, options)) throw NotFinite();
  return degree_of(spec);
}

WellRamifiedVerdict is_well_ramified(const ExtensionSpec& spec,
                                     const std::vector<RamificationDatum>& ramification,
                                     const GroebnerOptions& options) {
  SubalgebraOracle oracle(spec, options);
  return decide(spec, ramification, oracle, nullptr);
}

AnalysisReport analyze(const ExtensionSpec& spec, const GroebnerOptions& options) {
  const int degree = validate(spec, options);
  Poly J = jacobian(spec.generators());
  Factorization jf = factor(J);

  std::vector<RamificationDatum> ram;
  for (const auto& [Q, m] : jf.factors) {
    Poly contraction = contract_prime(Q, spec, options);
    int e = valuation(Q, spec.pullback(contraction));
    if (e != m + 1)
      throw TheoremViolation("theorem violation at factor " + to_string(Q) + ": exponent " +
                             std::to_string(m) + " in J but ramification index " +
                             std::to_string(e) + " (factor may not be absolutely irreducible)");
    ram.push_back({Q, m, contraction, e});
  }

  AnalysisReport rep{
      degree,
      canonical_associate(J),
      jf.unit,
      ram,
      product_of(spec.ring(), ram, [](const RamificationDatum&) { return 1; }),
      product_of(spec.ring(), ram, [](const RamificationDatum& d) { return d.index; }),
      lcm_of(spec.tag_ring(), distinct_contractions(ram)),
      false, false, false, std::nullopt, std::nullopt, {}, std::nullopt, std::nullopt, {}};

  SubalgebraOracle oracle(spec, options);
  WellRamifiedVerdict v = decide(spec, ram, oracle, &rep.pullbacks);
  rep.well_ramified = v.verdict;
  rep.by_membership = v.by_membership;
  rep.by_factor_pattern = v.by_factor_pattern;
  if (v.verdict) {
    rep.witness_representation = v.representation;
    rep.discriminant = Discriminant{rep.R, *v.representation};
    rep.quotient_DJ = canonical_associate(exact_div(rep.R, rep.jacobian));
  } else {
    rep.witness_prime = v.failing->contraction;
  }
  rep.warnings.push_back(kAbsoluteIrreducibility);
  return rep;
}

std::vector<std::string> verify_report(const AnalysisReport& report, const ExtensionSpec& spec,
                                       const GroebnerOptions& options) {
  std::vector<std::string> failed;
  auto check = [&](const std::string& name, const std::function<bool()>& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) failed.push_back(name);
  };
  const auto& ram = report.ramification;
  const Poly J = jacobian(spec.generators());
  SubalgebraOracle oracle(spec, options);

  check("degree", [&] { return check_finite(spec, options) && report.degree == degree_of(spec); });
  check("jacobian", [&] {
    return report.jacobian == canonical_associate(J) && report.jacobian * report.discarded_unit == J;
  });
  check("jacobian degree", [&] {
    int sa = std::accumulate(spec.gen_weights().begin(), spec.gen_weights().end(), 0);
    int sb = std::accumulate(spec.ring()->weights().begin(), spec.ring()->weights().end(), 0);
    return weighted_degree(J).degree == sa - sb;
  });
  check("jacobian exponent", [&] {
    for (const auto& d : ram)
      if (d.index != d.jac_multiplicity + 1) return false;
    return product_of(spec.ring(), ram, [](const RamificationDatum& d) { return d.index - 1; }) ==
           canonical_associate(J);
  });
  check("jacobian multiplicity", [&] {
    for (const auto& d : ram)
      if (valuation(d.Q, J) != d.jac_multiplicity) return false;
    return true;
  });
  check("prime irreducible", [&] {
    for (std::size_t i = 0; i < ram.size(); ++i) {
      auto f = factor(ram[i].Q);
      if (f.factors.size() != 1 || f.factors[0].second != 1 || f.factors[0].first != ram[i].Q)
        return false;
      for (std::size_t j = 0; j < i; ++j)
        if (ram[j].Q == ram[i].Q) return false;
    }
    return true;
  });
  check("contraction", [&] {
    for (const auto& d : ram)
      if (contract_prime(d.Q, spec, options) != d.contraction) return false;
    return true;
  });
  check("ramification index", [&] {
    for (const auto& d : ram)
      if (valuation(d.Q, spec.pullback(d.contraction)) != d.index) return false;
    return true;
  });

  std::vector<ContractionPullback> recomputed;
  for (const auto& c : distinct_contractions(ram)) {
    try {
      recomputed.push_back(pullback_factors(spec, c));
    } catch (const std::exception&) {
    }
  }
  check("ramified set", [&] {
    std::vector<Poly> ramified;
    for (const auto& pb : recomputed)
      for (const auto& f : pb.factors)
        if (f.ramified && std::find(ramified.begin(), ramified.end(), f.factor) == ramified.end())
          ramified.push_back(f.factor);
    if (ramified.size() != ram.size()) return false;
    for (const auto& d : ram)
      if (std::find(ramified.begin(), ramified.end(), d.Q) == ramified.end()) return false;
    return true;
  });
  check("S", [&] {
    return report.S == product_of(spec.ring(), ram, [](const RamificationDatum&) { return 1; });
  });
  check("R", [&] {
    return report.R ==
           product_of(spec.ring(), ram, [](const RamificationDatum& d) { return d.index; });
  });
  check("S_tilde", [&] {
    if (report.S_tilde != lcm_of(spec.tag_ring(), distinct_contractions(ram))) return false;
    Poly pulled = spec.pullback(report.S_tilde);
    if (!divide_if_exact(pulled, J) || !divide_if_exact(pulled, report.S)) return false;
    auto back = oracle.represent(pulled);
    if (!back || !associated(*back, report.S_tilde)) return false;
    return !report.well_ramified || associated(pulled, report.R);
  });
  check("pullback factorization", [&] {
    if (report.pullbacks.size() != recomputed.size()) return false;
    for (std::size_t i = 0; i < recomputed.size(); ++i) {
      const auto& a = report.pullbacks[i];
      const auto& b = recomputed[i];
      if (a.contraction != b.contraction || a.unit != b.unit ||
          a.factors.size() != b.factors.size())
        return false;
      Poly prod(spec.ring(), a.unit);
      for (std::size_t k = 0; k < a.factors.size(); ++k) {
        const auto& fa = a.factors[k];
        const auto& fb = b.factors[k];
        if (fa.factor != fb.factor || fa.multiplicity != fb.multiplicity ||
            fa.ramified != (fa.multiplicity >= 2))
          return false;
        prod *= pow(fa.factor, fa.multiplicity);
      }
      if (prod != spec.pullback(a.contraction)) return false;
    }
    return true;
  });
  check("well-ramified membership", [&] {
    bool member = oracle.represent(report.R).has_value();
    return member == report.by_membership && member == report.well_ramified;
  });
  check("well-ramified factor pattern", [&] {
    bool pattern = std::all_of(recomputed.begin(), recomputed.end(), pattern_holds);
    return pattern == report.by_factor_pattern && pattern == report.well_ramified;
  });
  check("discriminant representation", [&] {
    if (!report.well_ramified) return !report.discriminant && !report.witness_representation;
    if (!report.discriminant || !report.witness_representation) return false;
    const auto& d = *report.discriminant;
    return d.D == report.R && spec.pullback(d.D_rep) == d.D &&
           *report.witness_representation == d.D_rep;
  });
  check("quotient", [&] {
    if (!report.well_ramified) return !report.quotient_DJ.has_value();
    if (!report.quotient_DJ) return false;
    return associated(*report.quotient_DJ, report.S) &&
           associated(*report.quotient_DJ * J, report.R);
  });
  check("witness", [&] {
    if (report.well_ramified) return !report.witness_prime.has_value();
    if (!report.witness_prime) return false;
    auto cs = distinct_contractions(ram);
    if (std::find(cs.begin(), cs.end(), *report.witness_prime) == cs.end()) return false;
    return pullback_factors(spec, *report.witness_prime).mixed();
  });
  return failed;
}

}  // namespace vrg
