#include "vrg/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "vrg/errors.hpp"

namespace vrg {

int default_max_degree() {
  if (const char* env = std::getenv("VRG_MAX_DEGREE")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 200;
}

namespace {

struct Term {
  Monomial m;
  Rat c;
};

// Terms in strictly decreasing order; monic once inside a basis.
struct IPoly {
  std::vector<Term> terms;
  int sugar = 0;

  const Monomial& lm() const { return terms.front().m; }
  bool is_zero() const { return terms.empty(); }
};

struct Descending {
  const MonomialOrder* order;
  const VarTable* vars;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->compare(a, b, *vars) > 0;
  }
};

using WorkMap = std::map<Monomial, Rat, Descending>;

void accumulate(WorkMap& work, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = work.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) work.erase(it);
  }
}

IPoly from_work(const WorkMap& work, int sugar) {
  IPoly r;
  r.sugar = sugar;
  r.terms.reserve(work.size());
  for (const auto& [m, c] : work) r.terms.push_back({m, c});
  return r;
}

IPoly to_ipoly(const Poly& p, const Descending& cmp) {
  WorkMap work(cmp);
  int sugar = 0;
  for (const auto& [m, c] : p.terms()) {
    work.emplace(m, c);
    sugar = std::max(sugar, m.weighted_degree(*cmp.vars));
  }
  return from_work(work, sugar);
}

void make_monic(IPoly& p) {
  if (p.is_zero()) return;
  Rat inv = 1 / p.terms.front().c;
  if (inv == 1) return;
  for (auto& t : p.terms) t.c *= inv;
}

// Full reduction of f by monic divisors.
IPoly reduce(const IPoly& f, const std::vector<const IPoly*>& divisors, const Descending& cmp) {
  WorkMap work(cmp);
  for (const auto& t : f.terms) work.emplace(t.m, t.c);
  IPoly out;
  out.sugar = f.sugar;
  while (!work.empty()) {
    auto it = work.begin();
    const IPoly* div = nullptr;
    for (const IPoly* g : divisors) {
      if (g->lm().divides(it->first)) {
        div = g;
        break;
      }
    }
    if (!div) {
      out.terms.push_back({it->first, it->second});
      work.erase(it);
      continue;
    }
    Monomial shift = it->first / div->lm();
    Rat k = it->second;
    work.erase(it);
    for (std::size_t t = 1; t < div->terms.size(); ++t)
      accumulate(work, div->terms[t].m * shift, -k * div->terms[t].c);
  }
  return out;
}

IPoly s_polynomial(const IPoly& f, const IPoly& g, const Descending& cmp) {
  Monomial l = Monomial::lcm(f.lm(), g.lm());
  Monomial sf = l / f.lm();
  Monomial sg = l / g.lm();
  WorkMap work(cmp);
  for (std::size_t t = 1; t < f.terms.size(); ++t) accumulate(work, f.terms[t].m * sf, f.terms[t].c);
  for (std::size_t t = 1; t < g.terms.size(); ++t)
    accumulate(work, g.terms[t].m * sg, -g.terms[t].c);
  int sugar = std::max(f.sugar + sf.weighted_degree(*cmp.vars),
                       g.sugar + sg.weighted_degree(*cmp.vars));
  return from_work(work, sugar);
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int sugar;
};

Poly to_poly(const IPoly& p, const Ring& ring) {
  Poly r(ring);
  for (const auto& t : p.terms) r.add_term(t.m, t.c);
  return r;
}

}  // namespace

struct GroebnerBasis::Impl {
  std::vector<IPoly> monic;  // same order as generators_
};

bool GroebnerBasis::is_unit_ideal() const {
  return generators_.size() == 1 && generators_.front().is_constant();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators_.size());
  for (const auto& g : impl_->monic) out.push_back(g.lm());
  return out;
}

Monomial leading_monomial(const Poly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error("leading monomial of zero");
  auto it = p.terms().begin();
  Monomial best = it->first;
  for (++it; it != p.terms().end(); ++it)
    if (order.compare(it->first, best, p.vars()) > 0) best = it->first;
  return best;
}

GroebnerBasis groebner(std::span<const Poly> gens, const MonomialOrder& order,
                       const GroebnerOptions& options) {
  if (gens.empty()) throw Error("groebner: empty generator list");
  const Ring& ring = gens.front().ring();
  for (const auto& g : gens)
    if (!same_ring(g.ring(), ring)) throw Error("groebner: generators over different rings");
  Descending cmp{&order, ring.get()};

  std::vector<IPoly> polys;
  std::vector<char> active;
  std::vector<Pair> pairs;

  auto current_basis = [&] {
    std::vector<const IPoly*> out;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i]) out.push_back(&polys[i]);
    return out;
  };

  auto make_pair = [&](std::size_t i, std::size_t j) {
    Monomial l = Monomial::lcm(polys[i].lm(), polys[j].lm());
    int sugar = std::max(polys[i].sugar + (l / polys[i].lm()).weighted_degree(*ring),
                         polys[j].sugar + (l / polys[j].lm()).weighted_degree(*ring));
    return Pair{i, j, l, sugar};
  };

  // Gebauer-Moeller update with the new element h.
  auto update = [&](std::size_t h) {
    const Monomial& lh = polys[h].lm();
    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < polys.size(); ++g)
      if (active[g]) candidates.push_back(g);
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      std::size_t g1 = candidates[k];
      Monomial l1 = Monomial::lcm(lh, polys[g1].lm());
      bool keep = coprime(lh, polys[g1].lm());
      if (!keep) {
        keep = true;
        for (std::size_t k2 = k + 1; k2 < candidates.size() && keep; ++k2)
          if (Monomial::lcm(lh, polys[candidates[k2]].lm()).divides(l1)) keep = false;
        for (std::size_t g2 : kept)
          if (keep && Monomial::lcm(lh, polys[g2].lm()).divides(l1)) keep = false;
      }
      if (keep) kept.push_back(g1);
    }
    std::erase_if(pairs, [&](const Pair& p) {
      return lh.divides(p.lcm) && Monomial::lcm(polys[p.i].lm(), lh) != p.lcm &&
             Monomial::lcm(lh, polys[p.j].lm()) != p.lcm;
    });
    for (std::size_t g : kept)
      if (!coprime(lh, polys[g].lm())) pairs.push_back(make_pair(g, h));
    for (std::size_t g = 0; g < polys.size(); ++g)
      if (active[g] && lh.divides(polys[g].lm())) active[g] = 0;
    active[h] = 1;
  };

  auto insert = [&](IPoly p) {
    make_monic(p);
    polys.push_back(std::move(p));
    active.push_back(0);
    update(polys.size() - 1);
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    IPoly r = reduce(to_ipoly(g, cmp), current_basis(), cmp);
    if (!r.is_zero()) insert(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (it->sugar < best->sugar ||
          (it->sugar == best->sugar && order.compare(it->lcm, best->lcm, *ring) < 0))
        best = it;
    }
    Pair pair = *best;
    pairs.erase(best);
    if (pair.lcm.total_degree() > options.max_degree) throw DegreeCapExceeded(options.max_degree);
    IPoly s = s_polynomial(polys[pair.i], polys[pair.j], cmp);
    IPoly r = reduce(s, current_basis(), cmp);
    if (!r.is_zero()) insert(std::move(r));
  }

  // Inter-reduce the minimal basis.
  std::vector<IPoly> minimal;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (active[i]) minimal.push_back(polys[i]);
  std::sort(minimal.begin(), minimal.end(), [&](const IPoly& a, const IPoly& b) {
    return order.compare(a.lm(), b.lm(), *ring) < 0;
  });
  std::vector<IPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const IPoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    IPoly tail;
    tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
    IPoly r = reduce(tail, others, cmp);
    IPoly g;
    g.sugar = minimal[i].sugar;
    g.terms.push_back(minimal[i].terms.front());
    g.terms.insert(g.terms.end(), r.terms.begin(), r.terms.end());
    reduced.push_back(std::move(g));
  }

  GroebnerBasis gb(ring, order);
  auto impl = std::make_shared<GroebnerBasis::Impl>();
  for (auto& g : reduced) gb.generators_.push_back(canonical_associate(to_poly(g, ring)));
  impl->monic = std::move(reduced);
  gb.impl_ = std::move(impl);
  return gb;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  if (!same_ring(p.ring(), gb.ring())) throw Error("normal_form: polynomial over a different ring");
  Descending cmp{&gb.order(), gb.ring().get()};
  std::vector<const IPoly*> divisors;
  for (const auto& g : gb.impl_->monic) divisors.push_back(&g);
  return to_poly(reduce(to_ipoly(p, cmp), divisors, cmp), gb.ring());
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  const VarTable& vars = *gb.ring();
  auto leads = gb.leading_monomials();
  for (std::size_t j = 0; j < vars.size(); ++j) {
    bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      return m[j] > 0 && m == Monomial::unit(j, m[j]);
    });
    if (!pure && !gb.is_unit_ideal()) throw Error("ideal is not zero-dimensional");
  }
  auto in_initial = [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::set<Monomial> seen;
  std::vector<Monomial> stack;
  if (!in_initial(Monomial{})) {
    stack.push_back(Monomial{});
    seen.insert(Monomial{});
  }
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < vars.size(); ++j) {
      Monomial next = m * Monomial::unit(j);
      if (seen.count(next) || in_initial(next)) continue;
      seen.insert(next);
      stack.push_back(next);
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return gb.order().compare(a, b, vars) < 0;
  });
  return out;
}

}  // namespace vrg
