#include "vrg/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "vrg/errors.hpp"
#include "vrg/univariate_factor.hpp"
#include "vrg/upoly.hpp"

namespace vrg {

Poly Factorization::expand(const Ring& ring) const {
  Poly r(ring, unit);
  for (const auto& [f, k] : factors) r *= pow(f, k);
  return r;
}

std::string Factorization::to_string() const { return format_product(unit, factors); }

namespace {

Poly one(const Ring& ring) { return Poly(ring, Rat(1)); }

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  const int db = degree_in(b, var);
  auto bc = coefficients_in(b, var);
  const Poly& lcb = bc.back();
  Poly r = a;
  int dr = degree_in(r, var);
  while (!r.is_zero() && dr >= db) {
    Poly lead = coefficients_in(r, var).back();
    Poly shift = Poly::term(a.ring(), Monomial::unit(var, dr - db), Rat(1));
    r = lcb * r - lead * shift * b;
    dr = degree_in(r, var);
  }
  return r;
}

Poly primitive_in(const Poly& p, std::size_t var) { return exact_div(p, content_in(p, var)); }

// gcd of two polynomials primitive with respect to var.
Poly primitive_gcd(Poly a, Poly b, std::size_t var) {
  if (degree_in(a, var) < degree_in(b, var)) std::swap(a, b);
  if (degree_in(b, var) <= 0) return one(a.ring());
  for (;;) {
    Poly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return canonical_associate(primitive_in(b, var));
    if (degree_in(r, var) <= 0) return one(a.ring());
    a = std::move(b);
    b = canonical_associate(primitive_in(r, var));
  }
}

// Heuristic gcd: evaluate one variable at a large integer, recurse, and
// read the gcd back off the xi-adic digits. Inputs have integer
// coefficients; every candidate is confirmed by trial division.
Int max_norm(const Poly& p) {
  Int m = 0;
  for (const auto& [mono, c] : p.terms()) {
    Int a = abs(c.get_num());
    if (a > m) m = a;
  }
  return m;
}

Int integer_content(const Poly& p) {
  Int g = 0;
  for (const auto& [mono, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

Poly evaluate_at(const Poly& p, std::size_t var, const Int& xi) {
  Poly r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    Int power;
    mpz_pow_ui(power.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(m[var]));
    Monomial rest = m;
    rest[var] = 0;
    r.add_term(rest, c * Rat(power));
  }
  return r;
}

Poly interpolate_at(Poly h, std::size_t var, const Int& xi) {
  Poly out(h.ring());
  const Int half = xi / 2;
  for (int i = 0; !h.is_zero(); ++i) {
    Poly digit(h.ring());
    for (const auto& [m, c] : h.terms()) {
      Int r = c.get_num() % xi;
      if (r < 0) r += xi;
      if (r > half) r -= xi;
      if (r != 0) digit.add_term(m, Rat(r));
    }
    for (const auto& [m, c] : digit.terms()) {
      Monomial shifted = m;
      shifted[var] = i;
      out.add_term(shifted, c);
    }
    h -= digit;
    h *= Rat(1) / Rat(xi);
    if (i > 10000) return Poly(h.ring());
  }
  return out;
}

std::optional<Poly> heuristic_gcd(const Poly& f, const Poly& g) {
  const Ring& ring = f.ring();
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  Int cf = integer_content(f), cg = integer_content(g), gc;
  mpz_gcd(gc.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (f.is_constant() || g.is_constant()) return Poly(ring, Rat(gc));
  Poly F = f * (Rat(1) / Rat(cf)), G = g * (Rat(1) / Rat(cg));

  auto vf = variables_used(F), vg = variables_used(G);
  std::size_t var = vf.front();
  for (std::size_t v : vg) var = std::max(var, v);
  for (std::size_t v : vf) var = std::max(var, v);

  Int nf = max_norm(F), ng = max_norm(G);
  Int b = 2 * std::min(nf, ng) + 29;
  Int root = sqrt(b);
  Int r99 = 99 * root, low = 2 + 2 * std::min(nf, ng);
  Int xi = std::max(Int(std::min(b, r99)), low);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly fe = evaluate_at(F, var, xi), ge = evaluate_at(G, var, xi);
    if (!fe.is_zero() && !ge.is_zero()) {
      if (auto he = heuristic_gcd(fe, ge)) {
        Poly h = interpolate_at(*he, var, xi);
        if (!h.is_zero()) {
          h *= Rat(1) / Rat(integer_content(h));
          if (divide_if_exact(F, h) && divide_if_exact(G, h)) return h * Rat(gc);
        }
      }
    }
    Int s = sqrt(Int(sqrt(xi)));
    xi = xi * s * 73794 / 27011;
  }
  return std::nullopt;
}

Poly integer_primitive(const Poly& p) {
  Int den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Poly q = p * Rat(den);
  return q * (Rat(1) / Rat(integer_content(q)));
}

// Unit in front of a product of canonical associates equal to p.
Rat unit_of(const Poly& p) { return associate_unit(p); }

void sort_factors(std::vector<std::pair<Poly, int>>& f) {
  std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return factor_less(a.first, b.first);
  });
}

// Yun's algorithm in var for p primitive with respect to var.
void yun(const Poly& p, std::size_t var, std::vector<std::pair<Poly, int>>& out) {
  if (degree_in(p, var) <= 0) return;
  Poly dp = partial_derivative(p, var);
  Poly a0 = gcd(p, dp);
  Poly b = exact_div(p, a0);
  Poly c = exact_div(dp, a0);
  Poly d = c - partial_derivative(b, var);
  for (int i = 1; !b.is_constant(); ++i) {
    Poly a = gcd(b, d);
    if (!a.is_constant()) out.emplace_back(canonical_associate(a), i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - partial_derivative(b, var);
  }
}

void squarefree_rec(const Poly& p, std::vector<std::pair<Poly, int>>& out) {
  if (p.is_constant()) return;
  auto used = variables_used(p);
  std::size_t var = used.back();
  Poly cont = content_in(p, var);
  squarefree_rec(cont, out);
  yun(exact_div(p, cont), var, out);
}

// Peels variables dividing p into `out`; returns the cofactor.
Poly extract_monomial(const Poly& p, std::vector<std::pair<Poly, int>>& out) {
  Monomial common;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    common = first ? m : Monomial::gcd(common, m);
    first = false;
  }
  if (first || common.is_one()) return p;
  for (std::size_t j = 0; j < p.num_vars(); ++j)
    if (common[j] > 0) out.emplace_back(Poly::variable(p.ring(), j), common[j]);
  return exact_div(p, Poly::term(p.ring(), common, Rat(1)));
}

int z_degree(const Monomial& m, std::size_t main_var, std::size_t nvars) {
  int d = 0;
  for (std::size_t j = 0; j < nvars; ++j)
    if (j != main_var) d += m[j];
  return d;
}

Poly truncate_z(const Poly& p, std::size_t main_var, int max_deg) {
  Poly r(p.ring());
  for (const auto& [m, c] : p.terms())
    if (z_degree(m, main_var, p.num_vars()) <= max_deg) r.add_term(m, c);
  return r;
}

Poly mul_truncated(const Poly& a, const Poly& b, std::size_t main_var, int max_deg) {
  Poly r(a.ring());
  const std::size_t n = a.num_vars();
  for (const auto& [ma, ca] : a.terms()) {
    int da = z_degree(ma, main_var, n);
    if (da > max_deg) continue;
    for (const auto& [mb, cb] : b.terms())
      if (da + z_degree(mb, main_var, n) <= max_deg) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

std::vector<Poly> factor_squarefree(const Poly& g);

// Irreducible factors of g (square-free, primitive in each variable, at
// least two variables) by evaluation at a point, univariate factorization,
// Hensel lifting in the remaining variables, and recombination.
std::vector<Poly> factor_multivariate(const Poly& g) {
  const Ring& ring = g.ring();
  const std::size_t n = g.num_vars();
  auto used = variables_used(g);

  // Prefer a main variable whose leading coefficient is a constant.
  std::size_t main_var = used.front();
  bool constant_lc = false;
  int best_deg = -1;
  for (std::size_t v : used) {
    bool lc_const = coefficients_in(g, v).back().is_constant();
    int d = degree_in(g, v);
    bool better = (lc_const && !constant_lc) ||
                  (lc_const == constant_lc && (best_deg < 0 || d < best_deg));
    if (best_deg < 0 || better) {
      main_var = v;
      constant_lc = lc_const;
      best_deg = d;
    }
  }
  std::vector<std::size_t> others;
  for (std::size_t v : used)
    if (v != main_var) others.push_back(v);

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ g.size());
  const Poly x = Poly::variable(ring, main_var);
  std::vector<Rat> shift(n, Rat(0)), slope(n, Rat(0));
  Poly G(ring);
  std::vector<UPoly> uni;
  // keep the admissible point with the fewest univariate factors
  int admissible = 0;
  for (int attempt = 0; admissible < 4; ++attempt) {
    if (attempt > 400) {
      if (admissible > 0) break;
      throw Error("factor: no good evaluation point found");
    }
    int range = 1 + attempt / 4;
    std::uniform_int_distribution<int> pick(-range, range);
    std::vector<Rat> sh(n, Rat(0)), sl(n, Rat(0));
    for (std::size_t v : others) {
      sh[v] = pick(rng);
      sl[v] = constant_lc ? 0 : pick(rng);
    }
    std::vector<Poly> images;
    for (std::size_t j = 0; j < n; ++j) {
      Poly img = Poly::variable(ring, j);
      if (j != main_var) img += Poly(ring, sh[j]) + sl[j] * x;
      images.push_back(std::move(img));
    }
    Poly cand = compose(g, images);
    if (!coefficients_in(cand, main_var).back().is_constant()) continue;
    Poly at_zero(ring);
    for (const auto& [m, c] : cand.terms())
      if (z_degree(m, main_var, n) == 0) at_zero.add_term(m, c);
    UPoly U = to_upoly(at_zero, main_var);
    if (U.degree() != degree_in(cand, main_var)) continue;
    if (gcd(U, derivative(U)).degree() > 0) continue;
    auto parts = factor_squarefree_univariate(U);
    if (parts.size() == 1) return {canonical_associate(g)};
    if (admissible++ == 0 || parts.size() < uni.size()) {
      uni = std::move(parts);
      G = std::move(cand);
      shift = sh;
      slope = sl;
    }
  }

  for (auto& u : uni) u = monic(u);

  const Rat lcG = coefficients_in(G, main_var).back().constant_term();
  const Poly target = G * (1 / lcG);
  int bound = 0;
  for (const auto& [m, c] : G.terms()) bound = std::max(bound, z_degree(m, main_var, n));

  std::vector<UPoly> bezout;
  for (std::size_t i = 0; i < uni.size(); ++i) {
    UPoly w = UPoly::constant(1);
    for (std::size_t j = 0; j < uni.size(); ++j)
      if (j != i) w = rem(w * uni[j], uni[i]);
    bezout.push_back(inverse_mod(w, uni[i]));
  }
  std::vector<Poly> lifted;
  for (const auto& u : uni) lifted.push_back(from_upoly(u, main_var, ring));

  for (int k = 1; k <= bound; ++k) {
    Poly prod(ring, Rat(1));
    for (const auto& h : lifted) prod = mul_truncated(prod, h, main_var, k);
    Poly err = truncate_z(target, main_var, k) - prod;
    std::map<Monomial, UPoly> by_z;
    for (const auto& [m, c] : err.terms()) {
      if (z_degree(m, main_var, n) != k) continue;
      Monomial zpart = m;
      zpart[main_var] = 0;
      UPoly& e = by_z[zpart];
      auto deg = static_cast<std::size_t>(m[main_var]);
      if (e.c.size() <= deg) e.c.resize(deg + 1);
      e.c[deg] += c;
    }
    for (auto& [zpart, e] : by_z) {
      e.trim();
      if (e.is_zero()) continue;
      Poly zmono = Poly::term(ring, zpart, Rat(1));
      for (std::size_t i = 0; i < lifted.size(); ++i) {
        UPoly delta = rem(bezout[i] * e, uni[i]);
        lifted[i] += from_upoly(delta, main_var, ring) * zmono;
      }
    }
  }

  std::vector<Poly> found;
  Poly rest = target;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool hit = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    for (;;) {
      Poly cand(ring, Rat(1));
      for (std::size_t i : pick) cand = mul_truncated(cand, lifted[remaining[i]], main_var, bound);
      // A true factor h of rest has total degree at most
      // tdeg(rest) - deg_x(rest) + deg_x(h).
      const int tdb = total_degree(rest) - degree_in(rest, main_var) + degree_in(cand, main_var);
      std::optional<Poly> q;
      if (total_degree(cand) <= tdb) q = divide_if_exact(rest, cand);
      if (q) {
        found.push_back(cand);
        rest = std::move(*q);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        hit = true;
        break;
      }
      // advance to the next s-subset
      std::size_t k = pick.size();
      std::size_t i = k;
      while (i-- > 0 && pick[i] == remaining.size() - k + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++pick[i];
      for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (!rest.is_constant()) found.push_back(rest);

  std::vector<Poly> back;
  for (std::size_t j = 0; j < n; ++j) {
    Poly img = Poly::variable(ring, j);
    if (j != main_var) img -= Poly(ring, shift[j]) + slope[j] * x;
    back.push_back(std::move(img));
  }
  std::vector<Poly> out;
  for (const auto& h : found) out.push_back(canonical_associate(compose(h, back)));
  return out;
}

// Irreducible factors of a square-free canonical polynomial.
std::vector<Poly> factor_squarefree(const Poly& g) {
  if (g.is_constant()) return {};
  std::vector<std::pair<Poly, int>> monomial_part;
  Poly rest = extract_monomial(g, monomial_part);
  std::vector<Poly> out;
  for (auto& [v, k] : monomial_part) out.push_back(v);
  if (rest.is_constant()) return out;
  auto used = variables_used(rest);
  if (used.size() == 1) {
    for (const auto& u : factor_squarefree_univariate(to_upoly(rest, used[0])))
      out.push_back(canonical_associate(from_upoly(u, used[0], rest.ring())));
    return out;
  }
  for (std::size_t v : used) {
    Poly cont = content_in(rest, v);
    if (!cont.is_constant()) {
      for (auto& h : factor_squarefree(cont)) out.push_back(std::move(h));
      for (auto& h : factor_squarefree(canonical_associate(exact_div(rest, cont))))
        out.push_back(std::move(h));
      return out;
    }
  }
  for (auto& h : factor_multivariate(rest)) out.push_back(std::move(h));
  return out;
}

}  // namespace

bool factor_less(const Poly& a, const Poly& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().rend() && ib != b.terms().rend();
}

Poly content_in(const Poly& p, std::size_t var) {
  if (p.is_zero()) return p;
  Poly g(p.ring());
  for (auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly gcd(const Poly& p, const Poly& q) {
  if (!same_ring(p.ring(), q.ring())) throw Error("gcd: polynomials over different rings");
  if (p.is_zero()) return canonical_associate(q);
  if (q.is_zero()) return canonical_associate(p);
  if (p.is_constant() || q.is_constant()) return one(p.ring());

  auto vp = variables_used(p);
  auto vq = variables_used(q);
  std::vector<std::size_t> common;
  std::set_intersection(vp.begin(), vp.end(), vq.begin(), vq.end(), std::back_inserter(common));
  if (common.empty()) return one(p.ring());

  if (vp.size() == 1 && vq.size() == 1) {
    std::size_t v = vp[0];
    return canonical_associate(from_upoly(gcd(to_upoly(p, v), to_upoly(q, v)), v, p.ring()));
  }
  // Any variable used by only one side can be stripped through the content.
  for (std::size_t v : vp)
    if (!std::binary_search(vq.begin(), vq.end(), v)) return gcd(content_in(p, v), q);
  for (std::size_t v : vq)
    if (!std::binary_search(vp.begin(), vp.end(), v)) return gcd(p, content_in(q, v));

  if (auto h = heuristic_gcd(integer_primitive(p), integer_primitive(q))) return canonical_associate(*h);

  std::size_t var = common.front();
  for (std::size_t v : common)
    if (std::max(degree_in(p, v), degree_in(q, v)) < std::max(degree_in(p, var), degree_in(q, var)))
      var = v;
  Poly cp = content_in(p, var);
  Poly cq = content_in(q, var);
  Poly c = gcd(cp, cq);
  Poly g = primitive_gcd(exact_div(p, cp), exact_div(q, cq), var);
  return canonical_associate(c * g);
}

Poly lcm(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly(p.ring());
  return canonical_associate(exact_div(p * q, gcd(p, q)));
}

Factorization squarefree(const Poly& p) {
  if (p.is_zero()) throw Error("squarefree: zero polynomial");
  Factorization out{unit_of(p), {}};
  Poly rest = extract_monomial(canonical_associate(p), out.factors);
  squarefree_rec(canonical_associate(rest), out.factors);
  for (auto& [f, k] : out.factors) f = canonical_associate(f);
  sort_factors(out.factors);
  return out;
}

Factorization factor(const Poly& p) {
  Factorization sq = squarefree(p);
  Factorization out{sq.unit, {}};
  for (const auto& [g, k] : sq.factors)
    for (auto& h : factor_squarefree(g)) out.factors.emplace_back(std::move(h), k);
  sort_factors(out.factors);
  return out;
}

int valuation(const Poly& q, const Poly& p) {
  if (p.is_zero()) throw Error("valuation of the zero polynomial");
  if (q.is_constant()) throw Error("valuation at a constant");
  int k = 0;
  Poly rest = p;
  while (auto quotient = divide_if_exact(rest, q)) {
    rest = std::move(*quotient);
    ++k;
  }
  return k;
}

}  // namespace vrg
