#include "vrg/fiber.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "vrg/errors.hpp"
#include "vrg/factor.hpp"
#include "vrg/groebner.hpp"
#include "vrg/univariate_factor.hpp"
#include "vrg/upoly.hpp"

namespace vrg {

std::string to_string(FiberClass c) {
  switch (c) {
    case FiberClass::generic:
      return "generic";
    case FiberClass::on_branch:
      return "on_branch";
    case FiberClass::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

namespace {

using cplx = std::complex<double>;

// Q[x]/I for a zero-dimensional ideal I, with coordinates on the standard
// monomials.
struct Quotient {
  GroebnerBasis gb;
  std::vector<Monomial> basis;
  std::map<Monomial, std::size_t> index;

  explicit Quotient(const std::vector<Poly>& gens)
      : gb(groebner(gens, MonomialOrder::grevlex())) {
    if (!gb.is_unit_ideal()) basis = standard_monomials(gb);
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  }
  std::size_t dim() const { return basis.size(); }
  std::vector<Rat> coords(const Poly& reduced) const {
    std::vector<Rat> v(basis.size());
    for (const auto& [m, c] : reduced.terms()) v[index.at(m)] = c;
    return v;
  }
};

// Incremental row echelon form that tracks how each row was combined from
// the inserted vectors.
struct Echelon {
  std::vector<std::vector<Rat>> rows;
  std::vector<std::vector<Rat>> combos;
  std::vector<std::size_t> pivots;

  // Returns true when v reduces to zero; c accumulates the combination.
  bool reduce(std::vector<Rat>& v, std::vector<Rat>& c) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rat& a = v[pivots[r]];
      if (a == 0) continue;
      Rat k = a / rows[r][pivots[r]];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (rows[r][i] != 0) v[i] -= k * rows[r][i];
      for (std::size_t i = 0; i < c.size(); ++i)
        if (combos[r][i] != 0) c[i] -= k * combos[r][i];
    }
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
  }
  void add(std::vector<Rat> v, std::vector<Rat> c) {
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    rows.push_back(std::move(v));
    combos.push_back(std::move(c));
    pivots.push_back(p);
  }
};

struct PowerBasis {
  UPoly minpoly;
  Echelon ech;
};

// Minimal polynomial of z in the quotient, keeping the echelon form of the
// powers 1, z, ..., z^(d-1).
PowerBasis power_basis(const Poly& z, const Quotient& q) {
  const std::size_t D = q.dim();
  PowerBasis pb;
  Poly p = normal_form(Poly(z.ring(), Rat(1)), q.gb);
  for (std::size_t k = 0; k <= D; ++k) {
    std::vector<Rat> v = q.coords(p);
    std::vector<Rat> c(D + 1);
    c[k] = 1;
    if (pb.ech.reduce(v, c)) {
      c.resize(k + 1);
      pb.minpoly = UPoly(c);
      return pb;
    }
    pb.ech.add(std::move(v), std::move(c));
    p = normal_form(p * z, q.gb);
  }
  throw Error("fiber: minimal polynomial not found");
}

UPoly squarefree_part(const UPoly& m) {
  UPoly g = gcd(m, derivative(m));
  return monic(divmod(m, g).quotient);
}

double residual_at(const std::vector<Poly>& eqs, const Point& x) {
  double r = 0;
  for (const auto& e : eqs) r = std::max(r, std::abs(evaluate(e, x)));
  return r;
}

// A few Newton steps on the square system, kept only while they help.
void polish(const std::vector<Poly>& eqs, const std::vector<std::vector<Poly>>& jac, Point& x) {
  const std::size_t m = x.size();
  double res = residual_at(eqs, x);
  for (int it = 0; it < 4 && res > 0; ++it) {
    Eigen::MatrixXcd A(m, m);
    Eigen::VectorXcd b(m);
    for (std::size_t i = 0; i < m; ++i) {
      b(i) = -evaluate(eqs[i], x);
      for (std::size_t j = 0; j < m; ++j) A(i, j) = evaluate(jac[i][j], x);
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(A);
    if (!lu.isInvertible()) return;
    Eigen::VectorXcd dx = lu.solve(b);
    Point y = x;
    for (std::size_t j = 0; j < m; ++j) y[j] += dx(j);
    double ry = residual_at(eqs, y);
    if (!(ry < res)) return;
    x = std::move(y);
    res = ry;
  }
}

bool close(const Point& a, const Point& b, double tol) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (std::abs(a[j] - b[j]) > tol * std::max(1.0, std::abs(a[j]))) return false;
  return true;
}

std::vector<Point> cluster(const std::vector<Point>& pts, double tol) {
  std::vector<Point> reps;
  for (const auto& p : pts) {
    bool found = false;
    for (const auto& r : reps)
      if (close(p, r, tol)) found = true;
    if (!found) reps.push_back(p);
  }
  return reps;
}

Eigen::MatrixXd multiplication_matrix(const Poly& x, const Quotient& q) {
  const auto N = static_cast<Eigen::Index>(q.dim());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    Poly prod = normal_form(x * Poly::term(x.ring(), q.basis[i], Rat(1)), q.gb);
    for (const auto& [mono, c] : prod.terms()) M(static_cast<Eigen::Index>(q.index.at(mono)), i) = c.get_d();
  }
  return M;
}

struct Solved {
  int exact = 0;  // distinct solutions
  std::vector<Point> points;
};

// Distinct solutions of a zero-dimensional square system over Q: the radical
// fixes the exact count, a separating linear form gives the coordinates.
Solved solve_system(const std::vector<Poly>& eqs, std::mt19937_64& rng) {
  const Ring& ring = eqs.front().ring();
  const std::size_t m = ring->size();
  Quotient q(eqs);
  if (q.dim() == 0) return {};

  std::vector<Poly> radical_gens = eqs;
  for (std::size_t j = 0; j < m; ++j) {
    UPoly mj = power_basis(Poly::variable(ring, j), q).minpoly;
    radical_gens.push_back(from_upoly(squarefree_part(mj), j, ring));
  }
  Quotient rq(radical_gens);
  const int N = static_cast<int>(rq.dim());

  std::vector<std::vector<Poly>> jac(m, std::vector<Poly>(m, Poly(ring)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) jac[i][j] = partial_derivative(eqs[i], j);

  std::vector<Eigen::MatrixXd> mult;
  for (std::size_t j = 0; j < m; ++j) mult.push_back(multiplication_matrix(Poly::variable(ring, j), rq));

  for (int attempt = 0; attempt < 60; ++attempt) {
    std::uniform_int_distribution<int> pick(-(2 + attempt), 2 + attempt);
    std::vector<int> coef(m, 1);
    for (std::size_t j = 1; j < m; ++j) coef[j] = attempt == 0 ? int(j + 1) : pick(rng);
    Poly z(ring);
    for (std::size_t j = 0; j < m; ++j) z += Rat(coef[j]) * Poly::variable(ring, j);
    if (power_basis(z, rq).minpoly.degree() != N) continue;
    // Eigenvectors of the transposed multiplication matrix of z are the
    // evaluation vectors (b(p)) of the standard monomials at the solutions.
    Eigen::MatrixXd Mz = Eigen::MatrixXd::Zero(N, N);
    for (std::size_t j = 0; j < m; ++j) Mz += coef[j] * mult[j];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Mz.transpose().cast<cplx>());
    Solved out{N, {}};
    for (int e = 0; e < N; ++e) {
      Eigen::VectorXcd w = es.eigenvectors().col(e);
      Eigen::Index big = 0;
      w.cwiseAbs().maxCoeff(&big);
      Point x(m);
      for (std::size_t j = 0; j < m; ++j) {
        Eigen::VectorXcd mw = mult[j].transpose().cast<cplx>() * w;
        x[j] = mw(big) / w(big);
      }
      polish(eqs, jac, x);
      out.points.push_back(std::move(x));
    }
    return out;
  }
  throw Error("fiber: no separating linear form found");
}

int degree_of(const ExtensionSpec& spec) {
  Int num = 1, den = 1;
  for (int a : spec.gen_weights()) num *= a;
  for (int b : spec.ring()->weights()) den *= b;
  return static_cast<int>(Int(num / den).get_si());
}

Point to_point(const std::vector<Rat>& u) {
  Point p;
  for (const auto& x : u) p.emplace_back(x.get_d(), 0.0);
  return p;
}

void classify(FiberSample& s, int r) {
  if (s.classification == FiberClass::indeterminate) return;
  s.classification = s.exact_count == r ? FiberClass::generic : FiberClass::on_branch;
}

double max_residual(const std::vector<Poly>& eqs, const std::vector<Point>& pts) {
  double r = 0;
  for (const auto& p : pts) r = std::max(r, residual_at(eqs, p));
  return r;
}

// Fiber over a point of Z(P) whose k-th coordinate is a root t0 of the
// irreducible h1; the remaining coordinates are the rationals in `u`.
FiberSample algebraic_fiber(const ExtensionSpec& spec, const std::vector<Rat>& u, std::size_t k,
                            const UPoly& h1, const FiberOptions& options, std::mt19937_64& rng) {
  const std::size_t n = spec.n();
  std::vector<std::string> names = spec.ring()->names();
  std::vector<int> weights = spec.ring()->weights();
  std::string t = "t";
  while (spec.ring()->index_of(t)) t += "_";
  names.push_back(t);
  weights.push_back(spec.gen_weights()[k]);
  Ring ext = make_ring(names, weights);
  std::vector<std::size_t> map(n);
  for (std::size_t j = 0; j < n; ++j) map[j] = j;
  std::vector<Poly> eqs;
  for (std::size_t i = 0; i < n; ++i) {
    Poly f = change_ring(spec.generators()[i], ext, map);
    if (i == k)
      eqs.push_back(f - Poly::variable(ext, n));
    else
      eqs.push_back(f - Poly(ext, u[i]));
  }
  eqs.push_back(from_upoly(h1, n, ext));

  Solved sol = solve_system(eqs, rng);
  FiberSample s;
  const int per_fiber = sol.exact / h1.degree();
  s.exact_count = per_fiber;
  s.residual = max_residual(eqs, sol.points);
  // group by the t coordinate
  std::vector<std::pair<cplx, std::vector<Point>>> groups;
  for (const auto& p : sol.points) {
    cplx tv = p[n];
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
      return std::abs(g.first - tv) <= options.cluster_tol * std::max(1.0, std::abs(tv));
    });
    Point x(p.begin(), p.begin() + n);
    if (it == groups.end())
      groups.push_back({tv, {x}});
    else
      it->second.push_back(x);
  }
  bool consistent = sol.exact % h1.degree() == 0 && static_cast<int>(groups.size()) == h1.degree();
  for (const auto& g : groups)
    if (static_cast<int>(cluster(g.second, options.cluster_tol).size()) != per_fiber) consistent = false;
  if (groups.empty()) consistent = false;
  s.u = to_point(u);
  if (!groups.empty()) {
    s.u[k] = groups.front().first;
    s.points = cluster(groups.front().second, options.cluster_tol);
    s.count = static_cast<int>(s.points.size());
  }
  s.classification = consistent && s.residual <= options.residual_tol ? FiberClass::on_branch
                                                                       : FiberClass::indeterminate;
  return s;
}

}  // namespace

FiberSample fiber_count(const ExtensionSpec& spec, const std::vector<Rat>& u,
                        const FiberOptions& options, const std::vector<Poly>& contractions) {
  const std::size_t n = spec.n();
  if (n > 3) throw DimensionExceeded("dimension exceeded: fiber sampling supports n <= 3");
  if (u.size() != n)
    throw Error("fiber: expected " + std::to_string(n) + " coordinates, got " +
                std::to_string(u.size()));
  std::vector<Poly> eqs;
  for (std::size_t i = 0; i < n; ++i) eqs.push_back(spec.generators()[i] - Poly(spec.ring(), u[i]));
  std::mt19937_64 rng(0x5eed);
  Solved sol = solve_system(eqs, rng);

  FiberSample s;
  s.u = to_point(u);
  s.exact_count = sol.exact;
  s.points = cluster(sol.points, options.cluster_tol);
  s.count = static_cast<int>(s.points.size());
  s.residual = max_residual(eqs, sol.points);
  bool ok = s.count == s.exact_count && s.residual <= options.residual_tol;
  s.classification = ok ? FiberClass::generic : FiberClass::indeterminate;
  classify(s, degree_of(spec));
  if (s.classification == FiberClass::on_branch) {
    for (std::size_t i = 0; i < contractions.size(); ++i)
      if (evaluate(contractions[i], u) == 0) {
        s.branch_index = i;
        break;
      }
  }
  return s;
}

namespace {

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 6);
  return make_rat(num(rng), den(rng));
}

// A sample on Z(P): all coordinates but one are random rationals, the last
// is a root of the smallest irreducible factor of P in that coordinate.
FiberSample sample_on_locus(const ExtensionSpec& spec, const Poly& P, std::size_t index,
                            const FiberOptions& options, std::mt19937_64& rng) {
  const std::size_t n = spec.n();
  std::size_t k = n;
  for (std::size_t j = 0; j < n; ++j) {
    int d = degree_in(P, j);
    if (d > 0 && (k == n || d < degree_in(P, k))) k = j;
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Rat> u(n);
    std::vector<Poly> images;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) u[j] = random_rat(rng);
      images.push_back(j == k ? Poly::variable(P.ring(), k) : Poly(P.ring(), u[j]));
    }
    Poly restricted = compose(P, images);
    if (degree_in(restricted, k) != degree_in(P, k)) continue;
    UPoly t = to_upoly(restricted, k);
    auto factors = factor_squarefree_univariate(squarefree_part(t));
    auto h1 = *std::min_element(factors.begin(), factors.end(),
                                [](const UPoly& a, const UPoly& b) { return a.degree() < b.degree(); });
    FiberSample s;
    if (h1.degree() == 1) {
      u[k] = -h1.c[0] / h1.c[1];
      s = fiber_count(spec, u, options);
    } else {
      s = algebraic_fiber(spec, u, k, monic(h1), options, rng);
    }
    s.branch_index = index;
    return s;
  }
  throw Error("fiber: could not sample the branch locus");
}

}  // namespace

FiberAudit branch_audit(const ExtensionSpec& spec, const AnalysisReport& report, int samples,
                        std::uint64_t seed, const FiberOptions& options) {
  if (spec.n() > 3) throw DimensionExceeded("dimension exceeded: fiber sampling supports n <= 3");
  FiberAudit audit;
  audit.seed = seed;
  audit.samples = samples;
  audit.degree = report.degree;
  audit.cluster_tol = options.cluster_tol;
  audit.residual_tol = options.residual_tol;
  std::mt19937_64 rng(seed);
  const auto contractions = report.contractions();
  const int r = report.degree;

  auto note_count = [&](const FiberSample& s, const std::string& where) {
    audit.max_count = std::max(audit.max_count, s.count);
    if (s.exact_count > r || (s.classification != FiberClass::indeterminate && s.count > r))
      audit.violations.push_back(where + ": fiber of size " + std::to_string(s.count) +
                                 " exceeds degree " + std::to_string(r));
  };

  for (int i = 0; i < samples; ++i) {
    std::vector<Rat> u;
    bool on_locus = true;
    while (on_locus) {
      u.clear();
      for (std::size_t j = 0; j < spec.n(); ++j) u.push_back(random_rat(rng));
      on_locus = std::any_of(contractions.begin(), contractions.end(),
                             [&](const Poly& P) { return evaluate(P, u) == 0; });
    }
    FiberSample s = fiber_count(spec, u, options, contractions);
    ++audit.generic_sampled;
    std::string where = "generic sample " + std::to_string(i + 1);
    note_count(s, where);
    if (s.classification == FiberClass::indeterminate)
      ++audit.generic_indeterminate;
    else if (s.count == r)
      ++audit.generic_equal_r;
    else
      audit.violations.push_back(where + ": expected " + std::to_string(r) + " points, found " +
                                 std::to_string(s.count));
    audit.records.push_back(std::move(s));
  }

  for (std::size_t c = 0; c < contractions.size(); ++c) {
    LocusAudit locus{contractions[c]};
    for (int i = 0; i < samples; ++i) {
      FiberSample s = sample_on_locus(spec, contractions[c], c, options, rng);
      ++locus.sampled;
      std::string where = "sample " + std::to_string(i + 1) + " on Z(" + to_string(contractions[c]) + ")";
      note_count(s, where);
      if (s.classification == FiberClass::indeterminate)
        ++locus.indeterminate;
      else if (s.count < r)
        ++locus.below_r;
      else
        audit.violations.push_back(where + ": fiber of size " + std::to_string(s.count) +
                                   " is not below the degree");
      audit.records.push_back(std::move(s));
    }
    audit.loci.push_back(std::move(locus));
  }
  return audit;
}

}  // namespace vrg
