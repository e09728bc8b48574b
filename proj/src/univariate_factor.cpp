#include "vrg/univariate_factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "vrg/errors.hpp"

namespace vrg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ZPoly = std::vector<Int>;
using FpPoly = std::vector<u64>;

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 reduce(const Int& z) const {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
  }
};

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_sub(const Field& F, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

FpPoly fp_mul(const Field& F, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

void fp_divmod(const Field& F, const FpPoly& a, const FpPoly& b, FpPoly* q, FpPoly* r) {
  FpPoly rem = a;
  FpPoly quo;
  if (deg(a) >= deg(b)) quo.assign(static_cast<std::size_t>(deg(a) - deg(b) + 1), 0);
  u64 inv = F.inv(b.back());
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    u64 t = F.mul(rem[static_cast<std::size_t>(k + deg(b))], inv);
    quo[static_cast<std::size_t>(k)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= deg(b); ++j) {
      auto idx = static_cast<std::size_t>(k + j);
      rem[idx] = F.sub(rem[idx], F.mul(t, b[static_cast<std::size_t>(j)]));
    }
  }
  trim(rem);
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

FpPoly fp_rem(const Field& F, const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  fp_divmod(F, a, b, nullptr, &r);
  return r;
}

FpPoly fp_quo(const Field& F, const FpPoly& a, const FpPoly& b) {
  FpPoly q;
  fp_divmod(F, a, b, &q, nullptr);
  return q;
}

FpPoly fp_monic(const Field& F, FpPoly a) {
  if (a.empty()) return a;
  u64 inv = F.inv(a.back());
  for (auto& v : a) v = F.mul(v, inv);
  return a;
}

FpPoly fp_gcd(const Field& F, FpPoly a, FpPoly b) {
  while (!b.empty()) {
    FpPoly r = fp_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(F, a);
}

FpPoly fp_deriv(const Field& F, const FpPoly& a) {
  if (a.size() < 2) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  trim(r);
  return r;
}

// Inverse of a modulo m (gcd must be 1).
FpPoly fp_inverse_mod(const Field& F, const FpPoly& a, const FpPoly& m) {
  FpPoly r0 = m, r1 = fp_rem(F, a, m);
  FpPoly t0, t1{1};
  while (!r1.empty()) {
    FpPoly q, r;
    fp_divmod(F, r0, r1, &q, &r);
    FpPoly t2 = fp_sub(F, t0, fp_mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw Error("modular inverse of non-unit");
  u64 inv = F.inv(r0[0]);
  for (auto& v : t0) v = F.mul(v, inv);
  return fp_rem(F, t0, m);
}

FpPoly fp_powmod(const Field& F, const FpPoly& base, const Int& e, const FpPoly& mod) {
  FpPoly result{1};
  result = fp_rem(F, result, mod);
  FpPoly b = fp_rem(F, base, mod);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_rem(F, fp_mul(F, result, result), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_rem(F, fp_mul(F, result, b), mod);
  }
  return result;
}

std::vector<std::pair<FpPoly, int>> distinct_degree(const Field& F, FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  const FpPoly x{0, 1};
  FpPoly h = fp_rem(F, x, f);
  int d = 0;
  while (deg(f) >= 2 * (d + 1)) {
    ++d;
    h = fp_powmod(F, h, Int(static_cast<unsigned long>(F.p)), f);
    FpPoly g = fp_gcd(F, f, fp_sub(F, h, x));
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = fp_quo(F, f, g);
      h = fp_rem(F, h, f);
    }
  }
  if (deg(f) > 0) out.emplace_back(fp_monic(F, f), deg(f));
  return out;
}

void equal_degree(const Field& F, const FpPoly& g, int d, std::mt19937_64& rng,
                  std::vector<FpPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Int e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coeff(0, F.p - 1);
  for (;;) {
    FpPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& v : a) v = coeff(rng);
    trim(a);
    if (deg(a) < 1) continue;
    FpPoly b = fp_powmod(F, a, e, g);
    b = fp_sub(F, b, FpPoly{1});
    FpPoly h = fp_gcd(F, g, b);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, fp_quo(F, g, h), d, rng, out);
      return;
    }
  }
}

std::vector<FpPoly> factor_mod_p(const Field& F, const FpPoly& f, std::mt19937_64& rng) {
  std::vector<FpPoly> out;
  for (auto& [g, d] : distinct_degree(F, fp_monic(F, f))) equal_degree(F, g, d, rng, out);
  return out;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Int symmetric_mod(const Int& c, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

UPoly to_rat(const ZPoly& z) {
  std::vector<Rat> c;
  c.reserve(z.size());
  for (const auto& v : z) c.emplace_back(v);
  return UPoly(std::move(c));
}

ZPoly to_int(const UPoly& f) {
  ZPoly z;
  z.reserve(f.c.size());
  for (const auto& v : f.c) {
    if (v.get_den() != 1) throw Error("expected integer coefficients");
    z.push_back(v.get_num());
  }
  return z;
}

// Lifts monic factors g_i with lc*prod g_i = f (mod p) to modulus >= target.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const Field& F, const std::vector<FpPoly>& g,
                               const Int& target, Int& modulus) {
  const std::size_t r = g.size();
  const Int& lc = f.back();
  std::vector<FpPoly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    FpPoly w{1};
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) w = fp_rem(F, fp_mul(F, w, g[j]), g[i]);
    s[i] = fp_inverse_mod(F, w, g[i]);
  }
  std::vector<ZPoly> lifted(r);
  for (std::size_t i = 0; i < r; ++i)
    for (u64 v : g[i]) lifted[i].emplace_back(static_cast<unsigned long>(v));
  const u64 lc_inv = F.inv(F.reduce(lc));
  modulus = Int(static_cast<unsigned long>(F.p));
  while (modulus < target) {
    ZPoly prod{lc};
    for (const auto& h : lifted) prod = zmul(prod, h);
    FpPoly e(f.size(), 0);
    for (std::size_t k = 0; k < f.size(); ++k) {
      Int diff = f[k] - (k < prod.size() ? prod[k] : Int(0));
      Int quotient;
      mpz_divexact(quotient.get_mpz_t(), diff.get_mpz_t(), modulus.get_mpz_t());
      e[k] = F.mul(F.reduce(quotient), lc_inv);
    }
    trim(e);
    if (!e.empty()) {
      for (std::size_t i = 0; i < r; ++i) {
        FpPoly delta = fp_rem(F, fp_mul(F, s[i], e), g[i]);
        for (std::size_t k = 0; k < delta.size(); ++k)
          lifted[i][k] += modulus * Int(static_cast<unsigned long>(delta[k]));
      }
    }
    modulus *= Int(static_cast<unsigned long>(F.p));
  }
  return lifted;
}

// Iterates over k-subsets of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

UPoly primitive_integer_part(const UPoly& f) {
  if (f.is_zero()) return f;
  Int num = 0, den = 1;
  for (const auto& c : f.c) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat scale = make_rat(den, num);
  if (f.lc() < 0) scale = -scale;
  return f * scale;
}

std::vector<UPoly> factor_squarefree_univariate(const UPoly& input) {
  UPoly f = primitive_integer_part(input);
  if (f.degree() < 1) throw Error("factor_squarefree_univariate: constant input");
  if (f.degree() == 1) return {f};
  if (gcd(f, derivative(f)).degree() > 0)
    throw Error("factor_squarefree_univariate: input is not square-free");

  const ZPoly fz = to_int(f);
  const Int& lc = fz.back();
  std::mt19937_64 rng(0x5eed'f00dULL);

  std::vector<FpPoly> best;
  u64 best_p = 0;
  Int prime = Int(1) << 30;
  int tried = 0;
  for (int attempts = 0; tried < 3 && attempts < 500; ++attempts) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    Field F{prime.get_ui()};
    if (F.reduce(lc) == 0) continue;
    FpPoly fp;
    for (const auto& c : fz) fp.push_back(F.reduce(c));
    trim(fp);
    if (deg(fp_gcd(F, fp, fp_deriv(F, fp))) > 0) continue;
    ++tried;
    auto factors = factor_mod_p(F, fp, rng);
    if (factors.size() == 1) return {f};
    if (best.empty() || factors.size() < best.size()) {
      best = std::move(factors);
      best_p = F.p;
    }
  }
  if (best.empty()) throw Error("no suitable prime found for univariate factorization");
  Field F{best_p};

  // Factor coefficients of lc * h / lc(h) are bounded by |lc| 2^n |f|_2.
  Int norm_sq = 0;
  for (const auto& c : fz) norm_sq += c * c;
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  norm += 1;
  Int bound = abs(lc) * norm;
  bound <<= static_cast<mp_bitcnt_t>(f.degree());
  Int target = 2 * bound + 1;
  Int modulus;
  std::vector<ZPoly> lifted = hensel_lift(fz, F, best, target, modulus);

  std::vector<UPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  UPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    do {
      ZPoly cand{rest.lc().get_num()};
      for (std::size_t i : pick) cand = zmul(cand, lifted[remaining[i]]);
      for (auto& c : cand) c = symmetric_mod(c, modulus);
      UPoly candidate = primitive_integer_part(to_rat(cand));
      if (candidate.degree() < 1) continue;
      auto [q, r] = divmod(rest, candidate);
      if (!r.is_zero()) continue;
      result.push_back(candidate);
      rest = primitive_integer_part(q);
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
      remaining = std::move(keep);
      found = true;
      break;
    } while (next_combination(pick, remaining.size()));
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(rest);
  return result;
}

}  // namespace vrg
