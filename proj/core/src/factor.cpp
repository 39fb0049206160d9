#include "cubictorsion/factor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "cubictorsion/intfactor.hpp"

namespace ct {
namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p a word-sized odd prime. Coefficients lowest first,
// leading coefficient nonzero.

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using FpPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + u128(a[i]) * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, u64 p) {
  int db = fp_deg(b);
  u64 inv = invmod(b.back(), p);
  while (fp_deg(a) >= db) {
    int k = fp_deg(a) - db;
    u64 f = mulmod(a.back(), inv, p);
    for (int i = 0; i <= db; ++i)
      a[k + i] = (a[k + i] + p - mulmod(f, b[i], p)) % p;
    fp_trim(a);
  }
  return a;
}

FpPoly fp_divexact(FpPoly a, const FpPoly& b, u64 p) {
  int db = fp_deg(b);
  u64 inv = invmod(b.back(), p);
  FpPoly q(std::max<int>(fp_deg(a) - db + 1, 0), 0);
  while (fp_deg(a) >= db) {
    int k = fp_deg(a) - db;
    u64 f = mulmod(a.back(), inv, p);
    q[k] = f;
    for (int i = 0; i <= db; ++i)
      a[k + i] = (a[k + i] + p - mulmod(f, b[i], p)) % p;
    fp_trim(a);
  }
  return q;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

FpPoly fp_powmod_poly(FpPoly base, Int e, const FpPoly& mod, u64 p) {
  FpPoly r{1};
  base = fp_rem(std::move(base), mod, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fp_rem(fp_mul(r, base, p), mod, p);
    base = fp_rem(fp_mul(base, base, p), mod, p);
    e >>= 1;
  }
  return r;
}

void fp_monic(FpPoly& f, u64 p) {
  if (f.empty() || f.back() == 1) return;
  u64 inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// squarefree monic f. Deterministic via fixed RNG seed.
std::vector<FpPoly> fp_factor_squarefree(FpPoly f, u64 p) {
  std::vector<FpPoly> out;
  std::mt19937_64 rng(0x5eed5eed5eed5eedULL);
  fp_monic(f, p);
  // distinct-degree
  std::vector<std::pair<FpPoly, int>> stages;  // (product of irred of deg d, d)
  FpPoly x{0, 1};
  FpPoly h = x;  // x^(p^d) mod f
  for (int d = 1; fp_deg(f) >= 2 * d; ++d) {
    h = fp_powmod_poly(h, Int(static_cast<unsigned long>(p)), f, p);
    FpPoly hx = h;
    // h - x
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    fp_trim(hx);
    FpPoly g = fp_gcd(f, hx, p);
    if (fp_deg(g) > 0) {
      stages.emplace_back(g, d);
      f = fp_divexact(std::move(f), g, p);
      h = fp_rem(h, f, p);
    }
  }
  if (fp_deg(f) > 0) stages.emplace_back(f, fp_deg(f));
  // equal-degree split
  for (auto& [prod, d] : stages) {
    std::vector<FpPoly> work{prod};
    while (!work.empty()) {
      FpPoly g = std::move(work.back());
      work.pop_back();
      if (fp_deg(g) == d) {
        out.push_back(std::move(g));
        continue;
      }
      // random split: gcd(g, r^((p^d-1)/2) - 1)
      Int pd = pow_int(Int(static_cast<unsigned long>(p)), d);
      Int e = (pd - 1) / 2;
      for (;;) {
        FpPoly r(fp_deg(g), 0);
        r.push_back(1);
        for (auto& c : r) c = rng() % p;
        fp_trim(r);
        if (r.empty()) continue;
        FpPoly s = fp_powmod_poly(r, e, g, p);
        if (s.empty()) continue;
        s[0] = (s[0] + p - 1) % p;
        fp_trim(s);
        FpPoly w = fp_gcd(g, s, p);
        if (fp_deg(w) > 0 && fp_deg(w) < fp_deg(g)) {
          work.push_back(fp_divexact(g, w, p));
          work.push_back(std::move(w));
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials modulo q^k (coefficients as Int in [0, m)).

using ZPoly = std::vector<Int>;

void z_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int z_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly z_mulmod(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) c = ((c % m) + m) % m;
  z_trim(r);
  return r;
}

ZPoly z_addmod(ZPoly a, const ZPoly& b, const Int& m) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % m;
  z_trim(a);
  return a;
}

ZPoly z_submod(ZPoly a, const ZPoly& b, const Int& m) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % m + m) % m;
  z_trim(a);
  return a;
}

ZPoly z_scalemod(ZPoly a, const Int& s, const Int& m) {
  for (auto& c : a) c = ((c * s) % m + m) % m;
  z_trim(a);
  return a;
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  assert(ok);
  (void)ok;
  return r;
}

// remainder of a by monic-leading b (leading coeff invertible mod m)
ZPoly z_remmod(ZPoly a, const ZPoly& b, const Int& m) {
  int db = z_deg(b);
  Int inv = inv_mod(b.back(), m);
  while (z_deg(a) >= db) {
    int k = z_deg(a) - db;
    Int f = (a.back() * inv) % m;
    for (int i = 0; i <= db; ++i) a[k + i] = ((a[k + i] - f * b[i]) % m + m) % m;
    z_trim(a);
  }
  return a;
}

ZPoly z_divexactmod(ZPoly a, const ZPoly& b, const Int& m) {
  int db = z_deg(b);
  Int inv = inv_mod(b.back(), m);
  ZPoly q(std::max<int>(z_deg(a) - db + 1, 0), Int(0));
  while (z_deg(a) >= db) {
    int k = z_deg(a) - db;
    Int f = (a.back() * inv) % m;
    q[k] = f;
    for (int i = 0; i <= db; ++i) a[k + i] = ((a[k + i] - f * b[i]) % m + m) % m;
    z_trim(a);
  }
  return q;
}

// Extended gcd in F_q[x] (q prime): s*a + t*b = 1 for coprime a, b.
void fp_bezout(const FpPoly& a, const FpPoly& b, u64 p, FpPoly& s, FpPoly& t) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    // divide r0 by r1
    FpPoly q = fp_divexact(r0, r1, p);
    FpPoly r2 = fp_rem(r0, r1, p);
    FpPoly s2 = s0, t2 = t0;
    FpPoly qs = fp_mul(q, s1, p), qt = fp_mul(q, t1, p);
    // s2 = s0 - q*s1
    s2.resize(std::max(s2.size(), qs.size()), 0);
    for (size_t i = 0; i < qs.size(); ++i) s2[i] = (s2[i] + p - qs[i]) % p;
    fp_trim(s2);
    t2.resize(std::max(t2.size(), qt.size()), 0);
    for (size_t i = 0; i < qt.size(); ++i) t2[i] = (t2[i] + p - qt[i]) % p;
    fp_trim(t2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  assert(fp_deg(r0) == 0);
  u64 inv = invmod(r0[0], p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  s = std::move(s0);
  t = std::move(t0);
}

ZPoly to_zpoly(const FpPoly& f) {
  ZPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = Int(static_cast<unsigned long>(f[i]));
  return r;
}

// Quotient and remainder by a monic divisor, coefficients mod m.
std::pair<ZPoly, ZPoly> z_divrem_monic(ZPoly a, const ZPoly& b, const Int& m) {
  assert(b.back() == 1);
  int db = z_deg(b);
  ZPoly qout(std::max<int>(z_deg(a) - db + 1, 0), Int(0));
  while (z_deg(a) >= db) {
    int k = z_deg(a) - db;
    Int f = a.back();
    qout[k] = f;
    for (int i = 0; i <= db; ++i) a[k + i] = ((a[k + i] - f * b[i]) % m + m) % m;
    z_trim(a);
  }
  return {std::move(qout), std::move(a)};
}

// Quadratic Hensel lift: given F = G*H mod q with H monic and G, H coprime
// mod q (Bezout cofactors from g0, h0), lift to F = G*H mod q^k, k a power
// of two.  The Bezout pair is lifted alongside (von zur Gathen-style).
void hensel_pair(const ZPoly& F, ZPoly& G, ZPoly& H, const FpPoly& g0,
                 const FpPoly& h0, u64 q, int k) {
  FpPoly s0, t0;
  fp_bezout(g0, h0, q, s0, t0);
  ZPoly S = to_zpoly(s0), T = to_zpoly(t0);
  Int qi(static_cast<unsigned long>(q));
  Int m = qi;  // invariant: F = G*H, S*G + T*H = 1, all mod m; H monic
  Int target = pow_int(qi, k);
  while (m < target) {
    Int m2 = m * m;
    ZPoly Fm = F;
    for (auto& c : Fm) c = ((c % m2) + m2) % m2;
    z_trim(Fm);
    ZPoly E = z_submod(Fm, z_mulmod(G, H, m2), m2);
    auto [qq, r] = z_divrem_monic(z_mulmod(S, E, m2), H, m2);
    G = z_addmod(z_addmod(G, z_mulmod(T, E, m2), m2), z_mulmod(qq, G, m2), m2);
    H = z_addmod(H, r, m2);
    // lift the Bezout pair
    ZPoly B = z_submod(z_addmod(z_mulmod(S, G, m2), z_mulmod(T, H, m2), m2),
                       ZPoly{Int(1)}, m2);
    auto [c2, d2] = z_divrem_monic(z_mulmod(S, B, m2), H, m2);
    S = z_submod(S, d2, m2);
    T = z_submod(z_submod(T, z_mulmod(T, B, m2), m2), z_mulmod(c2, G, m2), m2);
    m = m2;
  }
  // reduce back to the requested modulus (target divides every m reached)
  for (auto& c : G) c = ((c % target) + target) % target;
  z_trim(G);
  for (auto& c : H) c = ((c % target) + target) % target;
  z_trim(H);
}

// Lift the full modular factorization of primitive integer poly P (leading
// coefficient L) from mod q to mod q^k. Returns the lifted factors, each monic
// mod q^k, aligned with `facs`.
std::vector<ZPoly> hensel_tree(const ZPoly& P, const std::vector<FpPoly>& facs,
                               u64 q, int k) {
  Int m = pow_int(Int(static_cast<unsigned long>(q)), k);
  if (facs.size() == 1) {
    // single factor: P itself (made monic mod q^k)
    ZPoly r = P;
    for (auto& c : r) c = ((c % m) + m) % m;
    z_trim(r);
    return {z_scalemod(std::move(r), inv_mod(r.back(), m), m)};
  }
  size_t mid = facs.size() / 2;
  FpPoly g0{1}, h0{1};
  for (size_t i = 0; i < mid; ++i) g0 = fp_mul(g0, facs[i], q);
  for (size_t i = mid; i < facs.size(); ++i) h0 = fp_mul(h0, facs[i], q);
  // attach leading coefficient of P to g0's side
  Int L = P.back();
  u64 Lq = static_cast<u64>(mpz_fdiv_ui(L.get_mpz_t(), q));
  FpPoly g0L = g0;
  for (auto& c : g0L) c = mulmod(c, Lq, q);
  ZPoly G = to_zpoly(g0L), H = to_zpoly(h0);
  ZPoly Pm = P;
  for (auto& c : Pm) c = ((c % m) + m) % m;
  z_trim(Pm);
  hensel_pair(Pm, G, H, g0L, h0, q, k);
  std::vector<FpPoly> left(facs.begin(), facs.begin() + mid);
  std::vector<FpPoly> right(facs.begin() + mid, facs.end());
  auto lg = hensel_tree(G, left, q, k);
  auto lh = hensel_tree(H, right, q, k);
  lg.insert(lg.end(), lh.begin(), lh.end());
  return lg;
}

// Symmetric representative in (-m/2, m/2].
Int symmetric(const Int& c, const Int& m) {
  Int r = ((c % m) + m) % m;
  if (2 * r > m) r -= m;
  return r;
}

// Core engine shared by small_factors and bounded_degree_factors.
// max_modular < 0 means unlimited; otherwise returns nullopt when the number
// of modular factors exceeds it ("undetermined").
std::optional<SmallFactors> factor_bounded(const UniPoly& input, int dmax,
                                           int max_modular) {
  SmallFactors out;
  auto [content, P0] = input.primitivize();
  (void)content;
  if (P0.degree() <= 0) {
    out.cofactor = UniPoly::constant(1);
    return out;
  }
  // integer coefficients
  ZPoly P(P0.degree() + 1);
  for (int i = 0; i <= P0.degree(); ++i) P[i] = num(P0[i]);

  // good prime: q >= 5, q not | lc, P squarefree mod q
  u64 q = 0;
  std::vector<FpPoly> facs;
  for (u64 cand = 5;; ++cand) {
    bool prime = cand >= 2;
    for (u64 d = 2; d * d <= cand; ++d)
      if (cand % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    if (mpz_fdiv_ui(P.back().get_mpz_t(), cand) == 0) continue;
    FpPoly Pq(P.size());
    for (size_t i = 0; i < P.size(); ++i)
      Pq[i] = mpz_fdiv_ui(P[i].get_mpz_t(), cand);
    fp_trim(Pq);
    // squarefree check: gcd(Pq, Pq') == 1
    FpPoly Pd;
    for (size_t i = 1; i < Pq.size(); ++i)
      Pd.push_back(mulmod(Pq[i], i % cand, cand));
    fp_trim(Pd);
    if (Pd.empty()) continue;
    FpPoly g = fp_gcd(Pq, Pd, cand);
    if (fp_deg(g) != 0) continue;
    q = cand;
    fp_monic(Pq, cand);
    facs = fp_factor_squarefree(std::move(Pq), cand);
    break;
  }
  if (max_modular >= 0 && static_cast<int>(facs.size()) > max_modular)
    return std::nullopt;

  // degree feasibility: any subset with total degree in [1, dmax]?
  {
    std::vector<char> reach(dmax + 1, 0);
    reach[0] = 1;
    for (const auto& f : facs) {
      int d = fp_deg(f);
      if (d > dmax) continue;
      for (int s = dmax - d; s >= 0; --s)
        if (reach[s]) reach[s + d] = 1;
    }
    bool any = false;
    for (int s = 1; s <= dmax; ++s) any = any || reach[s];
    if (!any) {
      out.cofactor = P0.monic();
      return out;
    }
  }

  // Mignotte-type bound for degree <= dmax divisors (normalized so the
  // candidate has leading coefficient L): |coeff| <= 2^dmax * ||P||_2 * |L|.
  Int norm2(0);
  for (const auto& c : P) norm2 += c * c;
  Int bound = (isqrt_floor(norm2) + 1) * pow_int(Int(2), dmax) * abs(P.back());
  int k = 1;
  Int qk(static_cast<unsigned long>(q));
  while (qk <= 2 * bound) {
    qk *= static_cast<unsigned long>(q);
    ++k;
  }

  auto lifted = hensel_tree(P, facs, q, k);
  Int m = pow_int(Int(static_cast<unsigned long>(q)), k);

  // subset recombination in ascending total degree
  std::vector<int> order(facs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::vector<char> used(facs.size(), 0);
  UniPoly remaining = P0;
  const Int L0 = num(P0.leading());

  auto try_subset = [&](const std::vector<int>& subset) -> bool {
    // candidate = lc(P) * prod lifted factors, symmetric lift, primitive part
    ZPoly cand{((L0 % m) + m) % m};
    for (int idx : subset) cand = z_mulmod(cand, lifted[idx], m);
    std::vector<Rat> cc(cand.size());
    for (size_t i = 0; i < cand.size(); ++i) cc[i] = Rat(symmetric(cand[i], m));
    UniPoly h(std::move(cc));
    if (h.is_zero()) return false;
    h = h.primitivize().second;
    if (h.degree() < 1) return false;
    auto [quot, rem] = UniPoly::divrem(remaining, h);
    if (!rem.is_zero()) return false;
    out.factors.push_back(h.monic());
    remaining = quot;
    for (int idx : subset) used[idx] = 1;
    return true;
  };

  for (int d = 1; d <= dmax; ++d) {
    // enumerate subsets with total degree exactly d
    std::vector<int> subset;
    std::function<bool(size_t, int)> rec = [&](size_t start, int need) -> bool {
      if (need == 0) {
        if (try_subset(subset)) return true;
        return false;
      }
      for (size_t i = start; i < facs.size(); ++i) {
        if (used[i]) continue;
        int fd = fp_deg(facs[i]);
        if (fd > need) continue;
        subset.push_back(static_cast<int>(i));
        if (rec(i + 1, need - fd)) {
          subset.pop_back();
          return true;
        }
        subset.pop_back();
      }
      return false;
    };
    // retry at the same degree after a hit (other factors of equal degree)
    while (remaining.degree() >= d && rec(0, d)) {
    }
  }
  out.cofactor = remaining.degree() >= 1 ? remaining.monic() : UniPoly::constant(1);
  return out;
}

// Cheap squarefree certificate: if p mod q is squarefree for some prime q not
// dividing lc(p), then p is squarefree over Q.  Returns false when the first
// max_primes primes are all inconclusive (does NOT prove non-squarefree).
bool squarefree_mod_some_prime(const UniPoly& input, int max_primes) {
  auto [content, P0] = input.primitivize();
  (void)content;
  ZPoly P(P0.degree() + 1);
  for (int i = 0; i <= P0.degree(); ++i) P[i] = num(P0[i]);
  int tried = 0;
  for (u64 cand = 5; tried < max_primes; ++cand) {
    bool prime = true;
    for (u64 d = 2; d * d <= cand; ++d)
      if (cand % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    ++tried;
    if (mpz_fdiv_ui(P.back().get_mpz_t(), cand) == 0) continue;
    FpPoly Pq(P.size());
    for (size_t i = 0; i < P.size(); ++i)
      Pq[i] = mpz_fdiv_ui(P[i].get_mpz_t(), cand);
    fp_trim(Pq);
    FpPoly Pd;
    for (size_t i = 1; i < Pq.size(); ++i)
      Pd.push_back(mulmod(Pq[i], i % cand, cand));
    fp_trim(Pd);
    if (Pd.empty()) continue;
    if (fp_deg(fp_gcd(Pq, Pd, cand)) == 0) return true;
  }
  return false;
}

}  // namespace

SmallFactors small_factors(const UniPoly& p, int dmax) {
  if (dmax < 1 || dmax > 3) throw std::invalid_argument("small_factors: dmax must be in [1,3]");
  if (p.is_zero()) throw std::invalid_argument("small_factors: zero polynomial");
  if (p.degree() >= 1 && !squarefree_mod_some_prime(p, 25)) {
    // undecided after 25 primes: settle it exactly
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() > 0) throw std::invalid_argument("small_factors: input not squarefree");
  }
  return *factor_bounded(p, dmax, -1);
}

std::optional<SmallFactors> bounded_degree_factors(const UniPoly& p, int dmax,
                                                   int max_modular) {
  assert(dmax >= 1 && dmax <= 6);
  assert(!p.is_zero());
  UniPoly sf = squarefree_mod_some_prime(p, 25) ? p : squarefree_part(p);
  return factor_bounded(sf, dmax, max_modular);
}

std::vector<Rat> rational_roots(const UniPoly& p) {
  assert(!p.is_zero());
  std::vector<Rat> out;
  if (p.degree() < 1) return out;
  UniPoly sf = squarefree_mod_some_prime(p, 25) ? p : squarefree_part(p);
  SmallFactors f = *factor_bounded(sf, 1, -1);
  for (const auto& lin : f.factors) {
    assert(lin.degree() == 1);
    Rat root = -lin[0];
    // multiplicity by repeated division
    UniPoly rem = p;
    int mult = 0;
    for (;;) {
      auto [q2, r2] = UniPoly::divrem(rem, lin);
      if (!r2.is_zero()) break;
      rem = q2;
      ++mult;
    }
    for (int i = 0; i < mult; ++i) out.push_back(root);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ct
