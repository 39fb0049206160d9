#include "cubictorsion/intfactor.hpp"

#include <algorithm>
#include <cassert>

namespace ct {

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's variant; n composite, odd, not a perfect power of a found factor.
  for (Int c(1);; ++c) {
    Int x(2), y(2), d(1);
    Int saved_x;
    int power = 1, lam = 0;
    auto f = [&](const Int& v) -> Int { return (v * v + c) % n; };
    while (d == 1) {
      if (power == lam) {
        saved_x = x;
        power *= 2;
        lam = 0;
      }
      x = f(x);
      ++lam;
      Int diff = x - saved_x;
      if (diff == 0) break;  // cycle without factor; retry with next c
      Int g = gcd(diff < 0 ? Int(-diff) : diff, n);
      if (g > 1) d = g;
    }
    if (d > 1 && d < n) return d;
  }
}

void factor_rec(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  // perfect power shortcut
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (int k = 2; k <= 64; ++k) {
      Int r;
      if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k)) {
        std::map<Int, int> sub;
        factor_rec(r, sub);
        for (auto& [p, e] : sub) out[p] += e * k;
        return;
      }
    }
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<Int, int> factorize(const Int& n) {
  assert(n != 0);
  Int m = n < 0 ? Int(-n) : n;
  std::map<Int, int> out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (m % p == 0) {
      ++out[Int(p)];
      m /= p;
    }
  }
  for (long p = 17; p < 100000 && m > 1; p += 2) {
    if (Int(p) * p > m) break;
    while (m % p == 0) {
      ++out[Int(p)];
      m /= p;
    }
  }
  if (m > 1) factor_rec(m, out);
  return out;
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : factorize(n)) {
    size_t sz = out.size();
    Int pk(1);
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ct
