#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "cubictorsion/rational.hpp"

namespace ct {

// Univariate polynomial over Q, coefficients lowest degree first.
// Invariant: leading coefficient nonzero unless the polynomial is zero
// (empty coefficient vector).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<Rat> coeffs);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rat& c);
  // x^k with coefficient c.
  static UniPoly monomial(const Rat& c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int i) const;
  const Rat& leading() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly pow(int e) const;

  // Quotient and remainder; divisor nonzero.
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
  // Exact division; aborts if the remainder is nonzero.
  static UniPoly exact_div(const UniPoly& a, const UniPoly& b);

  // Content/primitive part over Z: returns (c, q) with this = c * q,
  // q integral primitive with positive leading coefficient.
  std::pair<Rat, UniPoly> primitivize() const;

  std::string str() const;  // human-readable, variable "x"

 private:
  void trim();
  std::vector<Rat> c_;
};

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
Rat poly_resultant(const UniPoly& a, const UniPoly& b);
Rat poly_discriminant(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);

// p(q(x)).
UniPoly poly_compose(const UniPoly& p, const UniPoly& q);

}  // namespace ct
