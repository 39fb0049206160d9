#include "cubictorsion/polyq.hpp"

#include <cassert>
#include <sstream>

namespace ct {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rat& c) {
  UniPoly p;
  if (c != 0) p.c_ = {c};
  return p;
}

UniPoly UniPoly::monomial(const Rat& c, int k) {
  UniPoly p;
  if (c != 0) {
    p.c_.assign(k + 1, Rat(0));
    p.c_[k] = c;
  }
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UniPoly::operator[](int i) const {
  static const Rat kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

Rat UniPoly::eval(const Rat& x) const {
  Rat r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  UniPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (degree() < 1) return UniPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading());
}

UniPoly UniPoly::pow(int e) const {
  UniPoly r = UniPoly::constant(1);
  UniPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
  assert(!b.is_zero());
  UniPoly r = a;
  std::vector<Rat> q;
  int db = b.degree();
  if (a.degree() >= db) q.assign(a.degree() - db + 1, Rat(0));
  const Rat inv = Rat(1) / b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Rat f = r.leading() * inv;
    q[k] = f;
    std::vector<Rat> rc = r.c_;
    for (int i = 0; i <= db; ++i) rc[k + i] -= f * b.c_[i];
    r = UniPoly(std::move(rc));
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  assert(r.is_zero() && "exact_div: nonzero remainder");
  return q;
}

std::pair<Rat, UniPoly> UniPoly::primitivize() const {
  if (is_zero()) return {Rat(0), UniPoly()};
  Int d(1);
  for (const auto& c : c_) d = lcm(d, den(c));
  Int g(0);
  for (const auto& c : c_) g = gcd(g, num(c) * (d / den(c)));
  if (leading() < 0) g = -g;
  Rat content = Rat(g, d);
  content.canonicalize();
  std::vector<Rat> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / content;
  return {content, UniPoly(std::move(out))};
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = (*this)[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    Rat a = (!first && c < 0) ? Rat(-c) : c;
    if (first && c < 0 && (a == -1 && i > 0)) os << "-";
    first = false;
    if (i == 0 || (a != 1 && a != -1)) os << a.get_str() << (i > 0 ? "*" : "");
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = UniPoly::divrem(x, y);
    (void)q;
    x = y;
    y = r;
  }
  return x.monic();
}

Rat poly_resultant(const UniPoly& a, const UniPoly& b) {
  // Euclidean resultant via remainder sequence.
  if (a.is_zero() || b.is_zero()) return Rat(0);
  UniPoly x = a, y = b;
  Rat res(1);
  bool swapped = false;
  if (x.degree() < y.degree()) {
    std::swap(x, y);
    if ((a.degree() * b.degree()) % 2 == 1) res = -res;
  }
  (void)swapped;
  while (y.degree() > 0) {
    auto [q, r] = UniPoly::divrem(x, y);
    (void)q;
    if (r.is_zero()) return Rat(0);
    int dx = x.degree(), dy = y.degree(), dr = r.degree();
    res *= pow_rat(y.leading(), dx - dr);
    if ((dx * dy) % 2 == 1) res = -res;
    x = y;
    y = r;
  }
  // y is a nonzero constant
  res *= pow_rat(y.leading(), x.degree());
  return res;
}

Rat poly_discriminant(const UniPoly& p) {
  assert(p.degree() >= 1);
  Rat r = poly_resultant(p, p.derivative());
  r /= p.leading();
  int n = p.degree();
  // sign (-1)^(n(n-1)/2)
  if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
  return r;
}

UniPoly squarefree_part(const UniPoly& p) {
  assert(!p.is_zero());
  if (p.degree() == 0) return UniPoly::constant(1);
  UniPoly g = poly_gcd(p, p.derivative());
  return UniPoly::exact_div(p, g).monic();
}

UniPoly poly_compose(const UniPoly& p, const UniPoly& q) {
  UniPoly r;
  for (int i = p.degree(); i >= 0; --i) {
    r = r * q + UniPoly::constant(p[i]);
  }
  return r;
}

}  // namespace ct
