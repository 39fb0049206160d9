#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <cubictorsion/numberfield.hpp>
#include <cubictorsion/polyq.hpp>
#include <cubictorsion/rational.hpp>
#include <cubictorsion/torsion.hpp>

namespace ct {

// An elliptic curve over Q, kept both as the given long Weierstrass model
// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 and as a Q-isomorphic short
// model y^2 = x^3 + Ax + B with integral A, B (the standard u = 6 rescaling
// of the completed square/cube).
struct Curve {
    std::string label;
    std::array<Int, 5> a{};  // a1, a2, a3, a4, a6
    Rat A, B;                // short model
    Rat disc;                // discriminant of the long model
    Rat j;

    static Curve from_long(const Int& a1, const Int& a2, const Int& a3,
                           const Int& a4, const Int& a6,
                           std::string label = "");
    static Curve from_short(const Rat& A, const Rat& B, std::string label = "");

    // x^3 + Ax + B
    UniPoly two_division_cubic() const;
};

Curve to_short_weierstrass(const Int& a1, const Int& a2, const Int& a3,
                           const Int& a4, const Int& a6,
                           std::string label = "");

// Affine-or-infinity point on the short model, over Q (F = Rat) or over a
// cubic field (F = NFElement).
template <class F>
struct Point {
    bool inf{true};
    F x{};
    F y{};

    static Point infinity() { return Point{}; }
    static Point affine(F x, F y) { return Point{false, std::move(x), std::move(y)}; }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.x == b.x && a.y == b.y;
    }
};

template <class F>
Point<F> point_negate(const Point<F>& P) {
    if (P.inf) return P;
    return Point<F>::affine(P.x, -P.y);
}

// Chord-tangent addition on y^2 = x^3 + Ax + B; A must live in the ambient
// field of the points.
template <class F>
Point<F> point_add(const Point<F>& P, const Point<F>& Q, const F& A) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    if (P.x == Q.x) {
        if (P.y == -Q.y) return Point<F>::infinity();
        // doubling: lambda = (3x^2 + A) / (2y)
        F xx = P.x * P.x;
        F lam = (xx + xx + xx + A) / (P.y + P.y);
        F x3 = lam * lam - P.x - Q.x;
        F y3 = lam * (P.x - x3) - P.y;
        return Point<F>::affine(x3, y3);
    }
    F lam = (Q.y - P.y) / (Q.x - P.x);
    F x3 = lam * lam - P.x - Q.x;
    F y3 = lam * (P.x - x3) - P.y;
    return Point<F>::affine(x3, y3);
}

template <class F>
Point<F> scalar_mul(Int k, Point<F> P, const F& A) {
    if (k < 0) {
        k = -k;
        P = point_negate(P);
    }
    Point<F> R = Point<F>::infinity();
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) R = point_add(R, P, A);
        P = point_add(P, P, A);
        k /= 2;
    }
    return R;
}

using PointQ = Point<Rat>;
using PointK = Point<NFElement>;

// Division polynomials of the short model.  psi(n) is the full x-polynomial
// psi_n for odd n and psi_n / psi_2 for even n (psi_2^2 = 4(x^3+Ax+B));
// primitive(n) has exactly the x-coordinates of points of exact order n as
// roots (integral, primitive, positive leading coefficient).
struct DivisionPoly {
    int n{};
    UniPoly psi;
    UniPoly primitive;
};

// Per-curve cache; not shared across threads.
class DivisionPolys {
public:
    explicit DivisionPolys(const Curve& E) : A_(E.A), B_(E.B) {}
    DivisionPolys(const Rat& A, const Rat& B) : A_(A), B_(B) {}

    // 1 <= n <= 21; throws std::invalid_argument otherwise.
    const DivisionPoly& get(int n);
    const UniPoly& primitive(int n) { return get(n).primitive; }

private:
    Rat A_, B_;
    std::map<int, DivisionPoly> cache_;
    std::map<int, UniPoly> psi_;  // recurrence storage (odd: psi_n, even: psi_n/(2y))
    const UniPoly& psi_raw(int n);
};

DivisionPoly division_poly(const Curve& E, int n);

template <class F>
struct TorsionResult {
    TorsionStructure structure;
    std::vector<Point<F>> generators;  // size 0, 1 or 2; lexicographically smallest found
};

TorsionResult<Rat> torsion_over_Q(const Curve& E);
TorsionResult<NFElement> torsion_over_K(const Curve& E, const CubicField& K);

// Points on the short model with the given x-coordinate: none, (x, 0), or
// (x, +-y).
std::vector<PointK> lift_x_to_points(const Curve& E, const NFElement& x,
                                     const CubicField& K);
std::vector<PointQ> lift_x_to_points(const Curve& E, const Rat& x);

}  // namespace ct
