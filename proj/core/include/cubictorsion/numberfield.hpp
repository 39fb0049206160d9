#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include <cubictorsion/polyq.hpp>

namespace ct {

class NFElement;

// A cubic number field K = Q[x]/(f) with f monic, integral, irreducible of
// degree 3.  Elements are represented on the power basis 1, theta, theta^2.
// Copies share state, so the lazily computed field discriminant is computed
// at most once per field.
class CubicField {
public:
    // f must be monic with integer coefficients, degree 3, and have no
    // rational root.  Throws std::invalid_argument otherwise.
    explicit CubicField(const UniPoly& f);

    // Accepts any irreducible cubic with rational coefficients and builds an
    // isomorphic field on a monic integral model (theta' = a*theta for the
    // leading coefficient a of the primitive part).
    static CubicField from_cubic(const UniPoly& p);

    const UniPoly& defining_poly() const;
    const Rat& poly_disc() const;

    // Discriminant of the maximal order; memoized, safe under concurrent
    // first access.
    const Int& field_disc() const;

    NFElement element(const Rat& c0, const Rat& c1 = Rat(0),
                      const Rat& c2 = Rat(0)) const;
    NFElement theta() const;
    NFElement zero() const;
    NFElement one() const;

    bool same_field_object(const CubicField& o) const { return d_ == o.d_; }

private:
    struct Data;
    explicit CubicField(std::shared_ptr<Data> d) : d_(std::move(d)) {}
    std::shared_ptr<Data> d_;
    friend class NFElement;
};

class NFElement {
public:
    // Detached placeholder (no parent field); usable only as a target of
    // assignment.  Needed so containers and Point<NFElement> can default-
    // construct slots.
    NFElement() : c_{Rat(0), Rat(0), Rat(0)} {}

    const std::array<Rat, 3>& coords() const { return c_; }
    CubicField field() const;

    bool is_zero() const;
    bool is_rational() const;
    // Pre: is_rational().
    Rat rational_value() const;

    NFElement inv() const;  // throws std::invalid_argument on zero

    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend NFElement operator/(const NFElement& a, const NFElement& b);
    NFElement operator-() const;
    friend NFElement operator*(const Rat& s, const NFElement& a);
    friend bool operator==(const NFElement& a, const NFElement& b);
    friend bool operator!=(const NFElement& a, const NFElement& b)
    { return !(a == b); }

private:
    NFElement(std::shared_ptr<CubicField::Data> d, std::array<Rat, 3> c)
        : d_(std::move(d)), c_(std::move(c)) {}
    std::shared_ptr<CubicField::Data> d_;
    std::array<Rat, 3> c_;
    friend class CubicField;
    friend NFElement eval_at(const UniPoly& p, const NFElement& x);
};

enum class NFOp { add, sub, mul, div };

NFElement nf_arith(const NFElement& a, const NFElement& b, NFOp op);

// Monic minimal polynomial over Q; degree 1 or 3 (degree 2 is impossible in
// a cubic field and is asserted away).
UniPoly min_poly(const NFElement& a);

// All roots of p in K.  p must be squarefree with deg p in [1, 3]; a cubic p
// has roots in K iff K is isomorphic to Q[x]/(p), located by factoring the
// norm resultant Res_y(f(y), p(x - s*y)) for a shift s making it squarefree.
// Root count for irreducible cubic p is 0, 1, or 3.
std::vector<NFElement> roots_in_field(const UniPoly& p, const CubicField& K);

// z with z^2 = a when a is a square in K, else nullopt.
std::optional<NFElement> sqrt_in_field(const NFElement& a);

// True iff K2's defining polynomial has a root in K1 (equivalent to field
// isomorphism in degree 3).
bool is_isomorphic(const CubicField& K1, const CubicField& K2);

// Discriminant of the maximal order of K.
Int field_discriminant(const CubicField& K);

// True iff K/Q is Galois (cyclic), equivalently field_disc is a square.
bool is_galois_cubic(const CubicField& K);

// Evaluate a rational polynomial at an element of K.
NFElement eval_at(const UniPoly& p, const NFElement& x);

}  // namespace ct
