#include <cubictorsion/numberfield.hpp>

#include <algorithm>
#include <cassert>

#include <cubictorsion/factor.hpp>
#include <cubictorsion/intfactor.hpp>

namespace ct {

// ---------------------------------------------------------------------------
// CubicField core

struct CubicField::Data {
    UniPoly f;          // monic integral irreducible cubic
    Rat poly_disc;
    std::array<Rat, 3> t3;  // theta^3 on the power basis
    std::array<Rat, 3> t4;  // theta^4 on the power basis
    mutable std::mutex mu;
    mutable std::optional<Int> fdisc;
};

CubicField::CubicField(const UniPoly& f) {
    if (f.degree() != 3 || f.leading() != Rat(1))
        throw std::invalid_argument("CubicField: defining polynomial must be a monic cubic");
    for (int i = 0; i < 3; ++i)
        if (!is_integer(f[i]))
            throw std::invalid_argument("CubicField: defining polynomial must be integral");
    if (!rational_roots(f).empty())
        throw std::invalid_argument("CubicField: defining polynomial is reducible");
    auto d = std::make_shared<Data>();
    d->f = f;
    d->poly_disc = poly_discriminant(f);
    const Rat a0 = f[0], a1 = f[1], a2 = f[2];
    d->t3 = {-a0, -a1, -a2};
    // theta^4 = theta * theta^3 reduced again by theta^3 = -a0 - a1 t - a2 t^2
    d->t4 = {a2 * a0, a2 * a1 - a0, a2 * a2 - a1};
    d_ = std::move(d);
}

CubicField CubicField::from_cubic(const UniPoly& p) {
    if (p.degree() != 3)
        throw std::invalid_argument("CubicField::from_cubic: cubic required");
    auto [content, prim] = p.primitivize();
    (void)content;
    // a x^3 + b x^2 + c x + d  ->  monic model x^3 + b x^2 + ac x + a^2 d
    // via theta' = a * theta.
    Int a = num(prim[3]), b = num(prim[2]), c = num(prim[1]), dd = num(prim[0]);
    UniPoly g({Rat(a * a * dd), Rat(a * c), Rat(b), Rat(1)});
    return CubicField(g);
}

const UniPoly& CubicField::defining_poly() const { return d_->f; }
const Rat& CubicField::poly_disc() const { return d_->poly_disc; }

NFElement CubicField::element(const Rat& c0, const Rat& c1, const Rat& c2) const {
    return NFElement(d_, {c0, c1, c2});
}
NFElement CubicField::theta() const { return element(Rat(0), Rat(1)); }
NFElement CubicField::zero() const { return element(Rat(0)); }
NFElement CubicField::one() const { return element(Rat(1)); }

CubicField NFElement::field() const { return CubicField(d_); }

bool NFElement::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0;
}
bool NFElement::is_rational() const { return c_[1] == 0 && c_[2] == 0; }
Rat NFElement::rational_value() const {
    assert(is_rational());
    return c_[0];
}

static void check_same(const NFElement& a, const NFElement& b) {
    if (!a.field().same_field_object(b.field()) &&
        !(a.field().defining_poly() == b.field().defining_poly()))
        throw std::invalid_argument("NFElement: mismatched parent fields");
}

NFElement operator+(const NFElement& a, const NFElement& b) {
    check_same(a, b);
    return NFElement(a.d_, {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]});
}
NFElement operator-(const NFElement& a, const NFElement& b) {
    check_same(a, b);
    return NFElement(a.d_, {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]});
}
NFElement NFElement::operator-() const {
    return NFElement(d_, {-c_[0], -c_[1], -c_[2]});
}
NFElement operator*(const Rat& s, const NFElement& a) {
    return NFElement(a.d_, {s * a.c_[0], s * a.c_[1], s * a.c_[2]});
}
bool operator==(const NFElement& a, const NFElement& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
}

NFElement operator*(const NFElement& a, const NFElement& b) {
    check_same(a, b);
    const auto& x = a.c_;
    const auto& y = b.c_;
    // raw product coefficients on 1, t, t^2, t^3, t^4
    Rat r0 = x[0] * y[0];
    Rat r1 = x[0] * y[1] + x[1] * y[0];
    Rat r2 = x[0] * y[2] + x[1] * y[1] + x[2] * y[0];
    Rat r3 = x[1] * y[2] + x[2] * y[1];
    Rat r4 = x[2] * y[2];
    const auto& t3 = a.d_->t3;
    const auto& t4 = a.d_->t4;
    return NFElement(a.d_, {r0 + r3 * t3[0] + r4 * t4[0],
                            r1 + r3 * t3[1] + r4 * t4[1],
                            r2 + r3 * t3[2] + r4 * t4[2]});
}

NFElement NFElement::inv() const {
    if (is_zero()) throw std::invalid_argument("NFElement::inv: division by zero");
    // Extended Euclid in Q[x]: u * lift + v * f = 1.
    UniPoly r0 = d_->f;
    UniPoly r1({c_[0], c_[1], c_[2]});
    UniPoly s0 = UniPoly::constant(Rat(0)), s1 = UniPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = UniPoly::divrem(r0, r1);
        UniPoly s2 = s0 - q * s1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
    }
    // r0 = gcd (a nonzero constant since f irreducible and lift nonzero)
    assert(r0.degree() == 0);
    UniPoly u = s0 * Rat(Rat(1) / r0[0]);
    return NFElement(d_, {u[0], u[1], u[2]});
}

NFElement operator/(const NFElement& a, const NFElement& b) {
    return a * b.inv();
}

NFElement nf_arith(const NFElement& a, const NFElement& b, NFOp op) {
    switch (op) {
        case NFOp::add: return a + b;
        case NFOp::sub: return a - b;
        case NFOp::mul: return a * b;
        case NFOp::div: return a / b;
    }
    throw std::invalid_argument("nf_arith: bad op");
}

NFElement eval_at(const UniPoly& p, const NFElement& x) {
    NFElement r = NFElement(x.d_, {Rat(0), Rat(0), Rat(0)});
    for (int i = p.degree(); i >= 0; --i)
        r = r * x + NFElement(x.d_, {p[i], Rat(0), Rat(0)});
    return r;
}

// ---------------------------------------------------------------------------
// Minimal polynomial via the multiplication matrix

UniPoly min_poly(const NFElement& a) {
    if (a.is_rational())
        return UniPoly({-a.rational_value(), Rat(1)});
    CubicField K = a.field();
    NFElement th = K.theta();
    // columns: a, a*theta, a*theta^2 on the power basis
    NFElement c0 = a, c1 = a * th, c2 = c1 * th;
    std::array<std::array<Rat, 3>, 3> M;
    for (int i = 0; i < 3; ++i) {
        M[i][0] = c0.coords()[i];
        M[i][1] = c1.coords()[i];
        M[i][2] = c2.coords()[i];
    }
    Rat tr = M[0][0] + M[1][1] + M[2][2];
    Rat s = (M[0][0] * M[1][1] - M[0][1] * M[1][0]) +
            (M[0][0] * M[2][2] - M[0][2] * M[2][0]) +
            (M[1][1] * M[2][2] - M[1][2] * M[2][1]);
    Rat det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
              M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
              M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    UniPoly cp({-det, s, -tr, Rat(1)});
    // A non-rational element of a cubic field has degree exactly 3: its
    // characteristic polynomial is the minimal polynomial and is irreducible.
    assert(rational_roots(cp).empty());
    assert(eval_at(cp, a).is_zero());
    return cp;
}

// ---------------------------------------------------------------------------
// Roots in K (Trager)

namespace {

using KPoly = std::vector<NFElement>;

int kdeg(const KPoly& a) {
    int d = (int)a.size() - 1;
    while (d >= 0 && a[(size_t)d].is_zero()) --d;
    return d;
}

KPoly krem(KPoly a, const KPoly& b) {
    int da = kdeg(a), db = kdeg(b);
    NFElement inv = b[(size_t)db].inv();
    while (da >= db) {
        NFElement q = a[(size_t)da] * inv;
        for (int i = 0; i <= db; ++i)
            a[(size_t)(da - db + i)] = a[(size_t)(da - db + i)] - q * b[(size_t)i];
        da = kdeg(a);
    }
    while ((int)a.size() > std::max(da + 1, 1)) a.pop_back();
    return a;
}

KPoly kgcd(KPoly a, KPoly b) {
    while (kdeg(b) >= 0) {
        KPoly r = krem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = kdeg(a);
    NFElement inv = a[(size_t)d].inv();
    KPoly out;
    for (int i = 0; i <= d; ++i) out.push_back(a[(size_t)i] * inv);
    return out;
}

// F(x + c) for monic-or-not F with rational coefficients, c in K.
KPoly taylor_shift(const UniPoly& F, const NFElement& c) {
    CubicField K = c.field();
    int n = F.degree();
    KPoly co;
    for (int i = 0; i <= n; ++i) co.push_back(K.element(F[i]));
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j)
            co[(size_t)j] = co[(size_t)j] + c * co[(size_t)j + 1];
    return co;
}

// Lagrange interpolation through (xs[i], ys[i]).
UniPoly lagrange(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    UniPoly acc;  // zero
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly li = UniPoly::constant(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = li * UniPoly({-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + li * Rat(ys[i] / denom);
    }
    return acc;
}

std::vector<NFElement> roots_of_irreducible_cubic(const UniPoly& pin,
                                                  const CubicField& K) {
    UniPoly p = pin.monic();
    const UniPoly& f = K.defining_poly();
    // Norm resultant N(x) = Res_y(f(y), p(x - s*y)), degree 9, computed by
    // interpolation at 10 rational points; bump s until N is squarefree.
    Int s = 0;
    UniPoly N;
    for (;; ++s) {
        std::vector<Rat> xs, ys;
        for (int k = 0; k <= 9; ++k) {
            Rat x0(k);
            UniPoly q = poly_compose(p, UniPoly({x0, Rat(-s)}));
            xs.push_back(x0);
            ys.push_back(poly_resultant(f, q));
        }
        N = lagrange(xs, ys);
        assert(N.degree() == 9);
        if (poly_discriminant(N) != 0) break;
    }
    auto nf = small_factors(N, 3);
    NFElement sth = Rat(s) * K.theta();
    std::vector<NFElement> roots;
    for (const auto& fac : nf.factors) {
        if (fac.degree() != 3) continue;
        // gcd over K of p(x) and fac(x + s*theta); a linear gcd exposes a root.
        KPoly a = taylor_shift(p, K.zero());
        KPoly b = taylor_shift(fac, sth);
        KPoly g = kgcd(a, b);
        if (kdeg(g) == 1) roots.push_back(-g[0]);
    }
    assert(roots.size() == 0 || roots.size() == 1 || roots.size() == 3);
    return roots;
}

}  // namespace

std::vector<NFElement> roots_in_field(const UniPoly& p, const CubicField& K) {
    if (p.degree() < 1 || p.degree() > 3)
        throw std::invalid_argument("roots_in_field: degree must be 1..3");
    std::vector<NFElement> out;
    auto sf = small_factors(p, 3);
    for (const auto& fac : sf.factors) {
        if (fac.degree() == 1) {
            out.push_back(K.element(-fac[0]));
        } else if (fac.degree() == 3) {
            auto r = roots_of_irreducible_cubic(fac, K);
            out.insert(out.end(), r.begin(), r.end());
        }
        // degree 2: an irreducible quadratic has no root in an odd-degree field
    }
    for (const auto& r : out) assert(eval_at(p, r).is_zero());
    return out;
}

std::optional<NFElement> sqrt_in_field(const NFElement& a) {
    CubicField K = a.field();
    if (a.is_zero()) return K.zero();
    UniPoly m = min_poly(a);
    UniPoly mt2 = poly_compose(m, UniPoly({Rat(0), Rat(0), Rat(1)}));
    auto sf = small_factors(mt2, 3);
    for (const auto& fac : sf.factors) {
        if (fac.degree() != 1 && fac.degree() != 3) continue;
        for (const auto& z : roots_in_field(fac, K))
            if (z * z == a) return z;
    }
    return std::nullopt;
}

bool is_isomorphic(const CubicField& K1, const CubicField& K2) {
    if (K1.same_field_object(K2)) return true;
    if (K1.defining_poly() == K2.defining_poly()) return true;
    return !roots_in_field(K2.defining_poly(), K1).empty();
}

// ---------------------------------------------------------------------------
// Field discriminant: Dedekind's criterion plus order enlargement
// (p-radical / ring-of-multipliers iteration) at every prime whose square
// divides the polynomial discriminant.

namespace {

// --- dense F_p polynomials with big-integer coefficients (degree <= 6 here)

using PPoly = std::vector<Int>;  // lowest-first, coefficients in [0, p)

Int md(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

void pp_trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pp_deg(const PPoly& a) { return (int)a.size() - 1; }

PPoly pp_from(const UniPoly& u, const Int& p) {
    PPoly a;
    for (int i = 0; i <= u.degree(); ++i) a.push_back(md(num(u[i]), p));
    pp_trim(a);
    return a;
}

Int pp_inv(const Int& a, const Int& p) {
    Int r;
    int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    assert(ok);
    (void)ok;
    return r;
}

PPoly pp_rem(PPoly a, const PPoly& b, const Int& p) {
    int db = pp_deg(b);
    Int inv = pp_inv(b.back(), p);
    while (pp_deg(a) >= db) {
        int da = pp_deg(a);
        Int q = md(a.back() * inv, p);
        for (int i = 0; i <= db; ++i)
            a[(size_t)(da - db + i)] = md(a[(size_t)(da - db + i)] - q * b[(size_t)i], p);
        pp_trim(a);
    }
    return a;
}

PPoly pp_gcd(PPoly a, PPoly b, const Int& p) {
    while (!b.empty()) {
        PPoly r = pp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Int inv = pp_inv(a.back(), p);
        for (auto& c : a) c = md(c * inv, p);
    }
    return a;
}

PPoly pp_mul(const PPoly& a, const PPoly& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = md(c[i + j] + a[i] * b[j], p);
    pp_trim(c);
    return c;
}

PPoly pp_derivative(const PPoly& a, const Int& p) {
    PPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(md(a[i] * (long)i, p));
    pp_trim(d);
    return d;
}

PPoly pp_divexact(const PPoly& a, const PPoly& b, const Int& p);

// Product of the distinct monic irreducible factors of monic f over F_p.
// Handles multiplicities divisible by p (where f/gcd(f,f') drops factors).
PPoly pp_radical(const PPoly& f, const Int& p) {
    if (pp_deg(f) <= 0) return {Int(1)};
    PPoly fd = pp_derivative(f, p);
    if (fd.empty()) {
        // f = z(x^p) = z(x)^p with the same coefficients (Frobenius fixes F_p);
        // only possible for p <= deg f, so p fits in a machine word here.
        unsigned long pl = mpz_get_ui(p.get_mpz_t());
        PPoly z;
        for (size_t i = 0; i * pl < f.size(); ++i) z.push_back(f[i * pl]);
        pp_trim(z);
        return pp_radical(z, p);
    }
    PPoly d = pp_gcd(f, fd, p);
    if (pp_deg(d) <= 0) return f;
    PPoly v = pp_divexact(f, d, p);  // factors with multiplicity prime to p
    PPoly w = d;
    for (;;) {
        PPoly g = pp_gcd(w, v, p);
        if (pp_deg(g) <= 0) break;
        w = pp_divexact(w, g, p);
    }
    // w = product of g_i^{e_i} over the factors with p | e_i: a p-th power
    return pp_mul(v, pp_radical(w, p), p);
}

PPoly pp_divexact(const PPoly& a, const PPoly& b, const Int& p) {
    PPoly q(a.size(), Int(0));
    PPoly r = a;
    int db = pp_deg(b);
    Int inv = pp_inv(b.back(), p);
    while (pp_deg(r) >= db) {
        int dr = pp_deg(r);
        Int c = md(r.back() * inv, p);
        q[(size_t)(dr - db)] = c;
        for (int i = 0; i <= db; ++i)
            r[(size_t)(dr - db + i)] = md(r[(size_t)(dr - db + i)] - c * b[(size_t)i], p);
        pp_trim(r);
    }
    assert(r.empty());
    pp_trim(q);
    return q;
}

// Dedekind's criterion: is Z[theta] maximal at p for monic integral f?
bool dedekind_maximal(const UniPoly& f, const Int& p) {
    PPoly fb = pp_from(f, p);
    PPoly fd = pp_from(f.derivative(), p);
    PPoly g = pp_gcd(fb, fd, p);
    if (pp_deg(g) <= 0) return true;  // f squarefree mod p
    PPoly grad = pp_radical(fb, p);
    PPoly hbar = pp_divexact(fb, grad, p);
    // integral lifts with coefficients in [0, p)
    UniPoly gl, hl;
    {
        std::vector<Rat> gc, hc;
        for (const auto& c : grad) gc.emplace_back(c);
        for (const auto& c : hbar) hc.emplace_back(c);
        gl = UniPoly(gc);
        hl = UniPoly(hc);
    }
    UniPoly T = gl * hl - f;
    std::vector<Rat> tc;
    for (int i = 0; i <= T.degree(); ++i) {
        Rat c = T[i] / Rat(p);
        assert(is_integer(c));
        tc.push_back(c);
    }
    PPoly Tb = pp_from(UniPoly(tc), p);
    PPoly u = pp_gcd(pp_gcd(Tb, grad, p), hbar, p);
    return pp_deg(u) <= 0;
}

// --- small exact linear algebra

using RMat = std::array<std::array<Rat, 3>, 3>;
using RVec = std::array<Rat, 3>;

Rat det3(const RMat& M) {
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
           M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

// Solve x * B = v for a row vector x (B given by rows).
RVec solve_row(const RMat& B, const RVec& v) {
    // transpose and do Gaussian elimination on B^T x^T = v^T
    std::array<std::array<Rat, 4>, 3> A;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) A[i][j] = B[j][i];
        A[i][3] = v[i];
    }
    for (int c = 0; c < 3; ++c) {
        int piv = -1;
        for (int r = c; r < 3; ++r)
            if (A[r][c] != 0) { piv = r; break; }
        assert(piv >= 0);
        std::swap(A[c], A[piv]);
        Rat inv = Rat(1) / A[c][c];
        for (int j = c; j < 4; ++j) A[c][j] *= inv;
        for (int r = 0; r < 3; ++r) {
            if (r == c || A[r][c] == 0) continue;
            Rat m = A[r][c];
            for (int j = c; j < 4; ++j) A[r][j] -= m * A[c][j];
        }
    }
    return {A[0][3], A[1][3], A[2][3]};
}

// Row-style Hermite reduction of an m x 3 integer matrix; returns a 3 x 3
// upper-triangular basis of the row lattice (which must have full rank).
std::array<std::array<Int, 3>, 3> hnf3(std::vector<std::array<Int, 3>> rows) {
    size_t top = 0;
    for (int col = 0; col < 3; ++col) {
        for (;;) {
            size_t best = SIZE_MAX;
            for (size_t r = top; r < rows.size(); ++r) {
                if (rows[r][(size_t)col] == 0) continue;
                if (best == SIZE_MAX ||
                    abs(rows[r][(size_t)col]) < abs(rows[best][(size_t)col]))
                    best = r;
            }
            assert(best != SIZE_MAX);
            std::swap(rows[top], rows[best]);
            bool more = false;
            for (size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][(size_t)col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][(size_t)col].get_mpz_t(),
                           rows[top][(size_t)col].get_mpz_t());
                for (int j = 0; j < 3; ++j) rows[r][(size_t)j] -= q * rows[top][(size_t)j];
                if (rows[r][(size_t)col] != 0) more = true;
            }
            if (!more) break;
        }
        if (rows[top][(size_t)col] < 0)
            for (int j = 0; j < 3; ++j) rows[top][(size_t)j] = -rows[top][(size_t)j];
        ++top;
    }
    return {rows[0], rows[1], rows[2]};
}

// Kernel of an m x 3 matrix over F_p (solutions x of M x = 0, column style:
// rows are linear conditions on x).  Returns a basis of kernel vectors.
std::vector<std::array<Int, 3>> fp_kernel(std::vector<std::array<Int, 3>> M,
                                          const Int& p) {
    // Gaussian elimination; track pivot column of each row.
    std::vector<int> pivcol;
    size_t rr = 0;
    for (int c = 0; c < 3 && rr < M.size(); ++c) {
        size_t piv = SIZE_MAX;
        for (size_t r = rr; r < M.size(); ++r)
            if (M[r][(size_t)c] != 0) { piv = r; break; }
        if (piv == SIZE_MAX) continue;
        std::swap(M[rr], M[piv]);
        Int inv = pp_inv(M[rr][(size_t)c], p);
        for (int j = 0; j < 3; ++j) M[rr][(size_t)j] = md(M[rr][(size_t)j] * inv, p);
        for (size_t r = 0; r < M.size(); ++r) {
            if (r == rr || M[r][(size_t)c] == 0) continue;
            Int m = M[r][(size_t)c];
            for (int j = 0; j < 3; ++j)
                M[r][(size_t)j] = md(M[r][(size_t)j] - m * M[rr][(size_t)j], p);
        }
        pivcol.push_back(c);
        ++rr;
    }
    std::vector<std::array<Int, 3>> ker;
    for (int c = 0; c < 3; ++c) {
        if (std::find(pivcol.begin(), pivcol.end(), c) != pivcol.end()) continue;
        std::array<Int, 3> v{Int(0), Int(0), Int(0)};
        v[(size_t)c] = 1;
        for (size_t r = 0; r < pivcol.size(); ++r)
            v[(size_t)pivcol[r]] = md(-M[r][(size_t)c], p);
        ker.push_back(v);
    }
    return ker;
}

// Multiplication on the power basis of K reduced mod f.
RVec pb_mul(const CubicField& K, const RVec& x, const RVec& y) {
    NFElement a = K.element(x[0], x[1], x[2]);
    NFElement b = K.element(y[0], y[1], y[2]);
    NFElement c = a * b;
    return {c.coords()[0], c.coords()[1], c.coords()[2]};
}

// One p-maximalization pass: given an order basis B (rows = power-basis
// coordinates), return true and leave B unchanged if p-maximal, else enlarge
// B and return false.
bool enlarge_at_p(const CubicField& K, RMat& B, const Int& p) {
    // structure constants S[i][j] = coordinates of B_i * B_j on the B basis
    std::array<std::array<std::array<Int, 3>, 3>, 3> S;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            RVec w = pb_mul(K, B[(size_t)i], B[(size_t)j]);
            RVec c = solve_row(B, w);
            for (int k = 0; k < 3; ++k) {
                assert(is_integer(c[(size_t)k]));
                S[(size_t)i][(size_t)j][(size_t)k] = num(c[(size_t)k]);
            }
        }
    auto mul_mod = [&](const std::array<Int, 3>& x, const std::array<Int, 3>& y) {
        std::array<Int, 3> z{Int(0), Int(0), Int(0)};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Int c = md(x[(size_t)i] * y[(size_t)j], p);
                if (c == 0) continue;
                for (int k = 0; k < 3; ++k)
                    z[(size_t)k] = md(z[(size_t)k] + c * S[(size_t)i][(size_t)j][(size_t)k], p);
            }
        return z;
    };
    // Frobenius x -> x^q on O/pO with q = p^ceil(log_p 3)
    Int q = p;
    while (q < 3) q *= p;
    auto pow_mod = [&](std::array<Int, 3> x, Int e) {
        std::array<Int, 3> r{Int(1), Int(0), Int(0)};  // coordinates of 1?
        // The identity of O/pO is the element 1, whose B-coordinates come from
        // solving against the basis.
        RVec onec = solve_row(B, {Rat(1), Rat(0), Rat(0)});
        for (int k = 0; k < 3; ++k) r[(size_t)k] = md(num(onec[(size_t)k]), p);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul_mod(r, x);
            x = mul_mod(x, x);
            e /= 2;
        }
        return r;
    };
    // radical = kernel of Frobenius: rows of the condition matrix are the
    // images' coordinates; we need kernel of the matrix whose columns are
    // frob(e_i).  Build condition rows: for each coordinate k, sum_i x_i *
    // frob(e_i)_k = 0.
    std::array<std::array<Int, 3>, 3> frob;
    for (int i = 0; i < 3; ++i) {
        std::array<Int, 3> ei{Int(0), Int(0), Int(0)};
        ei[(size_t)i] = 1;
        frob[(size_t)i] = pow_mod(ei, q);
    }
    std::vector<std::array<Int, 3>> cond;
    for (int k = 0; k < 3; ++k)
        cond.push_back({frob[0][(size_t)k], frob[1][(size_t)k], frob[2][(size_t)k]});
    auto rad_ker = fp_kernel(cond, p);
    if (rad_ker.empty()) return true;  // radical is pO; O is p-maximal

    // I_p basis (B-coordinates): HNF of p*e_i plus radical kernel lifts
    std::vector<std::array<Int, 3>> rows;
    for (int i = 0; i < 3; ++i) {
        std::array<Int, 3> r{Int(0), Int(0), Int(0)};
        r[(size_t)i] = p;
        rows.push_back(r);
    }
    for (const auto& v : rad_ker) rows.push_back(v);
    auto U = hnf3(rows);

    // Ring of multipliers: O' = (1/p) J with
    // J = { y in O : y * I_p  subseteq  p * I_p }.
    RMat Uq;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) Uq[(size_t)i][(size_t)j] = Rat(U[(size_t)i][(size_t)j]);
    std::vector<std::array<Int, 3>> cond2;
    for (int j = 0; j < 3; ++j) {       // I_p basis element u_j
        // e_i * u_j in B-coordinates, for each i
        std::array<std::array<Int, 3>, 3> prod;  // prod[i] = coords of e_i*u_j
        for (int i = 0; i < 3; ++i) {
            std::array<Int, 3> w{Int(0), Int(0), Int(0)};
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    w[(size_t)l] += U[(size_t)j][(size_t)k] * S[(size_t)i][(size_t)k][(size_t)l];
            prod[(size_t)i] = w;
        }
        // coordinates of e_i*u_j on the I_p basis; condition: = 0 mod p
        for (int coord = 0; coord < 3; ++coord) {
            std::array<Int, 3> row;
            for (int i = 0; i < 3; ++i) {
                RVec c = solve_row(Uq, {Rat(prod[(size_t)i][0]), Rat(prod[(size_t)i][1]),
                                        Rat(prod[(size_t)i][2])});
                assert(is_integer(c[(size_t)coord]));
                row[(size_t)i] = md(num(c[(size_t)coord]), p);
            }
            cond2.push_back(row);
        }
    }
    auto mult_ker = fp_kernel(cond2, p);
    if (mult_ker.empty()) return true;  // O' = O

    std::vector<std::array<Int, 3>> jrows;
    for (int i = 0; i < 3; ++i) {
        std::array<Int, 3> r{Int(0), Int(0), Int(0)};
        r[(size_t)i] = p;
        jrows.push_back(r);
    }
    for (const auto& v : mult_ker) jrows.push_back(v);
    auto J = hnf3(jrows);
    // new basis rows = (1/p) * J * B  (power-basis coordinates)
    RMat NB;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            Rat acc(0);
            for (int j = 0; j < 3; ++j)
                acc += Rat(J[(size_t)i][(size_t)j]) * B[(size_t)j][(size_t)k];
            NB[(size_t)i][(size_t)k] = acc / Rat(p);
        }
    B = NB;
    return false;
}

Int compute_field_disc(const CubicField& K) {
    Rat Dq = K.poly_disc();
    assert(is_integer(Dq));
    Int D = num(Dq);
    assert(D != 0);
    RMat B{{{Rat(1), Rat(0), Rat(0)},
            {Rat(0), Rat(1), Rat(0)},
            {Rat(0), Rat(0), Rat(1)}}};
    auto fac = factorize(abs(D));
    for (const auto& [p, e] : fac) {
        if (e < 2) continue;
        if (dedekind_maximal(K.defining_poly(), p)) continue;
        while (!enlarge_at_p(K, B, p)) {
        }
    }
    Rat d = det3(B);
    Rat disc = Dq * d * d;
    assert(is_integer(disc));
    Int out = num(disc);
    Int r4 = md(out, 4);
    assert(r4 == 0 || r4 == 1);
    (void)r4;
    return out;
}

}  // namespace

const Int& CubicField::field_disc() const {
    std::lock_guard<std::mutex> lk(d_->mu);
    if (!d_->fdisc) d_->fdisc = compute_field_disc(*this);
    return *d_->fdisc;
}

Int field_discriminant(const CubicField& K) { return K.field_disc(); }

bool is_galois_cubic(const CubicField& K) {
    const Int& d = K.field_disc();
    return d > 0 && mpz_perfect_square_p(d.get_mpz_t());
}

}  // namespace ct
