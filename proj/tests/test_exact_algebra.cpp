#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <cubictorsion/factor.hpp>
#include <cubictorsion/intfactor.hpp>
#include <cubictorsion/polyq.hpp>
#include <cubictorsion/rational.hpp>

using namespace ct;

namespace {

std::mt19937 rng(20260826);

Rat random_rat(int mag = 50) {
    std::uniform_int_distribution<int> num(-mag, mag);
    std::uniform_int_distribution<int> den(1, mag);
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

UniPoly random_poly(int max_deg, int mag = 20) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<Rat> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_rat(mag));
    if (c.back() == 0) c.back() = 1;
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("integer helpers") {
    CHECK(gcd(Int(12), Int(-18)) == 6);
    CHECK(lcm(Int(4), Int(6)) == 12);
    CHECK(valuation(Int(48), Int(2)) == 4);
    CHECK(valuation(Int(48), Int(3)) == 1);
    CHECK(pow_int(Int(3), 7) == 2187);
    CHECK(isqrt_floor(Int(99)) == 9);
    CHECK(isqrt_exact(Int(144)).value() == 12);
    CHECK(!isqrt_exact(Int(145)).has_value());
    CHECK(!isqrt_exact(Int(-4)).has_value());
    CHECK(is_square_rational(Rat(49, 81)).value() == Rat(7, 9));
    CHECK(!is_square_rational(Rat(-1)).has_value());
    CHECK(!is_square_rational(Rat(2, 3)).has_value());
}

TEST_CASE("polynomial ring basics") {
    UniPoly x{Rat(0), Rat(1)};
    UniPoly p = (x + UniPoly::constant(1)) * (x - UniPoly::constant(1));
    CHECK(p == UniPoly{Rat(-1), Rat(0), Rat(1)});
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rat(3)) == 8);
    CHECK(p.derivative() == UniPoly{Rat(0), Rat(2)});
    CHECK(UniPoly::monomial(Rat(5), 3) == UniPoly{Rat(0), Rat(0), Rat(0), Rat(5)});
    CHECK(UniPoly::zero().is_zero());
    CHECK((p - p).is_zero());
    CHECK(p.pow(2) == p * p);
}

TEST_CASE("division and gcd") {
    for (int i = 0; i < 200; ++i) {
        UniPoly a = random_poly(6), b = random_poly(4);
        if (b.is_zero()) continue;
        auto [q, r] = UniPoly::divrem(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.degree() < b.degree()));
    }
    UniPoly x{Rat(0), Rat(1)};
    UniPoly one = UniPoly::constant(1);
    UniPoly g = poly_gcd((x * x - one) * (x + UniPoly::constant(2)),
                         (x + one) * (x + UniPoly::constant(2)) * (x + UniPoly::constant(3)));
    CHECK(g == (x + one) * (x + UniPoly::constant(2)));
}

TEST_CASE("resultant and discriminant") {
    UniPoly x{Rat(0), Rat(1)};
    // res(x^2-2, x^2-3) = product of (r^2 - 3) over roots r of x^2-2
    CHECK(poly_resultant(x * x - UniPoly::constant(2),
                         x * x - UniPoly::constant(3)) == 1);
    // disc(x^3 + ax^2 + bx + c) against the closed form
    std::uniform_int_distribution<int> small(-9, 9);
    for (int i = 0; i < 100; ++i) {
        Rat a(small(rng)), b(small(rng)), c(small(rng));
        UniPoly p{c, b, a, Rat(1)};
        Rat expect = Rat(18) * a * b * c - Rat(4) * a * a * a * c +
                     a * a * b * b - Rat(4) * b * b * b - Rat(27) * c * c;
        CHECK(poly_discriminant(p) == expect);
    }
}

TEST_CASE("squarefree part and composition") {
    UniPoly x{Rat(0), Rat(1)};
    UniPoly one = UniPoly::constant(1);
    UniPoly p = (x + one) * (x + one) * (x - UniPoly::constant(2));
    UniPoly sf = squarefree_part(p).monic();
    CHECK(sf == ((x + one) * (x - UniPoly::constant(2))).monic());

    for (int i = 0; i < 50; ++i) {
        UniPoly p1 = random_poly(4, 8), q1 = random_poly(3, 8);
        Rat t = random_rat(10);
        CHECK(poly_compose(p1, q1).eval(t) == p1.eval(q1.eval(t)));
    }
}

TEST_CASE("primitivize") {
    UniPoly p{Rat(4, 3), Rat(-2, 3), Rat(2)};
    auto [c, prim] = p.primitivize();
    CHECK(prim == UniPoly{Rat(2), Rat(-1), Rat(3)});
    CHECK(c == Rat(2, 3));
    for (int i = 0; i < 50; ++i) {
        UniPoly q = random_poly(5);
        if (q.is_zero()) continue;
        auto [c2, prim2] = q.primitivize();
        CHECK(prim2 * c2 == q);
        CHECK(prim2.leading() > 0);
    }
}

TEST_CASE("integer factorization") {
    auto f = factorize(Int(-2 * 2 * 2 * 3 * 3 * 101));
    CHECK(f.size() == 3);
    CHECK(f.at(Int(2)) == 3);
    CHECK(f.at(Int(3)) == 2);
    CHECK(f.at(Int(101)) == 1);

    Int p("1000003"), q("1000033");
    auto g = factorize(p * q);
    CHECK(g.size() == 2);
    CHECK(g.at(p) == 1);
    CHECK(g.at(q) == 1);

    CHECK(is_probable_prime(Int("170141183460469231731687303715884105727")));
    CHECK(!is_probable_prime(Int(561)));  // Carmichael number
    CHECK(!is_probable_prime(Int(1)));

    auto d = divisors(Int(60));
    CHECK(d.size() == 12);
    CHECK(d.front() == 1);
    CHECK(d.back() == 60);
    CHECK(std::is_sorted(d.begin(), d.end()));
}

TEST_CASE("rational roots") {
    UniPoly x{Rat(0), Rat(1)};
    UniPoly p = (x * Rat(2) - UniPoly::constant(3)) *
                (x + UniPoly::constant(5)) * (x + UniPoly::constant(5)) *
                (x * x + UniPoly::constant(1));
    auto roots = rational_roots(p);
    std::sort(roots.begin(), roots.end());
    CHECK(roots == std::vector<Rat>{Rat(-5), Rat(-5), Rat(3, 2)});
    CHECK(rational_roots(x * x + UniPoly::constant(1)).empty());
}

TEST_CASE("small_factors round trips") {
    UniPoly x{Rat(0), Rat(1)};
    // known split: (x+1)(x^2+x+1)(x^3-2) has factors of degree 1, 2, 3
    UniPoly p = (x + UniPoly::constant(1)) *
                (x * x + x + UniPoly::constant(1)) *
                (x * x * x - UniPoly::constant(2));
    auto sf = small_factors(p, 3);
    CHECK(sf.factors.size() == 3);
    CHECK(sf.cofactor == UniPoly::constant(1));
    UniPoly prod = UniPoly::constant(1);
    for (const auto& f : sf.factors) {
        prod = prod * f;
        CHECK(f.leading() == 1);
    }
    CHECK(prod == p.monic());

    // irreducible quartic: nothing of degree <= 3, cofactor is everything
    UniPoly q = x.pow(4) + UniPoly::constant(1);
    auto sf2 = small_factors(q, 3);
    CHECK(sf2.factors.empty());
    CHECK(sf2.cofactor == q);

    // randomized round-trip: product of random monic linear/quadratic pieces
    std::uniform_int_distribution<int> coef(-6, 6);
    for (int i = 0; i < 40; ++i) {
        UniPoly prod2 = x * x * x * x + UniPoly::constant(1);
        int nlin = 1 + (i % 3);
        std::set<int> used;
        for (int k = 0; k < nlin; ++k) {
            int r = coef(rng);
            if (!used.insert(r).second) continue;
            prod2 = prod2 * (x - UniPoly::constant(r));
        }
        auto s = small_factors(prod2, 3);
        UniPoly back = s.cofactor;
        for (const auto& f : s.factors) back = back * f;
        CHECK(back == prod2.monic());
    }
}

TEST_CASE("bounded degree factors") {
    UniPoly x{Rat(0), Rat(1)};
    UniPoly sextic = (x * x * x - UniPoly::constant(2)) *
                     (x * x * x - UniPoly::constant(3));
    auto r = bounded_degree_factors(sextic, 6);
    REQUIRE(r.has_value());
    CHECK(r->factors.size() == 2);
    CHECK(r->cofactor == UniPoly::constant(1));
    UniPoly prod = UniPoly::constant(1);
    for (const auto& f : r->factors) prod = prod * f;
    CHECK(prod == sextic.monic());
}
