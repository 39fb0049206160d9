#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <vector>

#include <json.hpp>

#include <cubictorsion/numberfield.hpp>
#include <cubictorsion/polyq.hpp>

using namespace ct;
using json = nlohmann::json;

namespace {

std::mt19937 rng(777);

UniPoly cubic(long c0, long c1, long c2) {
    return UniPoly{Rat(c0), Rat(c1), Rat(c2), Rat(1)};
}

NFElement random_element(const CubicField& K) {
    std::uniform_int_distribution<int> d(-12, 12);
    Rat mid(d(rng), 1 + (d(rng) & 3));
    mid.canonicalize();
    return K.element(Rat(d(rng)), mid, Rat(d(rng)));
}

}  // namespace

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(CubicField(cubic(-1, 0, 0)), std::invalid_argument);   // x^3 - 1
    CHECK_THROWS_AS(CubicField(cubic(0, 0, 0)), std::invalid_argument);    // x^3
    CHECK_THROWS_AS(CubicField(UniPoly{Rat(1), Rat(1)}), std::invalid_argument);
    // non-monic / rational input goes through from_cubic
    UniPoly p{Rat(1, 2), Rat(0), Rat(0), Rat(3)};  // 3x^3 + 1/2
    CubicField K = CubicField::from_cubic(p);
    CHECK(K.defining_poly().leading() == 1);
    CHECK(!roots_in_field(p, K).empty());
}

TEST_CASE("field discriminants") {
    // classical values: pure cubics via Dedekind's criterion, cyclic fields
    // of conductor 7 and 9, and the index-2 textbook example x^3-x^2-2x-8
    struct Row { long c0, c1, c2; const char* disc; };
    const Row rows[] = {
        {-2, 0, 0, "-108"},   // x^3 - 2
        {-7, 0, 0, "-1323"},  // x^3 - 7
        {-19, 0, 0, "-1083"}, // x^3 - 19
        {-1, -1, 0, "-23"},
        {-1, 1, 0, "-31"},
        {-8, -2, -1, "-503"},
        {-10, -3, 0, "-648"},
        {-1, -3, 0, "81"},    // maximal real subfield of Q(zeta_9)
        {-1, -2, 1, "49"},    // maximal real subfield of Q(zeta_7)
        {1, 1, -1, "-44"},
    };
    for (const auto& r : rows) {
        CubicField K(cubic(r.c0, r.c1, r.c2));
        CHECK(K.field_disc() == Int(r.disc));
        CHECK(field_discriminant(K) == Int(r.disc));
    }
}

TEST_CASE("field axioms") {
    CubicField K(cubic(-1, -1, 0));  // x^3 - x - 1
    for (int i = 0; i < 200; ++i) {
        NFElement a = random_element(K), b = random_element(K), c = random_element(K);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + K.zero() == a);
        CHECK(a * K.one() == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) {
            CHECK(a * a.inv() == K.one());
            CHECK(a / a == K.one());
        }
    }
    CHECK_THROWS_AS(K.zero().inv(), std::invalid_argument);
}

TEST_CASE("minimal polynomials") {
    CubicField K(cubic(-2, 0, 0));  // Q(cbrt 2)
    CHECK(min_poly(K.theta()) == cubic(-2, 0, 0));
    CHECK(min_poly(K.theta() * K.theta()) == cubic(-4, 0, 0));
    CHECK(min_poly(K.element(Rat(5, 3))) == UniPoly{Rat(-5, 3), Rat(1)});
    for (int i = 0; i < 60; ++i) {
        NFElement a = random_element(K);
        UniPoly m = min_poly(a);
        CHECK((m.degree() == 1 || m.degree() == 3));
        CHECK(m.leading() == 1);
        CHECK(eval_at(m, a).is_zero());
    }
}

TEST_CASE("roots in field") {
    CubicField K2(cubic(-2, 0, 0));
    auto r = roots_in_field(cubic(-2, 0, 0), K2);
    REQUIRE(r.size() == 1);  // Q(cbrt 2) is not Galois
    CHECK(r[0] == K2.theta());

    CubicField K9(cubic(-1, -3, 0));  // cyclic
    auto r9 = roots_in_field(cubic(-1, -3, 0), K9);
    CHECK(r9.size() == 3);
    for (const auto& x : r9) CHECK(eval_at(cubic(-1, -3, 0), x).is_zero());

    CHECK(roots_in_field(UniPoly{Rat(-2), Rat(0), Rat(1)}, K2).empty());
    auto lin = roots_in_field(UniPoly{Rat(-5), Rat(1)}, K2);
    REQUIRE(lin.size() == 1);
    CHECK(lin[0] == K2.element(Rat(5)));
}

TEST_CASE("square roots") {
    CubicField K(cubic(-2, 0, 0));
    NFElement t = K.theta();
    auto s = sqrt_in_field((t + K.one()) * (t + K.one()));
    REQUIRE(s.has_value());
    CHECK(*s * *s == (t + K.one()) * (t + K.one()));
    CHECK(!sqrt_in_field(t).has_value());        // cbrt(2) is not a square
    CHECK(!sqrt_in_field(-K.one()).has_value()); // field is real
    for (int i = 0; i < 40; ++i) {
        NFElement a = random_element(K);
        auto sq = sqrt_in_field(a * a);
        REQUIRE(sq.has_value());
        CHECK(*sq * *sq == a * a);
    }
}

TEST_CASE("isomorphism and Galois predicate") {
    CubicField A(cubic(-2, 0, 0)), B(cubic(-16, 0, 0)), C(cubic(-3, 0, 0));
    CHECK(is_isomorphic(A, B));  // cbrt 16 = 2 cbrt 2
    CHECK(is_isomorphic(B, A));
    CHECK(!is_isomorphic(A, C));
    CHECK(!is_galois_cubic(A));
    CHECK(is_galois_cubic(CubicField(cubic(-1, -3, 0))));

    // equivalence-relation sanity on the catalogue of scenario cubics
    std::ifstream in(CT_DATA_DIR "/fixtures/table1.json");
    REQUIRE(in.good());
    json rows = json::parse(in);
    std::vector<CubicField> fields;
    for (const auto& row : rows)
        for (const auto& c : row.at("cubics"))
            fields.emplace_back(UniPoly{Rat(Int(c[0].dump())), Rat(Int(c[1].dump())),
                                        Rat(Int(c[2].dump())), Rat(1)});
    REQUIRE(fields.size() >= 15);
    for (size_t i = 0; i < fields.size(); ++i) {
        CHECK(is_isomorphic(fields[i], fields[i]));
        for (size_t j = i + 1; j < fields.size(); ++j) {
            bool ij = is_isomorphic(fields[i], fields[j]);
            CHECK(ij == is_isomorphic(fields[j], fields[i]));
            if (ij) CHECK(fields[i].field_disc() == fields[j].field_disc());
        }
    }
}
