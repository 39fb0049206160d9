#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include <cubictorsion/auxsearch.hpp>
#include <cubictorsion/dataset.hpp>

using namespace ct;

TEST_CASE("ingest happy path") {
    std::istringstream in(
        "label,a1,a2,a3,a4,a6\n"
        "11a1,0,-1,1,-10,-20\n"
        "\n"
        "# a comment\n"
        "14a4,1,0,1,-1,0\n");
    auto res = ingest(in);
    CHECK(res.ok());
    REQUIRE(res.records.size() == 2);
    CHECK(res.records[0].label == "11a1");
    CHECK(res.records[0].a == std::array<Int, 5>{Int(0), Int(-1), Int(1), Int(-10), Int(-20)});
    CHECK(res.records[1].label == "14a4");
    CHECK(res.records[1].curve().label == "14a4");
}

TEST_CASE("ingest error reporting") {
    std::istringstream in(
        "label,a1,a2,a3,a4,a6\n"
        "11a1,0,-1,1,-10,-20\n"
        "short,1,2\n"
        "bad,0,x,1,0,0\n"
        "11a1,0,0,0,1,0\n"
        "sing,0,0,0,0,0\n"
        ",0,0,0,1,0\n");
    auto res = ingest(in);
    CHECK(res.records.size() == 1);
    REQUIRE(res.errors.size() == 5);
    CHECK(res.errors[0].line == 3);  // wrong arity
    CHECK(res.errors[1].line == 4);  // non-integer coefficient
    CHECK(res.errors[2].line == 5);  // duplicate label
    CHECK(res.errors[3].line == 6);  // singular curve
    CHECK(res.errors[4].line == 7);  // empty label
}

TEST_CASE("round trip through emit_csv") {
    auto res = ingest(CT_DATA_DIR "/table1_curves.csv");
    REQUIRE(res.ok());
    CHECK(res.records.size() == 26);
    std::istringstream back(emit_csv(res.records));
    auto res2 = ingest(back);
    REQUIRE(res2.ok());
    REQUIRE(res2.records.size() == res.records.size());
    for (size_t i = 0; i < res.records.size(); ++i) {
        CHECK(res2.records[i].label == res.records[i].label);
        CHECK(res2.records[i].a == res.records[i].a);
    }
}

TEST_CASE("bulk dataset is clean") {
    auto res = ingest(CT_DATA_DIR "/curves_conductor_1000.csv");
    CHECK(res.ok());
    CHECK(res.records.size() == 1945);
    CHECK_THROWS_AS(ingest(CT_DATA_DIR "/no_such_file.csv"), std::runtime_error);
}

TEST_CASE("auxiliary curve searches at small height") {
    CHECK(aux_curves().size() == 6);
    CHECK_THROWS_AS(aux_curve_search(AuxCurve::YY_X3_minus_27, 0), std::invalid_argument);

    using P = std::pair<Rat, Rat>;
    auto expect_only = [](AuxCurve id, const P& p) {
        auto pts = aux_curve_search(id, 5000);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0] == p);
    };
    expect_only(AuxCurve::YY_X3_minus_6X2_plus_13X, P{Rat(0), Rat(0)});
    expect_only(AuxCurve::YY_X3_plus_6X2_plus_13X, P{Rat(0), Rat(0)});
    expect_only(AuxCurve::YY_6X_sextic, P{Rat(0), Rat(0)});
    expect_only(AuxCurve::YY_minus_6X_sextic, P{Rat(0), Rat(0)});
    expect_only(AuxCurve::YY_X3_minus_27, P{Rat(3), Rat(0)});
    expect_only(AuxCurve::YY_X3_plus_27, P{Rat(-3), Rat(0)});

    for (AuxCurve id : aux_curves()) CHECK(!aux_curve_name(id).empty());
}
