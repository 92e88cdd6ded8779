#include "doctest.h"

#include "jackkernel/jack.hpp"
#include "jackkernel/json_io.hpp"

using namespace jk;

namespace {
using RF = RatFunc;
}

TEST_CASE("coefficient serialization uses integer strings") {
    CHECK(coeff_json(Rational(-3, 4)).dump() == R"({"num":"-3","den":"4"})");

    RF alpha = RF::variable("alpha");
    // (alpha/2 + 1/3) renders with cleared denominators: (3 alpha + 2) / 6.
    RF f = alpha * Rational(1, 2) + RF(Rational(1, 3));
    Json j = coeff_json(f);
    CHECK(j["num"] == "3*alpha + 2");
    CHECK(j["den"] == "6");

    RF g = RF(Rational(1)) / (alpha - RF(Rational(1)));
    Json jg = coeff_json(g);
    CHECK(jg["num"] == "1");
    CHECK(jg["den"] == "alpha - 1");
}

TEST_CASE("power-sum serialization matches the contract") {
    JackTable<RF> table(alpha_field());
    Json j = pspoly_json(table.at(Partition::of({2})));
    CHECK(j["basis"] == "powersum");
    REQUIRE(j["terms"].size() == 2);
    // Canonical order puts [2] before [1,1].
    CHECK(j["terms"][0]["partition"].dump() == "[2]");
    CHECK(j["terms"][0]["coeff"]["num"] == "alpha");
    CHECK(j["terms"][0]["coeff"]["den"] == "1");
    CHECK(j["terms"][1]["partition"].dump() == "[1,1]");
    CHECK(j["terms"][1]["coeff"]["num"] == "1");

    // Empty polynomial.
    Json jz = pspoly_json(PSPoly<RF>());
    CHECK(jz.dump() == R"({"basis":"powersum","terms":[]})");

    // p_1 with rational coefficients.
    Json jp = pspoly_json(PSPoly<Rational>::monomial(Partition::of({1}), Rational(1)));
    CHECK(jp.dump() == R"({"basis":"powersum","terms":[{"partition":[1],"coeff":{"num":"1","den":"1"}}]})");
}

TEST_CASE("multivariate serialization lists exponents over the symbols") {
    StanleyRing sr = stanley_ring(1);
    MultiPolyLoc p = sr.r(1) * sr.s(1);
    Json j = multipoly_json(p);
    CHECK(j["symbols"].dump() == R"(["b","s1","r1"])");
    CHECK(j["denominator_power"] == 0);
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["exponents"].dump() == "[0,1,1]");
    CHECK(j["terms"][0]["coeff"]["num"] == "1");
}

TEST_CASE("dump is deterministic") {
    JackTable<RF> a(alpha_field()), b(alpha_field());
    for (const Partition& lam : partitions_up_to(4)) {
        CHECK(dump_json(pspoly_json(a.at(lam))) == dump_json(pspoly_json(b.at(lam))));
    }
}

TEST_CASE("suite report serialization") {
    SuiteReport rep{"demo", "demo suite", {{"one", true, ""}, {"two", false, "broke"}}};
    Json j = suite_report_json(rep);
    CHECK(j["pass"] == false);
    CHECK(j["checks"][0]["pass"] == true);
    CHECK(j["checks"][1]["detail"] == "broke");
}
