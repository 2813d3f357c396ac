#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qmsd/distill.hpp"
#include "qmsd/enumerators.hpp"

using namespace qmsd;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(QMSD_DATA_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WeightEnumerator from_map(const std::map<std::size_t, BigInt>& coeffs,
                          std::size_t n, int k, WeightEnumerator::Kind kind) {
    WeightEnumerator w;
    w.n = n;
    w.k = k;
    w.kind = kind;
    w.coeffs.assign(n + 1, BigInt(0));
    for (const auto& [d, c] : coeffs) w.coeffs[d] = c;
    return w;
}

WeightEnumerator golay_a() {
    return from_map({{0, 1}, {6, 528}, {8, 7920}, {9, 11000}, {10, 23760}, {11, 15840}},
                    11, 1, WeightEnumerator::Kind::A);
}

WeightEnumerator rep3_a() {
    return from_map({{0, 1}, {3, 8}}, 3, 1, WeightEnumerator::Kind::A);
}

WeightEnumerator enum_of(const std::string& tc_file) {
    return simple_wenum_css_fast(parse_classical(read_data(tc_file)));
}

}  // namespace

TEST_CASE("strange state parameters") {
    StrangeParams p0 = strange_params(BigRat(0));
    CHECK(p0.x == BigRat(-1, 3));
    CHECK(p0.y == BigRat(1, 6));
    StrangeParams p34 = strange_params(BigRat(3, 4));
    CHECK(p34.x == 0);
    CHECK(p34.y == BigRat(1, 8));
    StrangeParams p1 = strange_params(BigRat(1));
    CHECK(p1.x == BigRat(1, 9));
    CHECK(p1.y == BigRat(1, 9));
    for (int i = 0; i <= 8; ++i) {
        StrangeParams p = strange_params(BigRat(i, 8));
        CHECK(p.x + 8 * p.y == 1);
        CHECK(3 * p.x == BigRat(-1) + BigRat(4 * i, 3 * 8));
    }
}

TEST_CASE("the substitution point z(eps)") {
    CHECK(z_of_eps(BigRat(0)) == BigRat(-1, 2));
    CHECK(z_of_eps(BigRat(1)) == 1);
    CHECK_THROWS_WITH_AS(z_of_eps(BigRat(3, 4)), doctest::Contains("pole"), Error);
}

TEST_CASE("the Golay distillation map in lowest form") {
    WeightEnumerator a = golay_a();
    WeightEnumerator b = macwilliams(a, 11, 1);
    RationalFunction map = distillation_map(a, b, 11);

    ZPoly num{BigInt(0),      BigInt(0),      BigInt(0),      BigInt(13365),
              BigInt(-71280), BigInt(181764), BigInt(-283536), BigInt(292710),
              BigInt(-203280), BigInt(92180), BigInt(-24816), BigInt(3021)};
    ZPoly den{BigInt(4374),   BigInt(-32076), BigInt(106920), BigInt(-204930),
              BigInt(243540), BigInt(-172656), BigInt(47256), BigInt(37620),
              BigInt(-50490), BigInt(27500),  BigInt(-7920),  BigInt(990)};
    CHECK(map.num == num);
    CHECK(map.den == den);

    // the map agrees with direct evaluation of 3(3A+B)/4B at z(eps)
    for (const BigRat& eps : {BigRat(1, 10), BigRat(1, 2), BigRat(2, 3)}) {
        BigRat z = z_of_eps(eps);
        BigRat direct = 3 * (3 * a.eval(z) + b.eval(z)) / (4 * b.eval(z));
        CHECK(rf_eval(map, eps) == direct);
    }
    // eps = 0 is a fixed point at third order
    CHECK(rf_eval(map, BigRat(0)) == 0);
}

TEST_CASE("exact distillation conditions") {
    WeightEnumerator a = golay_a();
    WeightEnumerator b = macwilliams(a, 11, 1);
    CHECK(a.eval(BigRat(-1, 2)) == BigRat(2187, 64));
    CHECK(b.eval(BigRat(-1, 2)) == BigRat(-6561, 64));

    ConditionFlags f = check_conditions(a, b, 11);
    CHECK(f.b_nonzero);
    CHECK(f.sum_zero);
    CHECK(f.deriv1_zero);
    CHECK(f.deriv2_zero);

    WeightEnumerator ra = rep3_a();
    WeightEnumerator rb = macwilliams(ra, 3, 1);
    ConditionFlags rf = check_conditions(ra, rb, 3);
    CHECK(!rf.b_nonzero);  // B(-1/2) = 0
}

TEST_CASE("noise exponent") {
    WeightEnumerator a = golay_a();
    WeightEnumerator b = macwilliams(a, 11, 1);
    auto ne = noise_exponent(distillation_map(a, b, 11));
    REQUIRE(ne.has_value());
    CHECK(ne->delta == 3);
    CHECK(ne->leading == BigRat(55, 18));

    WeightEnumerator a23 = enum_of("code23.tc");
    WeightEnumerator b23 = macwilliams(a23, 23, 1);
    auto ne23 = noise_exponent(distillation_map(a23, b23, 23));
    REQUIRE(ne23.has_value());
    CHECK(ne23->delta == 3);
    CHECK(ne23->leading == BigRat(73, 18));

    WeightEnumerator a29 = parse_wenum(read_data("a29.wenum"));
    WeightEnumerator b29 = macwilliams(a29, 29, 1);
    auto ne29 = noise_exponent(distillation_map(a29, b29, 29));
    REQUIRE(ne29.has_value());
    CHECK(ne29->delta == 1);
    CHECK(ne29->leading == BigRat(1937, 224));
}

TEST_CASE("thresholds") {
    WeightEnumerator a = golay_a();
    WeightEnumerator b = macwilliams(a, 11, 1);
    double t = threshold(distillation_map(a, b, 11));
    CHECK(std::abs(t - 0.3871543464717956) < 1e-9);

    // the threshold is the crossing point: eps' = eps there
    RationalFunction map = distillation_map(a, b, 11);
    BigRat tr(3871543464717956LL, 10000000000000000LL);
    BigRat gap = rf_eval(map, tr) - tr;
    CHECK(boost::multiprecision::abs(gap) < BigRat(1, 1000000000));

    // its image point z(t) solves 11 z^3 + 12 z^2 + 3 z + 1 = 0
    BigRat zt = z_of_eps(tr);
    BigRat res = 11 * zt * zt * zt + 12 * zt * zt + 3 * zt + 1;
    CHECK(boost::multiprecision::abs(res) < BigRat(1, 1000000000));

    WeightEnumerator a23 = enum_of("code23.tc");
    WeightEnumerator b23 = macwilliams(a23, 23, 1);
    CHECK(std::abs(threshold(distillation_map(a23, b23, 23)) -
                   0.31801645632353226) < 1e-9);

    // expansion near zero means no threshold at all
    WeightEnumerator a29 = parse_wenum(read_data("a29.wenum"));
    WeightEnumerator b29 = macwilliams(a29, 29, 1);
    CHECK(threshold(distillation_map(a29, b29, 29)) == 0.0);

    WeightEnumerator ra = rep3_a();
    WeightEnumerator rb = macwilliams(ra, 3, 1);
    CHECK(threshold(distillation_map(ra, rb, 3)) == 0.0);
}

TEST_CASE("the reduced repetition map") {
    WeightEnumerator ra = rep3_a();
    WeightEnumerator rb = macwilliams(ra, 3, 1);
    RationalFunction map = distillation_map(ra, rb, 3);
    CHECK(map.num == ZPoly{BigInt(9), BigInt(-12), BigInt(5)});
    CHECK(map.den == ZPoly{BigInt(6), BigInt(-6), BigInt(2)});
    CHECK(rf_eval(map, BigRat(0)) == BigRat(3, 2));
}

TEST_CASE("success probability") {
    WeightEnumerator a = golay_a();
    WeightEnumerator b = macwilliams(a, 11, 1);
    CHECK(success_probability(b, 11, 1, BigRat(0)) == BigRat(1, 1728));
    BigInt p10 = 1;
    for (int i = 0; i < 10; ++i) p10 *= 3;
    CHECK(success_probability(b, 11, 1, BigRat(1)) == BigRat(1, p10));

    // nu(0) = (-1/3)^n B(-1/2)
    BigRat nu0 = success_probability(b, 11, 1, BigRat(0));
    BigRat lhs = b.eval(BigRat(-1, 2));
    BigRat scale = 1;
    for (int i = 0; i < 11; ++i) scale *= BigRat(-1, 3);
    CHECK(nu0 == scale * lhs);

    WeightEnumerator b23 = macwilliams(enum_of("code23.tc"), 23, 1);
    CHECK(success_probability(b23, 23, 1, BigRat(0)) == BigRat(1, 35831808));

    // out-of-range nu triggers the enumerator consistency error
    WeightEnumerator junk = from_map({{0, 100}}, 1, 1, WeightEnumerator::Kind::B);
    CHECK_THROWS_WITH_AS(success_probability(junk, 1, 1, BigRat(0)),
                         doctest::Contains("inconsistent-enumerator"), Error);
}

TEST_CASE("output state matches the reduced map") {
    WeightEnumerator a = golay_a();
    WeightEnumerator b = macwilliams(a, 11, 1);
    RationalFunction map = distillation_map(a, b, 11);
    for (const BigRat& eps : {BigRat(0), BigRat(1, 10), BigRat(1, 3), BigRat(1, 2)}) {
        OutputState out = output_state(a, b, eps);
        CHECK(out.epsilon == 3 * (out.x + 2 * out.y));
        CHECK(out.x + 8 * out.y == 1);
        CHECK(out.epsilon == rf_eval(map, eps));
    }
    CHECK(output_state(a, b, BigRat(0)).epsilon == 0);

    // rep3 has vanishing success probability at eps = 0
    WeightEnumerator ra = rep3_a();
    WeightEnumerator rb = macwilliams(ra, 3, 1);
    CHECK_THROWS_WITH_AS(output_state(ra, rb, BigRat(0)),
                         doctest::Contains("zero-success-probability"), Error);
}

TEST_CASE("full screening profiles") {
    WeightEnumerator a = golay_a();
    WeightEnumerator b = macwilliams(a, 11, 1);
    DistillationProfile p = screen_enumerators(a, b, 11, 1);
    CHECK(p.b_at_minus_half == BigRat(-6561, 64));
    CHECK(p.distills);
    CHECK(p.classification == "order-3");
    REQUIRE(p.delta.has_value());
    CHECK(*p.delta == 3);
    CHECK(p.leading == BigRat(55, 18));
    CHECK(std::abs(p.threshold_value - 0.3871543464717956) < 1e-9);
    CHECK(p.success_at_zero == BigRat(1, 1728));

    WeightEnumerator ra = rep3_a();
    DistillationProfile pr = screen_enumerators(ra, macwilliams(ra, 3, 1), 3, 1);
    CHECK(!pr.distills);
    CHECK(pr.classification == "none");
    CHECK(pr.b_at_minus_half == 0);
    REQUIRE(pr.delta.has_value());
    CHECK(*pr.delta == 0);  // the map does not even fix eps = 0
    CHECK(pr.leading == BigRat(3, 2));

    WeightEnumerator a29 = parse_wenum(read_data("a29.wenum"));
    DistillationProfile p29 = screen_enumerators(a29, macwilliams(a29, 29, 1), 29, 1);
    CHECK(!p29.distills);  // linear term with coefficient > 1 expands noise
    CHECK(p29.classification == "none");
    CHECK(p29.threshold_value == 0.0);

    WeightEnumerator m13 = enum_of("m13.tc");
    WeightEnumerator bm13 = macwilliams(m13, 13, 1);
    CHECK(distance_from_enums(m13, bm13) == 4);
    DistillationProfile pm = screen_enumerators(m13, bm13, 13, 1);
    CHECK(!pm.distills);
    CHECK(pm.b_at_minus_half == 0);
    CHECK(pm.classification == "none");
    CHECK(rf_eval(pm.map, BigRat(0)) == BigRat(3, 2));
}

TEST_CASE("profile JSON serialization") {
    WeightEnumerator a = golay_a();
    DistillationProfile p = screen_enumerators(a, macwilliams(a, 11, 1), 11, 1);
    nlohmann::json j = nlohmann::json::parse(profile_to_json(p, "golay11", 11, 1));
    CHECK(j["id"] == "golay11");
    CHECK(j["n"] == 11);
    CHECK(j["k"] == 1);
    CHECK(j["distills"] == true);
    CHECK(j["classification"] == "order-3");
    CHECK(j["b_at_minus_half"]["num"] == "-6561");
    CHECK(j["b_at_minus_half"]["den"] == "64");
    CHECK(j["delta"] == 3);
    CHECK(j["leading"]["num"] == "55");
    CHECK(j["leading"]["den"] == "18");
    CHECK(j["threshold"] == "0.387154346");
    CHECK(j["success_at_zero"]["num"] == "1");
    CHECK(j["success_at_zero"]["den"] == "1728");
    CHECK(j["conditions"]["b_nonzero"] == true);

    // nullable delta serializes as JSON null
    DistillationProfile blank;
    blank.classification = "none";
    nlohmann::json jr = nlohmann::json::parse(profile_to_json(blank, "blank", 5, 1));
    CHECK(jr["delta"].is_null());
    CHECK(jr["distills"] == false);
}

TEST_CASE("threshold formatting") {
    CHECK(format_threshold(0.75) == "0.750000000");
    CHECK(format_threshold(0.0) == "0.000000000");
    CHECK(format_threshold(0.3871543464717956) == "0.387154346");
}

TEST_CASE("rational helpers") {
    CHECK(rat_num(BigRat(-6561, 64)) == "-6561");
    CHECK(rat_den(BigRat(-6561, 64)) == "64");
    CHECK(rat_num(BigRat(0)) == "0");
    CHECK(rat_den(BigRat(0)) == "1");
}
