#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>

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

ClassicalTernaryCode data_classical(const std::string& name) {
    return parse_classical(read_data(name));
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

const std::map<std::size_t, BigInt> kGolayA{
    {0, 1}, {6, 528}, {8, 7920}, {9, 11000}, {10, 23760}, {11, 15840}};
const std::map<std::size_t, BigInt> kGolayB{
    {0, 1},     {5, 528},    {6, 528},    {7, 15840},
    {8, 40920}, {9, 129800}, {10, 198000}, {11, 145824}};

void check_coeffs(const WeightEnumerator& w,
                  const std::map<std::size_t, BigInt>& expect) {
    REQUIRE(w.coeffs.size() == w.n + 1);
    for (std::size_t d = 0; d <= w.n; ++d) {
        auto it = expect.find(d);
        BigInt want = it == expect.end() ? BigInt(0) : it->second;
        CHECK(w.coeffs[d] == want);
    }
}

}  // namespace

TEST_CASE("repetition code enumerator, both algorithms") {
    ClassicalTernaryCode rep3 = data_classical("rep3.tc");
    StabilizerCode css = css_from_classical(rep3);

    WeightEnumerator naive = simple_wenum_naive(css);
    CHECK(naive.n == 3);
    CHECK(naive.k == 1);
    CHECK(naive.kind == WeightEnumerator::Kind::A);
    check_coeffs(naive, {{0, 1}, {3, 8}});

    WeightEnumerator fast = simple_wenum_css_fast(rep3);
    CHECK(fast.n == naive.n);
    CHECK(fast.k == naive.k);
    CHECK(fast.same_coeffs(naive));
}

TEST_CASE("Golay code enumerator matches and cross-validates") {
    ClassicalTernaryCode golay = data_classical("golay11_dual.tc");
    WeightEnumerator fast = simple_wenum_css_fast(golay);
    CHECK(fast.n == 11);
    CHECK(fast.k == 1);
    check_coeffs(fast, kGolayA);
    CHECK(fast.total() == BigInt(59049));  // 3^r with r = 10

    // independent algorithm over the same group: odometer walk of 3^10 elements
    WeightEnumerator naive = simple_wenum_naive(css_from_classical(golay));
    CHECK(naive.same_coeffs(fast));
    CHECK(naive.k == fast.k);
}

TEST_CASE("the 23-qutrit code, fast path only") {
    ClassicalTernaryCode c = data_classical("code23.tc");
    WeightEnumerator a = simple_wenum_css_fast(c);
    CHECK(a.n == 23);
    CHECK(a.k == 1);
    CHECK(a.coeffs[0] == 1);
    for (std::size_t d : {1u, 2u, 3u, 4u, 5u, 7u}) CHECK(a.coeffs[d] == 0);
    CHECK(a.coeffs[6] == 720);
    CHECK(a.coeffs[8] == 4608);
    CHECK(a.coeffs[23] == BigInt("2079023616"));
    CHECK(a.total() == BigInt("31381059609"));  // 3^22
}

TEST_CASE("fast path honors the memory cap") {
    ClassicalTernaryCode c = data_classical("code23.tc");
    CHECK_THROWS_WITH_AS(simple_wenum_css_fast(c, 1 << 20),
                         doctest::Contains("resource-limit"), ResourceLimit);
}

TEST_CASE("fast path requires self-orthogonality") {
    ClassicalTernaryCode bad = make_classical(FFMatrix::from_rows({{1, 0, 2}}), "bad");
    CHECK_THROWS_WITH_AS(simple_wenum_css_fast(bad),
                         doctest::Contains("not-self-orthogonal"), Error);
}

TEST_CASE("MacWilliams transform reproduces the Golay dual enumerator") {
    WeightEnumerator a = from_map(kGolayA, 11, 1, WeightEnumerator::Kind::A);
    WeightEnumerator b = macwilliams(a, 11, 1);
    CHECK(b.kind == WeightEnumerator::Kind::B);
    check_coeffs(b, kGolayB);
    SUBCASE("involution with k negated returns A") {
        WeightEnumerator back = macwilliams(b, 11, -1);
        CHECK(back.same_coeffs(a));
    }
}

TEST_CASE("MacWilliams on one qutrit") {
    WeightEnumerator a = from_map({{0, 1}}, 1, 1, WeightEnumerator::Kind::A);
    WeightEnumerator b = macwilliams(a, 1, 1);
    check_coeffs(b, {{0, 1}, {1, 8}});
}

TEST_CASE("MacWilliams fixes self-dual enumerators") {
    // [[n,0]] states have B = A; the GHZ pair is one
    StabilizerCode ghz = parse_stabilizer(read_data("states/ghz2.sc"));
    WeightEnumerator a = simple_wenum_naive(ghz);
    WeightEnumerator b = macwilliams(a, a.n, a.k);
    CHECK(b.same_coeffs(a));
    CHECK(!distance_from_enums(a, b).has_value());
}

TEST_CASE("MacWilliams rejects non-stabilizer enumerators") {
    WeightEnumerator junk = from_map({{0, 1}, {1, 1}}, 2, 1, WeightEnumerator::Kind::A);
    CHECK_THROWS_WITH_AS(macwilliams(junk, 2, 1),
                         doctest::Contains("inexact-division"), Error);
}

TEST_CASE("distance from enumerator pairs") {
    WeightEnumerator a = from_map(kGolayA, 11, 1, WeightEnumerator::Kind::A);
    WeightEnumerator b = from_map(kGolayB, 11, 1, WeightEnumerator::Kind::B);
    auto d = distance_from_enums(a, b);
    REQUIRE(d.has_value());
    CHECK(*d == 5);

    // rep3: B - A starts at degree 2
    WeightEnumerator ra = from_map({{0, 1}, {3, 8}}, 3, 1, WeightEnumerator::Kind::A);
    WeightEnumerator rb = macwilliams(ra, 3, 1);
    check_coeffs(rb, {{0, 1}, {2, 24}, {3, 56}});
    CHECK(distance_from_enums(ra, rb) == 2);

    // a_w > b_w somewhere means the pair is inconsistent
    WeightEnumerator small = from_map({{0, 1}, {2, 3}}, 3, 1, WeightEnumerator::Kind::B);
    CHECK_THROWS_WITH_AS(distance_from_enums(ra, small),
                         doctest::Contains("inconsistent-pair"), Error);
}

TEST_CASE("complete enumerator of tiny groups") {
    // single qutrit stabilized by Z: terms y00, y01, y02
    StabilizerCode zstab =
        make_stabilizer(FFMatrix::from_rows({{0, 1}}), "zstab");
    CompleteEnumerator c = complete_wenum(zstab);
    CHECK(c.n == 1);
    REQUIRE(c.terms.size() == 3);
    for (const auto& [expo, coeff] : c.terms) CHECK(coeff == 1);
    std::array<std::uint8_t, 9> y00{}, y01{}, y02{};
    y00[0] = 1;
    y01[1] = 1;
    y02[2] = 1;
    CHECK(c.terms.count(y00) == 1);
    CHECK(c.terms.count(y01) == 1);
    CHECK(c.terms.count(y02) == 1);

    // XXX on three qutrits: y00^3 + y10^3 + y20^3
    StabilizerCode xxx =
        make_stabilizer(FFMatrix::from_rows({{1, 1, 1, 0, 0, 0}}), "xxx");
    CompleteEnumerator cx = complete_wenum(xxx);
    REQUIRE(cx.terms.size() == 3);
    std::array<std::uint8_t, 9> y10cubed{};
    y10cubed[3] = 3;  // index 3u+v with (u,v) = (1,0)
    REQUIRE(cx.terms.count(y10cubed) == 1);
    CHECK(cx.terms.at(y10cubed) == 1);
}

TEST_CASE("complete enumerator specializes to the simple one") {
    for (const char* name : {"rep3.tc", "small/so5_1.tc"}) {
        StabilizerCode css = css_from_classical(data_classical(name));
        CompleteEnumerator c = complete_wenum(css);
        WeightEnumerator spec = specialize_complete(c, css);
        WeightEnumerator naive = simple_wenum_naive(css);
        CHECK(spec.same_coeffs(naive));
    }
}

TEST_CASE("complete enumerator budget") {
    StabilizerCode big = css_from_classical(data_classical("code23.tc"));
    CHECK_THROWS_WITH_AS(complete_wenum(big), doctest::Contains("resource-limit"),
                         ResourceLimit);
}

TEST_CASE("coset enumerator of the repetition logical") {
    StabilizerCode css = css_from_classical(data_classical("rep3.tc"));
    SymplecticVector logical{{1, 2, 0}, {0, 0, 0}};
    WeightEnumerator w = coset_wenum(css, logical);
    CHECK(w.kind == WeightEnumerator::Kind::Coset);
    check_coeffs(w, {{2, 3}, {3, 6}});
}

TEST_CASE("the nine cosets partition the dual enumerator") {
    StabilizerCode css = css_from_classical(data_classical("rep3.tc"));
    LogicalPair lp = logical_operators(css);
    WeightEnumerator a = simple_wenum_naive(css);
    WeightEnumerator b = macwilliams(a, a.n, a.k);

    ZPoly sum(a.n + 1, BigInt(0));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            SymplecticVector logical{FFVector(a.n, 0), FFVector(a.n, 0)};
            for (std::size_t t = 0; t < a.n; ++t) {
                logical.u[t] = ff_add(ff_mul(FFElement(i), lp.xbar.u[t]),
                                      ff_mul(FFElement(j), lp.zbar.u[t]));
                logical.v[t] = ff_add(ff_mul(FFElement(i), lp.xbar.v[t]),
                                      ff_mul(FFElement(j), lp.zbar.v[t]));
            }
            WeightEnumerator w = coset_wenum(css, logical);
            for (std::size_t d = 0; d < w.coeffs.size(); ++d) sum[d] += w.coeffs[d];
        }
    }
    CHECK(sum == b.coeffs);
}

TEST_CASE("coset enumerator rejects anticommuting vectors") {
    StabilizerCode css = css_from_classical(data_classical("rep3.tc"));
    SymplecticVector bad{{1, 0, 0}, {0, 0, 0}};  // anticommutes with the Z row
    CHECK_THROWS_WITH_AS(coset_wenum(css, bad),
                         doctest::Contains("logical-not-in-dual"), Error);
}

TEST_CASE("WENUM text format round-trips") {
    WeightEnumerator a = from_map(kGolayA, 11, 1, WeightEnumerator::Kind::A);
    WeightEnumerator parsed = parse_wenum(format_wenum(a));
    CHECK(parsed.n == a.n);
    CHECK(parsed.k == a.k);
    CHECK(parsed.kind == a.kind);
    CHECK(parsed.same_coeffs(a));

    WeightEnumerator file = parse_wenum(read_data("a29.wenum"));
    CHECK(file.n == 29);
    CHECK(file.kind == WeightEnumerator::Kind::A);
}

TEST_CASE("WENUM parser rejects malformed files") {
    CHECK_THROWS_AS(parse_wenum("nope"), Error);
    CHECK_THROWS_AS(parse_wenum("WENUM v1\nn=2 k=1 kind=A\n3 1\n"), Error);
    CHECK_THROWS_AS(parse_wenum("WENUM v1\nn=2 k=1 kind=A\n1 5\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_wenum("WENUM v1\nn=2 k=1 kind=A\n0 1 junk\n"), Error);
    CHECK_THROWS_AS(parse_wenum("WENUM v1\nn=2 k=1 kind=D\n0 1\n"), Error);
}

TEST_CASE("complete enumerator text format") {
    StabilizerCode zstab = make_stabilizer(FFMatrix::from_rows({{0, 1}}), "zstab");
    std::string text = format_complete(complete_wenum(zstab), zstab.r);
    CHECK(text.find("CWENUM v1\n") == 0);
    CHECK(text.find("n=1 r=1 terms=3") != std::string::npos);
    CHECK(text.find("1 y00") != std::string::npos);
    CHECK(text.find("1 y01") != std::string::npos);
    CHECK(text.find("1 y02") != std::string::npos);

    StabilizerCode xxx =
        make_stabilizer(FFMatrix::from_rows({{1, 1, 1, 0, 0, 0}}), "xxx");
    std::string cube = format_complete(complete_wenum(xxx), xxx.r);
    CHECK(cube.find("1 y10^3") != std::string::npos);
    CHECK(cube.find("1 y20^3") != std::string::npos);
    CHECK(cube.find("1 y00^3") != std::string::npos);
}
