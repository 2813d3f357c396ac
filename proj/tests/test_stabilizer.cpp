#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "qmsd/stabilizer.hpp"

using namespace qmsd;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(QMSD_DATA_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StabilizerCode rep3_css() {
    return css_from_classical(
        make_classical(FFMatrix::from_rows({{1, 1, 1}}), "rep3"));
}

}  // namespace

TEST_CASE("stabilizer file round-trip") {
    StabilizerCode c = parse_stabilizer(read_data("extgolay12.sc"));
    CHECK(c.n == 12);
    CHECK(c.r == 12);
    CHECK(c.k() == 0);
    CHECK_NOTHROW(validate(c));
    StabilizerCode again = parse_stabilizer(format_stabilizer(c));
    CHECK(again.h == c.h);
    CHECK(again.id == c.id);
}

TEST_CASE("parser rejects malformed stabilizer files") {
    CHECK_THROWS_AS(parse_stabilizer("garbage"), Error);
    CHECK_THROWS_AS(parse_stabilizer("STABILIZER-CODE v1\np=5 n=1 r=1 id=x\n1|0\n"),
                    Error);
    CHECK_THROWS_AS(parse_stabilizer("STABILIZER-CODE v1\np=3 n=2 r=1 id=x\n10|1\n"),
                    Error);
    CHECK_THROWS_AS(parse_stabilizer("STABILIZER-CODE v1\np=3 n=2 r=1 id=x\n1010\n"),
                    Error);
}

TEST_CASE("validate reports dependent and non-commuting rows") {
    FFMatrix dep = FFMatrix::from_rows({{1, 0, 0, 0}, {2, 0, 0, 0}});
    CHECK_THROWS_WITH_AS(validate(make_stabilizer(dep, "dep")),
                         doctest::Contains("dependent-rows"), Error);

    // X1 and Z1 do not commute
    FFMatrix nc = FFMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}});
    CHECK_THROWS_WITH_AS(validate(make_stabilizer(nc, "nc")),
                         doctest::Contains("non-commuting-rows"), Error);

    CHECK_THROWS_WITH_AS(make_stabilizer(FFMatrix::from_rows({{1, 0, 1}}), "odd"),
                         doctest::Contains("odd column count"), Error);
}

TEST_CASE("CSS construction from the repetition code") {
    StabilizerCode c = rep3_css();
    CHECK(c.n == 3);
    CHECK(c.r == 2);
    CHECK(c.k() == 1);
    CHECK(is_css(c));
    CHECK_NOTHROW(validate(c));
    // rows are the X copy and the Z copy of the generator
    CHECK(in_row_span(c.h, {1, 1, 1, 0, 0, 0}));
    CHECK(in_row_span(c.h, {0, 0, 0, 1, 1, 1}));

    CHECK_THROWS_WITH_AS(
        css_from_classical(make_classical(FFMatrix::from_rows({{1, 0, 2}}), "no")),
        doctest::Contains("not-self-orthogonal"), Error);
    CHECK_THROWS_WITH_AS(
        css_from_classical(
            make_classical(FFMatrix::from_rows({{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}}),
                           "even")),
        doctest::Contains("even-length"), Error);
}

TEST_CASE("is_css distinguishes mixed rows") {
    FFMatrix mixed = FFMatrix::from_rows({{1, 1, 1, 1, 1, 1}});
    CHECK(!is_css(make_stabilizer(mixed, "mixed")));
}

TEST_CASE("dual basis of the repetition CSS code") {
    StabilizerCode c = rep3_css();
    DualBasis d = dual_basis(c);
    REQUIRE(d.rows.n_rows == 4);  // n + k
    CHECK(d.rows.row(0) == FFVector{1, 0, 2, 0, 0, 0});
    CHECK(d.rows.row(1) == FFVector{0, 1, 2, 0, 0, 0});
    CHECK(d.rows.row(2) == FFVector{0, 0, 0, 1, 0, 2});
    CHECK(d.rows.row(3) == FFVector{0, 0, 0, 0, 1, 2});

    // every dual row commutes with every stabilizer row
    for (std::size_t i = 0; i < d.rows.n_rows; ++i)
        for (std::size_t j = 0; j < c.r; ++j)
            CHECK(symplectic_product(split_symplectic(d.rows.row(i)), c.row(j)) == 0);
    // the stabilizer itself sits inside its dual
    for (std::size_t j = 0; j < c.r; ++j)
        CHECK(in_row_span(d.rows, c.h.row(j)));
}

TEST_CASE("dual basis of a trivial code is the full space") {
    StabilizerCode empty = make_stabilizer(FFMatrix(0, 4), "free2");
    DualBasis d = dual_basis(empty);
    CHECK(d.rows.n_rows == 4);
    CHECK(ff_rank(d.rows) == 4);
}

TEST_CASE("logical operators of the repetition CSS code") {
    StabilizerCode c = rep3_css();
    LogicalPair lp = logical_operators(c);
    CHECK(join_symplectic(lp.xbar) == FFVector{1, 0, 2, 0, 0, 0});
    CHECK(join_symplectic(lp.zbar) == FFVector{0, 0, 0, 2, 0, 1});
    CHECK(symplectic_product(lp.xbar, lp.zbar) == 1);
    for (std::size_t j = 0; j < c.r; ++j) {
        CHECK(symplectic_product(lp.xbar, c.row(j)) == 0);
        CHECK(symplectic_product(lp.zbar, c.row(j)) == 0);
    }
    CHECK(!in_row_span(c.h, join_symplectic(lp.xbar)));
    CHECK(!in_row_span(c.h, join_symplectic(lp.zbar)));
}

TEST_CASE("the 24 single-site rotations") {
    const auto& rots = sl23_rotations();
    REQUIRE(rots.size() == 24);
    std::set<Rotation> seen(rots.begin(), rots.end());
    CHECK(seen.size() == 24);
    for (const auto& r : rots) {
        int det = (int(r[0]) * r[3] - int(r[1]) * r[2]) % 3;
        CHECK((det + 3) % 3 == 1);
    }
    CHECK(identity_rotation() == Rotation{1, 0, 0, 1});
    CHECK(seen.count(identity_rotation()) == 1);
}

TEST_CASE("shortening the GHZ state gives a free qutrit") {
    StabilizerCode ghz = parse_stabilizer(read_data("states/ghz2.sc"));
    StabilizerCode out = shorten(ghz, 2, identity_rotation());
    CHECK(out.n == 1);
    CHECK(out.r == 0);
    CHECK(out.k() == 1);
}

TEST_CASE("shortening a product state is degenerate") {
    StabilizerCode prod = parse_stabilizer(read_data("states/product2.sc"));
    CHECK_THROWS_WITH_AS(shorten(prod, 2, identity_rotation()),
                         doctest::Contains("degenerate-shortening"), Error);
}

TEST_CASE("shortening the extended Golay state") {
    StabilizerCode ext = parse_stabilizer(read_data("extgolay12.sc"));
    StabilizerCode out = shorten(ext, 12, identity_rotation());
    CHECK(out.n == 11);
    CHECK(out.r == 10);
    CHECK(out.k() == 1);
    CHECK_NOTHROW(validate(out));
    CHECK(out.id.find("-c12") != std::string::npos);
}

TEST_CASE("every rotation keeps the shortened code valid") {
    StabilizerCode ext = parse_stabilizer(read_data("extgolay12.sc"));
    std::size_t produced = 0;
    for (const auto& rot : sl23_rotations()) {
        StabilizerCode out;
        try {
            out = shorten(ext, 1, rot);
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("degenerate-shortening") !=
                  std::string::npos);
            continue;
        }
        ++produced;
        CHECK(out.n == 11);
        CHECK(out.k() == 1);
        CHECK_NOTHROW(validate(out));
    }
    CHECK(produced > 0);
}

TEST_CASE("shorten rejects bad coordinates") {
    StabilizerCode ghz = parse_stabilizer(read_data("states/ghz2.sc"));
    CHECK_THROWS_AS(shorten(ghz, 0, identity_rotation()), Error);
    CHECK_THROWS_AS(shorten(ghz, 3, identity_rotation()), Error);
}
