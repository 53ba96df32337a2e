#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "testutil.hpp"

using namespace skewsign;
using testutil::Rng;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec G3 = FieldSpec::gf(3);
const FieldSpec G5 = FieldSpec::gf(5);

AnyMatrix parse(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

} // namespace

TEST_CASE("field designators") {
    CHECK(parse_field_designator("gf 5") == G5);
    CHECK(parse_field_designator("q") == Q);
    CHECK(parse_field_designator("  gf   31  ") == FieldSpec::gf(31));
    CHECK_THROWS_AS(parse_field_designator("gf 6"), ParseError);
    CHECK_THROWS_AS(parse_field_designator("gf"), ParseError);
    CHECK_THROWS_AS(parse_field_designator("r"), ParseError);
    CHECK_THROWS_AS(parse_field_designator("q 5"), ParseError);
}

TEST_CASE("reading the documented format") {
    auto m = parse("# comment lines start with '#'\n"
                   "field gf 5        # or: field q\n"
                   "size 4\n"
                   "0 -1 -1 0\n"
                   "1 0 0 -1\n"
                   "1 0 0 2\n"
                   "0 1 2 0\n");
    REQUIRE(field_of(m) == G5);
    const auto& mat = std::get<Matrix<Fp>>(m);
    CHECK(mat(0, 1).residue() == 4);
    CHECK(mat(2, 3).residue() == 2);
    CHECK(rows_of(m) == 4);
}

TEST_CASE("entries reduce into the prime field") {
    auto m = parse("field gf 3\nsize 1\n3\n");
    CHECK(std::get<Matrix<Fp>>(m)(0, 0).residue() == 0);
    auto m2 = parse("field gf 3\nsize 1\n-4\n");
    CHECK(std::get<Matrix<Fp>>(m2)(0, 0).residue() == 2);
    // way beyond 64 bits still reduces exactly: that literal is 1 mod 7
    auto m3 = parse("field gf 7\nsize 1\n123456789012345678901234567890123456789\n");
    CHECK(std::get<Matrix<Fp>>(m3)(0, 0).residue() == 1);
}

TEST_CASE("fractions only parse over the rationals") {
    CHECK_THROWS_AS(parse("field gf 5\nsize 1\n1/2\n"), ParseError);
    auto m = parse("field q\nsize 2\n0 1/2\n-1/2 0\n");
    CHECK(std::get<Matrix<Rational>>(m)(0, 1) == Rational(1, 2));

    try {
        parse("field gf 5\nsize 1\n1/2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 1);
    }
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse("field gf 5\nsize 2\n0 1\n1 x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("field q\nsize 2\n0 1\n"), ParseError);          // missing entries
    CHECK_THROWS_AS(parse("field q\nsize 1\n0 1\n"), ParseError);          // trailing entries
    CHECK_THROWS_AS(parse("size 2\nfield q\n0 1\n1 0\n"), ParseError);     // wrong order
    CHECK_THROWS_AS(parse("field q\nsize -1\n"), ParseError);
    CHECK_THROWS_AS(parse("field q\nsize 2\n0 1/0\n1 0\n"), ParseError);   // zero denominator
}

TEST_CASE("size 0 matrices round-trip") {
    auto m = parse("field q\nsize 0\n");
    CHECK(rows_of(m) == 0);
    CHECK(matrix_to_text(m) == "field q\nsize 0\n");
}

TEST_CASE("written matrices read back identically") {
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = rng.below(7);
        auto mq = testutil::random_field_matrix<Rational>(rng, n, n, Q);
        CHECK(std::get<Matrix<Rational>>(parse(matrix_to_text(mq))) == mq);

        auto m3 = testutil::random_field_matrix<Fp>(rng, n, n, G3);
        CHECK(std::get<Matrix<Fp>>(parse(matrix_to_text(m3))) == m3);
    }

    // fractions render as a/b and reparse exactly
    auto m = Matrix<Rational>::from_rows(Q, {{0, 0}, {0, 0}});
    m(0, 1) = Rational(-7, 3);
    m(1, 0) = Rational(7, 3);
    std::string text = matrix_to_text(m);
    CHECK(text.find("-7/3") != std::string::npos);
    CHECK(std::get<Matrix<Rational>>(parse(text)) == m);
}

TEST_CASE("certificate files") {
    std::istringstream in("1 -1 1\n1 1 -1\n");
    auto cert = read_certificate<Rational>(in, Q, 3);
    CHECK(cert.row_scalars == std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
    CHECK(cert.col_scalars == std::vector<Rational>{Rational(1), Rational(1), Rational(-1)});

    std::ostringstream out;
    write_certificate(out, SignCertificate{{1, -1, 1}, {1, 1, -1}});
    CHECK(out.str() == "1 -1 1\n1 1 -1\n");

    std::ostringstream out2;
    ScalingCertificate<Rational> sc{{Rational(1, 2), Rational(3)}, {Rational(1), Rational(1)}};
    write_certificate(out2, sc);
    CHECK(out2.str() == "1/2 3\n1 1\n");

    std::istringstream back(out2.str());
    auto sc2 = read_certificate<Rational>(back, Q, 2);
    CHECK(sc2.row_scalars == sc.row_scalars);
    CHECK(sc2.col_scalars == sc.col_scalars);

    std::istringstream short_in("1 -1\n1\n");
    CHECK_THROWS_AS(read_certificate<Rational>(short_in, Q, 2), ParseError);
}

TEST_CASE("missing files raise InputError") {
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/matrix.mat"), InputError);
}
