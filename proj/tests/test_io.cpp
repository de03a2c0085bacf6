#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rado/io.hpp"

using namespace rado;

TEST_CASE("matrix text parses with comments and negative entries") {
    std::istringstream in("# Schur matrix\n1 3 Q\n1 1 -1  # trailing comment\n");
    MatrixFile mf = parse_matrix_text(in);
    CHECK(mf.rows == 1);
    CHECK(mf.cols == 3);
    CHECK(mf.field.is_rational());
    CHECK(mf.entries == std::vector<std::int64_t>{1, 1, -1});

    Matrix m = to_matrix(mf);
    CHECK(m.at(0, 2).rat() == -1);

    Matrix mod = to_matrix(mf, Field::mod(5));
    CHECK(mod.at(0, 2).residue() == 4);
}

TEST_CASE("matrix text round-trips through the formatter") {
    std::string text = format_matrix_text(2, 2, Field::mod(7), {1, -2, 0, 13});
    std::istringstream in(text);
    MatrixFile mf = parse_matrix_text(in);
    CHECK(mf.field.modulus == 7);
    CHECK(mf.entries == std::vector<std::int64_t>{1, -2, 0, 13});
    CHECK(to_int_rows(mf) == std::vector<std::vector<std::int64_t>>{{1, -2}, {0, 13}});
}

TEST_CASE("matrix text errors") {
    std::istringstream missing("1 3 Q\n1 1\n");
    CHECK_THROWS_AS(parse_matrix_text(missing), InputError);
    std::istringstream junk("1 2 Q\n1 1 7\n");
    CHECK_THROWS_AS(parse_matrix_text(junk), InputError);
    std::istringstream badfield("1 1 R\n1\n");
    CHECK_THROWS_AS(parse_matrix_text(badfield), InputError);
    CHECK_THROWS_AS(read_matrix_file("/does/not/exist.mat"), InputError);
}

TEST_CASE("colouring files: interval, modstar, zmod") {
    std::istringstream in("# a certificate\nground=interval:4\n0,1,1,0\n");
    ColouringFile cf = parse_colouring_text(in);
    CHECK(cf.ground == ColouringFile::Ground::Interval);
    CHECK(cf.bound == 4);
    CHECK(cf.colours == std::vector<int>{0, 1, 1, 0});

    Colouring col = to_ground_colouring(cf, 2);
    CHECK(col.domain.kind == Domain::Kind::Interval);
    CHECK(col.to_certificate() == "0,1,1,0");

    std::istringstream ms("ground=modstar:5\n0,1,0,1\n");
    ColouringFile mf = parse_colouring_text(ms);
    CHECK(mf.expected_size() == 4);

    std::istringstream zm("ground=zmod:3\n0,1,2\n");
    ColouringFile zf = parse_colouring_text(zm);
    CHECK(zf.expected_size() == 3);
    CHECK_THROWS_AS(to_ground_colouring(zf, 3), InputError);
}

TEST_CASE("colouring file round-trips through the formatter") {
    ColouringFile cf;
    cf.ground = ColouringFile::Ground::ModularStar;
    cf.bound = 5;
    cf.colours = {1, 0, 0, 1};
    std::istringstream in(format_colouring_text(cf));
    ColouringFile back = parse_colouring_text(in);
    CHECK(back.ground == cf.ground);
    CHECK(back.bound == cf.bound);
    CHECK(back.colours == cf.colours);
}

TEST_CASE("colouring file errors") {
    std::istringstream nohdr("0,1,1,0\n");
    CHECK_THROWS_AS(parse_colouring_text(nohdr), InputError);
    std::istringstream wrongsize("ground=interval:4\n0,1\n");
    CHECK_THROWS_AS(parse_colouring_text(wrongsize), InputError);
    std::istringstream negative("ground=interval:2\n0,-1\n");
    CHECK_THROWS_AS(parse_colouring_text(negative), InputError);
    std::istringstream badkind("ground=ring:4\n0,1,1,0\n");
    CHECK_THROWS_AS(parse_colouring_text(badkind), InputError);
    CHECK_THROWS_AS(to_ground_colouring(
                        ColouringFile{ColouringFile::Ground::Interval, 2, {0, 3}}, 2),
                    InputError);
}
