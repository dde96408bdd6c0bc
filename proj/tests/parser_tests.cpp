#include "binomid/parser.hpp"

#include "binomid/printer.hpp"

#include "ast_gen.hpp"
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

using namespace binomid;
using namespace binomid::dsl;

TEST_CASE("tokenize kinds and positions") {
    const auto tokens = tokenize("binom(x, 2*n)");
    REQUIRE(tokens.size() == 9);
    const std::vector<TokenKind> kinds{TokenKind::Ident,    TokenKind::Punct, TokenKind::Ident,
                                       TokenKind::Punct,    TokenKind::Integer,
                                       TokenKind::Operator, TokenKind::Ident, TokenKind::Punct,
                                       TokenKind::End};
    const std::vector<std::string> lexemes{"binom", "(", "x", ",", "2", "*", "n", ")", ""};
    const std::vector<unsigned> columns{1, 6, 7, 8, 10, 11, 12, 13, 14};
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        CHECK(tokens[i].kind == kinds[i]);
        CHECK(tokens[i].lexeme == lexemes[i]);
        CHECK(tokens[i].line == 1);
        CHECK(tokens[i].column == columns[i]);
    }
}

TEST_CASE("tokenize rejects stray characters with positions") {
    try {
        tokenize("x @ y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 3);
        CHECK(std::string(e.what()).find("'@'") != std::string::npos);
        CHECK(std::string(e.what()).find("line 1, column 3") != std::string::npos);
    }
}

TEST_CASE("tokenize dots, comparisons, comments, newlines") {
    const auto range_tokens = tokenize("0 .. n");
    REQUIRE(range_tokens.size() == 4);
    CHECK(range_tokens[1].kind == TokenKind::Operator);
    CHECK(range_tokens[1].lexeme == "..");

    CHECK_THROWS_AS(tokenize("0 . n"), ParseError);
    CHECK_THROWS_AS(tokenize("a > b"), ParseError);

    const auto ge = tokenize("n >= 0");
    CHECK(ge[1].lexeme == ">=");

    const auto commented = tokenize("a # trailing words\n  b");
    REQUIRE(commented.size() == 3);
    CHECK(commented[0].lexeme == "a");
    CHECK(commented[1].lexeme == "b");
    CHECK(commented[1].line == 2);
    CHECK(commented[1].column == 3);
}

TEST_CASE("keywords are their own token kind") {
    CHECK(tokenize("sum")[0].kind == TokenKind::Keyword);
    CHECK(tokenize("identity")[0].kind == TokenKind::Keyword);
    CHECK(tokenize("summ")[0].kind == TokenKind::Ident);
    CHECK(tokenize("binom")[0].kind == TokenKind::Ident);
}

TEST_CASE("expression precedence and associativity") {
    CHECK(structurally_equal(parse_expr("1 + 2*x^3"),
                             add(lit(1), mul(lit(2), power(var_x(), lit(3))))));
    CHECK(structurally_equal(parse_expr("x - y - z"),
                             sub(sub(var_x(), var_y()), param("z"))));
    CHECK(structurally_equal(parse_expr("x - (y - z)"),
                             sub(var_x(), sub(var_y(), param("z")))));
    CHECK(structurally_equal(parse_expr("a/b/c"),
                             frac(frac(param("a"), param("b")), param("c"))));
    CHECK(structurally_equal(parse_expr("x^y^z"),
                             power(var_x(), power(var_y(), param("z")))));
    CHECK(structurally_equal(parse_expr("(x^y)^z"),
                             power(power(var_x(), var_y()), param("z"))));
    // prefix minus binds tighter than the power operator
    CHECK(structurally_equal(parse_expr("-x^2"), power(neg(var_x()), lit(2))));
    CHECK(structurally_equal(parse_expr("-(x^2)"), neg(power(var_x(), lit(2)))));
    CHECK(structurally_equal(parse_expr("--x"), neg(neg(var_x()))));
    CHECK(structurally_equal(parse_expr("2*-3"), mul(lit(2), neg(lit(3)))));
    CHECK(structurally_equal(parse_expr("x^-2"), power(var_x(), neg(lit(2)))));
}

TEST_CASE("binom and sum forms") {
    CHECK(structurally_equal(parse_expr("binom(x + y, 2*n)"),
                             binom(add(var_x(), var_y()), mul(lit(2), param("n")))));
    CHECK(structurally_equal(
        parse_expr("sum(m = 0 .. n, binom(x - m, m))"),
        sum("m", lit(0), param("n"), binom(sub(var_x(), param("m")), param("m")))));
    // a bare binom identifier is an ordinary parameter
    CHECK(structurally_equal(parse_expr("binom + 1"), add(param("binom"), lit(1))));
    CHECK_THROWS_AS(parse_expr("sum(x = 0 .. 3, 1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("binom(x)"), ParseError);
    CHECK_THROWS_AS(parse_expr("sum(m = 0 .. n)"), ParseError);
}

TEST_CASE("whole input must be consumed") {
    CHECK_THROWS_AS(parse_expr("x +"), ParseError);
    CHECK_THROWS_AS(parse_expr("x y"), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("(x"), ParseError);
    try {
        parse_expr("x y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 3);
    }
}

TEST_CASE("printing uses minimal parentheses") {
    const std::vector<std::string> canonical{
        "x + y*z",
        "(x + y)*z",
        "x^y^z",
        "(x^y)^z",
        "-x^2",
        "-(x^2)",
        "x - (y - z)",
        "x - y - z",
        "a/b/c",
        "a/(b/c)",
        "x + -y",
        "sum(m = 0 .. n, x)",
        "binom(x, 2*n)",
        "(x + 1)*y",
        "-1^n*binom(n - 1 - x, n)",
        "1/6*x^3 - 1/2*x^2 + 1/3*x",
    };
    for (const std::string& text : canonical) {
        CHECK(print_expr(parse_expr(text)) == text);
    }
}

TEST_CASE("print then parse is structurally the identity") {
    std::mt19937 rng(20260818);
    for (int round = 0; round < 500; ++round) {
        const ExprPtr e = testgen::random_expr(rng, 6);
        const std::string text = print_expr(e);
        CAPTURE(text);
        const ExprPtr reparsed = parse_expr(text);
        CHECK(structurally_equal(e, reparsed));
    }
}

TEST_CASE("identity files parse, validate, and round-trip") {
    const std::string text = "# two declarations\n"
                             "identity absorb\n"
                             "params n >= 0\n"
                             "vars x\n"
                             "lhs (n + 1)*binom(x, n + 1)\n"
                             "rhs x*binom(x - 1, n)\n"
                             "\n"
                             "identity no_vars\n"
                             "params t >= -3\n"
                             "vars\n"
                             "lhs t^2\n"
                             "rhs t*t\n";
    const std::vector<Identity> ids = parse_identity_file(text);
    REQUIRE(ids.size() == 2);
    CHECK(ids[0].name == "absorb");
    REQUIRE(ids[0].params.size() == 1);
    CHECK(ids[0].params[0].name == "n");
    CHECK(ids[0].params[0].min_value == BigInt(0));
    CHECK(ids[0].uses_x);
    CHECK_FALSE(ids[0].uses_y);
    CHECK(ids[1].params[0].min_value == BigInt(-3));
    CHECK_FALSE(ids[1].uses_x);

    const std::string printed = print_identity_file(ids);
    const std::vector<Identity> reparsed = parse_identity_file(printed);
    REQUIRE(reparsed.size() == 2);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        CHECK(reparsed[i].name == ids[i].name);
        CHECK(structurally_equal(reparsed[i].lhs, ids[i].lhs));
        CHECK(structurally_equal(reparsed[i].rhs, ids[i].rhs));
    }
    CHECK(print_identity_file(reparsed) == printed);
}

TEST_CASE("identity file errors carry positions") {
    // undeclared parameter in rhs
    try {
        parse_identity_file("identity f\nparams n >= 0\nvars x\nlhs x\nrhs x + k\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("'k'") != std::string::npos);
        CHECK(e.line() == 5);
        CHECK(e.column() == 9);
    }

    // expression uses y but vars omits it
    CHECK_THROWS_AS(parse_identity_file("identity f\nparams\nvars x\nlhs y\nrhs y\n"),
                    ParseError);
    // duplicate parameter
    CHECK_THROWS_AS(
        parse_identity_file("identity f\nparams n >= 0, n >= 1\nvars\nlhs n\nrhs n\n"),
        ParseError);
    // reserved name as parameter
    CHECK_THROWS_AS(parse_identity_file("identity f\nparams x >= 0\nvars\nlhs 1\nrhs 1\n"),
                    ParseError);
    // duplicate identity names
    CHECK_THROWS_AS(parse_identity_file("identity f\nparams\nvars\nlhs 1\nrhs 1\n"
                                        "identity f\nparams\nvars\nlhs 2\nrhs 2\n"),
                    ParseError);
    // missing section
    CHECK_THROWS_AS(parse_identity_file("identity f\nvars\nlhs 1\nrhs 1\n"), ParseError);
    // unknown variable name
    CHECK_THROWS_AS(parse_identity_file("identity f\nparams\nvars z\nlhs 1\nrhs 1\n"),
                    ParseError);
    // empty expression section
    CHECK_THROWS_AS(parse_identity_file("identity f\nparams\nvars\nlhs\nrhs 1\n"), ParseError);
}

TEST_CASE("sum indices shadow parameters inside identity files") {
    const std::string text = "identity shadow\n"
                             "params n >= 0\n"
                             "vars x\n"
                             "lhs sum(n = 0 .. n, binom(x, n))\n"
                             "rhs sum(m = 0 .. n, binom(x, m))\n";
    const std::vector<Identity> ids = parse_identity_file(text);
    REQUIRE(ids.size() == 1);
    // the inner n is the sum index; the bound refers to the parameter
    CHECK(print_expr(ids[0].lhs) == "sum(n = 0 .. n, binom(x, n))");
}
