#include <doctest.h>

#include <string>

#include "cclab/errors.hpp"
#include "cclab/parser.hpp"
#include "cclab/system.hpp"
#include "helpers.hpp"

using namespace cclab;

namespace {

const VarNames XY{"x", "y"};

Poly2 px(const std::string& s, const VarNames& v = XY) { return parse_polynomial(s, v); }

ParseDiagnostic diagnose(const std::string& s, const VarNames& v = XY) {
  try {
    parse_polynomial(s, v);
  } catch (const ParseError& e) {
    return e.diagnostic();
  }
  FAIL("expected a parse error for " << s);
  return {};
}

Poly2 monomial(unsigned i, unsigned j, const Rational& c) { return Poly2::monomial(XY, {i, j}, c); }

}  // namespace

TEST_CASE("parse_polynomial expands into canonical form") {
  const Poly2 s1 = px("-y + x*(x^2 + y^2 - 1)");
  Poly2 expected(XY);
  expected += monomial(3, 0, 1);
  expected += monomial(1, 2, 1);
  expected += monomial(1, 0, -1);
  expected += monomial(0, 1, -1);
  CHECK(s1 == expected);
  CHECK(px("x + x*y") == monomial(1, 0, 1) + monomial(1, 1, 1));
  CHECK(px("13/6") == Poly2(XY, Rational(13) / 6));
  CHECK(px("13/6*x") == px("(13/6)*x"));
  CHECK(px("x/2") == px("1/2*x"));
  CHECK(px("x^0") == Poly2(XY, Rational(1)));
  CHECK(px("  x\t*\ny ") == monomial(1, 1, 1));
}

TEST_CASE("operator precedence and associativity") {
  CHECK(px("2*x+3*y^2") == px("(2*x)+(3*(y^2))"));
  CHECK(px("-x^2") == -px("x^2"));
  CHECK(px("2^3^2") == Poly2(XY, Rational(512)));
  CHECK(px("x - y - x") == -px("y"));
  CHECK(px("12/2/3") == Poly2(XY, Rational(2)));
  CHECK(px("--x") == px("x"));
}

TEST_CASE("parse diagnostics carry kind and offset") {
  const ParseDiagnostic neg = diagnose("x^-2");
  CHECK(neg.kind == ParseDiagnostic::Kind::semantic);
  CHECK(neg.byte_offset == 2);

  const ParseDiagnostic frac = diagnose("x^(1/2)");
  CHECK(frac.kind == ParseDiagnostic::Kind::semantic);

  const ParseDiagnostic z = diagnose("x + z");
  CHECK(z.kind == ParseDiagnostic::Kind::semantic);
  CHECK(z.byte_offset == 4);

  CHECK(diagnose("x/y").kind == ParseDiagnostic::Kind::semantic);
  CHECK(diagnose("x/0").kind == ParseDiagnostic::Kind::semantic);
  CHECK(diagnose("(x + 1").kind == ParseDiagnostic::Kind::syntax);
  CHECK(diagnose("x + 1)").kind == ParseDiagnostic::Kind::syntax);
  CHECK(diagnose("2 x").kind == ParseDiagnostic::Kind::syntax);
  CHECK(diagnose("x $ y").kind == ParseDiagnostic::Kind::lex);
  CHECK(diagnose("").kind == ParseDiagnostic::Kind::syntax);
  CHECK(diagnose("x^100000").kind == ParseDiagnostic::Kind::semantic);

  const std::string deep(5000, '(');
  CHECK(diagnose(deep + "x").kind == ParseDiagnostic::Kind::semantic);
  for (const auto& text : {"x^-2", "x + z", "(x + 1", "x $ y", "1/0"}) {
    CHECK(diagnose(text).byte_offset <= std::string(text).size());
  }
}

TEST_CASE("parse_system records degrees and names the failing component") {
  const PlanarSystem s1 = testing::system("s1");
  CHECK(s1.degree() == 3);
  CHECK(s1.vars() == XY);
  const PlanarSystem s2 = testing::system("s2");
  CHECK(s2.degree() == 3);
  CHECK(s2.vars() == VarNames{"u", "v"});

  SystemSource bad;
  bad.raw_dx = "x + z";
  bad.raw_dy = "y";
  try {
    parse_system(bad);
    FAIL("undeclared variable accepted");
  } catch (const ParseError& e) {
    CHECK(e.component() == "dx");
    CHECK(e.diagnostic().kind == ParseDiagnostic::Kind::semantic);
  }
  bad.raw_dx = "x";
  bad.raw_dy = "y +";
  try {
    parse_system(bad);
    FAIL("truncated expression accepted");
  } catch (const ParseError& e) {
    CHECK(e.component() == "dy");
  }
}

TEST_CASE("variable names are validated") {
  CHECK_NOTHROW(validate_varnames({"alpha", "b_2"}));
  CHECK_THROWS_AS(validate_varnames({"x", "x"}), InputError);
  CHECK_THROWS_AS(validate_varnames({"1x", "y"}), InputError);
  CHECK_THROWS_AS(validate_varnames({"x", ""}), InputError);
  CHECK_THROWS_AS(validate_varnames({"x y", "z"}), InputError);
}

TEST_CASE("system file format") {
  const std::string text =
      "# comment line\n"
      "label = demo system\n"
      "vars: u v\n"
      "dx = -v + u^2   # trailing comment\n"
      "dy = u\n";
  const SystemSource src = parse_system_file(text);
  CHECK(src.varnames == VarNames{"u", "v"});
  CHECK(src.label == std::optional<std::string>("demo system"));
  const PlanarSystem sys = parse_system(src);
  CHECK(sys.P == px("-v + u^2", {"u", "v"}));
  CHECK(sys.Q == px("u", {"u", "v"}));

  const SystemSource again = parse_system_file(to_system_file(src));
  CHECK(parse_system(again).P == sys.P);
  CHECK(parse_system(again).Q == sys.Q);
  CHECK(again.label == src.label);

  CHECK_THROWS_AS(parse_system_file("dx = x\n"), ParseError);
  CHECK_THROWS_AS(parse_system_file("dx = x\ndy = y\nbogus line\n"), ParseError);
  CHECK_THROWS_AS(parse_system_file("dx = x\ndx = y\ndy = y\n"), ParseError);
}

TEST_CASE("linear transform of s1 reproduces s2") {
  const PlanarSystem s1 = testing::system("s1");
  const PlanarSystem s2 = testing::system("s2");
  const Matrix2 m{{{Rational(1), Rational(0)}, {Rational(1), Rational(1) / 2}}};
  const PlanarSystem t = transform(s1, m, {Rational(0), Rational(0)}, {"u", "v"});
  CHECK(t.P == s2.P);
  CHECK(t.Q == s2.Q);

  const PlanarSystem back = transform(t, inverse(m), {Rational(0), Rational(0)}, XY);
  CHECK(back.P == s1.P);
  CHECK(back.Q == s1.Q);

  const Matrix2 singular{{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}};
  CHECK_THROWS_AS(transform(s1, singular, {Rational(0), Rational(0)}, {"u", "v"}), InputError);
}

TEST_CASE("translation moves an equilibrium to the origin") {
  const PlanarSystem c = testing::system("center");
  const Matrix2 id{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  const PlanarSystem shifted = transform(c, id, {Rational(2), Rational(-3)}, XY);
  CHECK(evaluate(shifted.P, Rational(-2), Rational(3)) == 0);
  CHECK(evaluate(shifted.Q, Rational(-2), Rational(3)) == 0);
}
