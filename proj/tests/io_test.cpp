#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "lpdo/parser.hpp"
#include "lpdo/printer.hpp"
#include "support.hpp"

namespace lpdo {
namespace {

using testing::Gen;

const RatExpr X = RatExpr::x();
const RatExpr Y = RatExpr::y();
const LPDO Dx = LPDO::dx();
const LPDO Dy = LPDO::dy();

ParseOptions params(std::vector<std::string> names) {
  ParseOptions o;
  o.parameters = std::move(names);
  return o;
}

TEST(Parser, NoncommutativeProducts) {
  EXPECT_EQ(parse_operator("Dx*x"), X * Dx + LPDO(1));
  EXPECT_EQ(parse_operator("Dy*x"), X * Dy);
  EXPECT_EQ(parse_operator("Dx*x - x*Dx"), LPDO(1));
  EXPECT_EQ(parse_operator("Dx^2"), LPDO::derivative(2, 0));
  EXPECT_EQ(parse_operator("(Dx + y)^2"), compose(Dx + LPDO(Y), Dx + LPDO(Y)));
}

TEST(Parser, Landau) {
  const LPDO one = Dx + LPDO(1);
  EXPECT_EQ(parse_operator("(Dx+1)*(Dx+1)*(Dx+x*Dy)"), compose({one, one, Dx + X * Dy}));
}

TEST(Parser, Poisson) {
  const RatExpr a = RatExpr::parameter("a");
  const RatExpr b = RatExpr::parameter("b");
  const RatExpr gg = RatExpr::parameter("g");
  const RatExpr s = X + Y;
  EXPECT_EQ(parse_operator("Dx*Dy + (a/(x+y))*Dx + (b/(x+y))*Dy + g/(x+y)^2", params({"a", "b", "g"})),
            LPDO::derivative(1, 1) + (a / s) * Dx + (b / s) * Dy + LPDO(gg / (s * s)));
}

TEST(Parser, ConstantsAndAliases) {
  EXPECT_EQ(parse_operator("sqrt(2)*sqrt(2)"), LPDO(2));
  EXPECT_EQ(parse_operator("sqrt(-1)"), LPDO(RatExpr(ConstScalar::imaginary_unit())));
  EXPECT_EQ(parse_operator("i*i"), LPDO(-1));
  EXPECT_EQ(parse_operator("sqrt(8)"), LPDO(RatExpr(ConstScalar(2) * ConstScalar::radical(2))));
  EXPECT_EQ(parse_operator("\xE2\x88\x82x^2 \xE2\x88\x92 \xE2\x88\x82y"), LPDO::derivative(2, 0) - Dy);
  EXPECT_EQ(parse_operator("3/4*x"), LPDO(RatExpr(mpq_class(3, 4)) * X));
  EXPECT_EQ(parse_operator("Dx/2"), RatExpr(mpq_class(1, 2)) * Dx);
  EXPECT_EQ(parse_operator("-(x+1)"), LPDO(-X - 1));
}

void expect_error(const std::string& text, std::size_t line, std::size_t column, const ParseOptions& o = {}) {
  try {
    parse_operator(text, o);
    FAIL() << "no error for " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << text << ": " << e.what();
    EXPECT_EQ(e.column(), column) << text << ": " << e.what();
  }
}

TEST(Parser, Errors) {
  expect_error("", 1, 1);
  expect_error("Dx +", 1, 5);
  expect_error("Dx + * 2", 1, 6);
  expect_error("foo*Dx", 1, 1);
  expect_error("x +\n  $", 2, 3);
  expect_error("(x + 1", 1, 7);
  expect_error("Dx/x", 1, 4);
  expect_error("x/Dx", 1, 3);
  expect_error("x/0", 1, 3);
  expect_error("x^0", 1, 3);
  expect_error("x^y", 1, 3);
  expect_error("sqrt(x)", 1, 6);
  expect_error("sqrt(3", 1, 7);
  expect_error("\xE2\x88\x82z", 1, 1);
  expect_error("\xE2\x88\x82x + \xC3\xA9", 1, 6);
  expect_error("x y", 1, 3);
}

TEST(Parser, ParametersMustBeDeclared) {
  expect_error("a*Dx", 1, 1);
  EXPECT_NO_THROW(parse_operator("a*Dx", params({"a"})));
  EXPECT_THROW(parse_operator("x", params({"Dx"})), std::invalid_argument);
}

TEST(Parser, SplitParameters) {
  EXPECT_EQ(split_parameters(" alpha, beta ,gamma,"), (std::vector<std::string>{"alpha", "beta", "gamma"}));
  EXPECT_TRUE(split_parameters("").empty());
}

TEST(Printer, Operators) {
  EXPECT_EQ(format(LPDO::derivative(1, 1), TextStyle::Plain), "Dx*Dy");
  EXPECT_EQ(format(Dx - Dy + LPDO((X + Y) / RatExpr(2)), TextStyle::Plain), "Dx - Dy + (x + y)/2");
  EXPECT_EQ(format((X + 2) * Dy - LPDO(X + 1), TextStyle::Plain), "(x + 2)*Dy - (x + 1)");
  EXPECT_EQ(format(-Dx, TextStyle::Plain), "-Dx");
  EXPECT_EQ(format(LPDO(), TextStyle::Plain), "0");
  EXPECT_EQ(format(Dx + Dy + LPDO((Y - X) / RatExpr(2)), TextStyle::Latex),
            "\\partial_x+\\partial_y+\\tfrac{1}{2}(y-x)");
  EXPECT_EQ(format(LPDO::derivative(2, 1), TextStyle::Latex), "\\partial_x^{2}\\partial_y");
  EXPECT_EQ(format_product({Dx + LPDO(X), Dx}, TextStyle::Plain), "(Dx + x)*(Dx)");
}

LPDO random_operator(Gen& g, const std::vector<Symbol::Id>& extra) {
  LPDO::Coeffs cs;
  const int n = g.integer(0, 3);
  for (int m = 0; m <= n; ++m) {
    for (int k = 0; k <= m; ++k) {
      if (g.coin()) continue;
      RatExpr c = g.rat(2, extra);
      if (g.integer(0, 4) == 0) c *= RatExpr(ConstScalar::radical(2));
      if (g.integer(0, 4) == 0) c *= RatExpr(ConstScalar::imaginary_unit());
      if (!c.is_zero()) cs[{m - k, k}] = c;
    }
  }
  return LPDO::from_coeffs(cs);
}

TEST(Printer, PlainRoundTrip) {
  Gen g(51);
  const std::vector<Symbol::Id> extra = {Symbol::parameter("a"), Symbol::parameter("beta")};
  const ParseOptions o = params({"a", "beta"});
  for (int t = 0; t < 300; ++t) {
    const LPDO a = random_operator(g, extra);
    const std::string text = format(a, TextStyle::Plain);
    ASSERT_EQ(parse_operator(text, o), a) << text;
  }
}

TEST(Printer, StructuredRoundTrip) {
  Gen g(52);
  const std::vector<Symbol::Id> extra = {Symbol::parameter("a"), Symbol::parameter("t1")};
  for (int t = 0; t < 300; ++t) {
    const LPDO a = random_operator(g, extra);
    ASSERT_EQ(from_structured(to_structured(a)), a) << to_structured(a);
  }
  EXPECT_THROW(from_structured("{"), ParseError);
  EXPECT_THROW(from_structured("{\"coeffs\": 3}"), ParseError);
}

TEST(Printer, ReportReparsesAndVerifies) {
  const LPDO a1 = parse_operator("Dx^2-Dy^2+x*Dy+y*Dx+(y^2-x^2)/4+1");
  const auto attempts = factor_left_all(a1);
  const std::string report = render_outcome(a1, select_outcome(attempts), attempts, OutputFormat::Plain);
  const auto pos = report.find("product: ");
  ASSERT_NE(pos, std::string::npos);
  const std::string product = report.substr(pos + 9, report.find('\n', pos) - pos - 9);
  EXPECT_EQ(product, "(Dx + Dy + (y - x)/2)*(Dx - Dy + (x + y)/2)");
  EXPECT_EQ(parse_operator(product), a1);
}

TEST(Printer, StructuredOutcome) {
  const LPDO a = parse_operator("Dx^2+Dy^2");
  const auto attempts = factor_left_all(a);
  const std::string s = render_outcome(a, select_outcome(attempts), attempts, OutputFormat::Structured);
  EXPECT_NE(s.find("\"status\": \"Factored\""), std::string::npos);
  EXPECT_NE(s.find("\"extensions\": [\n      \"i\"\n    ]"), std::string::npos) << s;
  EXPECT_NE(s.find("\"cofactor\""), std::string::npos);
  // Identical input gives identical bytes.
  EXPECT_EQ(s, render_outcome(a, select_outcome(attempts), attempts, OutputFormat::Structured));
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, FactorExitCodes) {
  const CliResult ok = cli({"factor", "--side", "left", "Dx^2\xE2\x88\x92" "Dy^2+x*Dy+y*Dx+(y^2\xE2\x88\x92x^2)/4+1"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("factor: Dx + Dy + (y - x)/2"), std::string::npos) << ok.out;
  EXPECT_NE(ok.out.find("cofactor: Dx - Dy + (x + y)/2"), std::string::npos);

  const CliResult fail = cli({"factor", "--params", "a", "Dx^2-Dy^2+x*Dy+y*Dx+(y^2-x^2)/4+a"});
  EXPECT_EQ(fail.code, 2);
  EXPECT_NE(fail.out.find("root -1: ConditionsFail, residuals: a - 1"), std::string::npos) << fail.out;
  EXPECT_NE(fail.out.find("root 1: ConditionsFail, residuals: a + 1"), std::string::npos);

  const CliResult p3 = cli({"factor", "Dx^2 + x*Dx", "--p3", "x"});
  EXPECT_EQ(p3.code, 0);
  EXPECT_NE(p3.out.find("product: (Dx + x)*(Dx)"), std::string::npos) << p3.out;

  const CliResult degenerate = cli({"factor", "Dx^2"});
  EXPECT_EQ(degenerate.code, 3);
  EXPECT_NE(degenerate.out.find("p3^2 + p3_x = 0"), std::string::npos) << degenerate.out;

  EXPECT_EQ(cli({"factor", "Dx^3 + 2*Dy^3"}).code, 4);
  EXPECT_EQ(cli({"factor", "Dx +"}).code, 1);
  EXPECT_EQ(cli({"factor", "--root", "9", "Dx^2-Dy^2"}).code, 1);
  EXPECT_EQ(cli({"factor", "--root", "3", "Dx^2-Dy^2"}).code, 1);
  EXPECT_EQ(cli({"factor", "--format", "yaml", "Dx^2"}).code, 1);
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, RootSelection) {
  const CliResult plus = cli({"factor", "--root", "1", "Dx^2-Dy^2+x*Dy+y*Dx+(y^2-x^2)/4+1"});
  EXPECT_EQ(plus.code, 2);
  const CliResult by_index = cli({"factor", "--root", "0", "Dx^2-Dy^2+x*Dy+y*Dx+(y^2-x^2)/4+1"});
  EXPECT_EQ(by_index.code, 0);
  const CliResult inf = cli({"factor", "--root", "inf", "--params", "al,be",
                       "Dx*Dy + al/(x+y)*Dx + be/(x+y)*Dy + be*(al-1)/(x+y)^2"});
  EXPECT_EQ(inf.code, 0) << inf.out << inf.err;
  EXPECT_NE(inf.out.find("normalization: swap"), std::string::npos);
}

TEST(Cli, StdinAndOtherCommands) {
  EXPECT_EQ(cli({"factor"}, "Dx^2 + Dy^2\n").code, 0);
  const CliResult r = cli({"compose", "Dx", "x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x*Dx + 1\n");
  EXPECT_EQ(cli({"transpose", "x*Dx"}).out, "-x*Dx - 1\n");
  EXPECT_EQ(cli({"verify", "x*Dx + 1", "Dx", "x"}).code, 0);
  EXPECT_EQ(cli({"verify", "x*Dx", "Dx", "x"}).code, 2);
  const CliResult cp = cli({"charpoly", "Dx*Dy"});
  EXPECT_EQ(cp.code, 0);
  EXPECT_NE(cp.out.find("inf (multiplicity 1)"), std::string::npos);
  const CliResult rec = cli({"factor", "--recursive", "(Dx+1)*(Dx+1)*(Dx+x*Dy)"});
  EXPECT_EQ(rec.code, 0);
  EXPECT_NE(rec.out.find("(Dx + 1)*(Dx + 1)*(Dx + x*Dy)"), std::string::npos) << rec.out;
}

TEST(Cli, StructuredFormat) {
  const CliResult r = cli({"factor", "--format", "structured", "Dx^2-Dy^2+x*Dy+y*Dx+(y^2-x^2)/4+1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.front(), '{');
  EXPECT_NE(r.out.find("\"attempts\""), std::string::npos);
}

}  // namespace
}  // namespace lpdo
