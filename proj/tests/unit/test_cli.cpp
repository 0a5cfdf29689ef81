#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "tower_cli/commands.hpp"
#include "tower_cli/expr.hpp"

using tower::Dyadic;
using tower::Errc;
using namespace tower::cli;

namespace {

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const tower::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ParseError;
}

std::string run_eval(const std::string& e, Options o = {}) {
  std::ostringstream out;
  cmd_eval(e, o, out);
  return out.str();
}

std::string run_relcheck(const std::string& path, Options o = {}) {
  std::istringstream in;
  std::ostringstream out;
  CHECK(cmd_relcheck(path, o, in, out) == 0);
  return out.str();
}

std::string data(const char* name) { return std::string(TOWER_TEST_DATA) + "/" + name; }

Dyadic exact(const std::string& e) {
  const Value v = evaluate(*parse(e));
  REQUIRE(std::holds_alternative<Dyadic>(v));
  return std::get<Dyadic>(v);
}

}  // namespace

TEST_CASE("expression trees") {
  CHECK(parse("1/2 + 1/2")->to_string() == "Add(1/2^1, 1/2^1)");
  CHECK(parse("13/4 * 4")->to_string() == "Mul(13/2^2, 4)");
  CHECK(parse("sup(1/4, 3/4)^2")->to_string() == "Pow(Sup[1/2^2, 3/2^2], 2)");
  CHECK(parse("3/2^4")->to_string() == "3/2^4");
  CHECK(parse("-3.25")->to_string() == "-13/2^2");
  CHECK(parse("2^10")->to_string() == "1024");
  CHECK(parse("1 - 2 - 3")->to_string() == "Sub(Sub(1, 2), 3)");
  CHECK(parse("1 + 2 * 3")->to_string() == "Add(1, Mul(2, 3))");
  CHECK(parse("let y = 1/3 in y + y")->to_string() == "Let(y, Div(1, 3), Add(y, y))");
  CHECK(parse("abs(inv(3))")->kind == Expr::Kind::Abs);
}

TEST_CASE("syntax errors name a column") {
  for (const char* bad : {"", "2 +", "(1", "1)", "foo(1)", "x + 1", "2^(1/2)", "1 $ 2", "sup()", "between(1)",
                          "let = 3 in 1", "let x = 1 x", "0.1"}) {
    try {
      parse(bad);
      FAIL("expected an error for '" << bad << "'");
    } catch (const tower::Error& e) {
      CHECK((e.code() == Errc::SyntaxError || e.code() == Errc::ParseError));
      if (e.code() == Errc::SyntaxError) CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
  }
}

TEST_CASE("exact evaluation stays in the dyadics") {
  CHECK(exact("1/2 + 1/4") == Dyadic::make(3, 2));
  CHECK(exact("13/4 * 4") == Dyadic(13));
  CHECK(exact("sup(1/4, 3/4)^2") == Dyadic::make(9, 4));
  CHECK(exact("0 * inv(3)") == Dyadic(0));
  CHECK(exact("inv(1/8)") == Dyadic(8));
  CHECK(exact("abs(-5) - 7") == Dyadic(-2));
  CHECK(exact("let x = 3/2 in x * x - x") == Dyadic::make(3, 2));
  CHECK(exact("6 / 2^1") == Dyadic(3));
  const Dyadic b = exact("between(1/4, 1/2)");
  CHECK(Dyadic::make(1, 2) < b);
  CHECK(b < Dyadic::make(1, 1));
  CHECK(error_of([] { exact("between(1, 1)"); }) == Errc::BadOrder);
  CHECK(error_of([] { evaluate(*parse("1/0")); }) == Errc::DivisionNearZero);
  CHECK(error_of([] { evaluate(*parse("inv(1 - 1)")); }) == Errc::DivisionNearZero);

  for (int i = 0; i < 500; ++i) {
    const Dyadic d = oracle::random_dyadic(20, 12);
    const Dyadic e = oracle::random_dyadic(20, 12);
    const std::string expr = "(" + d.to_string() + ") * (" + e.to_string() + ") + (" + d.to_string() + ")";
    CHECK(exact(expr) == d * e + d);
  }
}

TEST_CASE("real evaluation") {
  const Value v = evaluate(*parse("inv(3) + inv(3) + inv(3)"), EvalOptions{24, 0});
  REQUIRE(std::holds_alternative<tower::Real>(v));
  const tower::Interval iv = std::get<tower::Real>(v).approx(24);
  CHECK(iv.contains(Dyadic(1)));
  CHECK(oracle::width_at_most(iv, 22));
  CHECK(run_eval("inv(3)+inv(3)+inv(3)", {24, Format::Plain}) == iv.to_string(24) + "\n");

  const tower::Interval sq = std::get<tower::Real>(evaluate(*parse("inv(3)^2"), EvalOptions{30, 0})).approx(30);
  CHECK(oracle::to_rational(sq.lo) <= oracle::Rational(1, 9));
  CHECK(oracle::Rational(1, 9) <= oracle::to_rational(sq.hi));
  CHECK(error_of([] { evaluate(*parse("inv(inv(3) - inv(3))"), EvalOptions{20, 40}); }) == Errc::DivisionNearZero);
}

TEST_CASE("eval output formats") {
  CHECK(run_eval("1/2 + 1/4") == "3/2^2\n");
  const auto j = nlohmann::json::parse(run_eval("1/2 + 1/4", {30, Format::JsonLines}));
  CHECK(j["expr"] == "Add(1/2^1, 1/2^2)");
  CHECK(j["exact"] == true);
  CHECK(j["value"] == "3/2^2");
  const auto r = nlohmann::json::parse(run_eval("inv(3)", {20, Format::JsonLines}));
  CHECK(r["exact"] == false);
  CHECK(r["prec"] == 20);
  CHECK(Dyadic::parse(r["lo"].get<std::string>()) < Dyadic::parse(r["hi"].get<std::string>()));
  CHECK(error_of([] { run_eval("1", {kMaxPrecision + 1, Format::Plain}); }) == Errc::PrecisionCap);
  CHECK_NOTHROW(run_eval("inv(3)", {kMaxPrecision, Format::Plain}));
}

TEST_CASE("comparisons") {
  auto cmp = [](const std::string& a, const std::string& b, unsigned prec = 30) {
    std::ostringstream out;
    const int code = cmd_cmp(a, b, {prec, Format::Plain}, out);
    return std::pair{out.str(), code};
  };
  CHECK(cmp("1/2", "3/4") == std::pair<std::string, int>{"less\n", 0});
  CHECK(cmp("1", "1/2 + 1/2") == std::pair<std::string, int>{"equal\n", 0});
  CHECK(cmp("inv(3)", "inv(3) + 0").second == 2);
  CHECK(cmp("inv(3)", "1/4") == std::pair<std::string, int>{"greater\n", 0});
  CHECK(cmp("inv(3)", "21845/2^16", 30) == std::pair<std::string, int>{"greater\n", 0});
  CHECK(cmp("inv(3)", "21845/2^16", 10).second == 2);
}

TEST_CASE("relation reports") {
  const std::string report = run_relcheck(data("ordering_example.rel"));
  CHECK(report ==
        "carrier: a b c\n"
        "pairs: 4\n"
        "reflexive: no\n"
        "antireflexive: no\n"
        "symmetric: no\n"
        "antisymmetric: yes\n"
        "transitive: yes\n"
        "connective: yes\n"
        "directive: no\n"
        "minimum-property: yes\n"
        "pre-ordering: yes\n"
        "ordering: yes\n"
        "ordering-lt: no\n"
        "ordering-le: no\n"
        "direction: no\n"
        "equivalence: no\n"
        "total-ordering: yes\n"
        "well-ordering: yes\n"
        "minima: {a}\n"
        "maxima: {c}\n"
        "weak-minima: {a}\n"
        "weak-maxima: {c}\n");
  CHECK(run_relcheck(data("ordering_example.rel")) == report);

  const auto j = nlohmann::json::parse(run_relcheck(data("ordering_example.rel"), {30, Format::JsonLines}));
  CHECK(j["ordering"] == true);
  CHECK(j["ordering-lt"] == false);
  CHECK(j["maxima"] == nlohmann::json::array({"c"}));

  const std::string empty = run_relcheck(data("empty.rel"));
  CHECK(empty.find("antireflexive: yes\n") != std::string::npos);
  CHECK(empty.find("ordering-lt: yes\n") != std::string::npos);
  CHECK(empty.find("connective: no\n") != std::string::npos);
  CHECK(empty.find("weak-maxima: {p, q, r}\n") != std::string::npos);

  std::istringstream in("carrier: x y\nx y\ny x\n");
  std::ostringstream out;
  cmd_relcheck("-", {}, in, out);
  CHECK(out.str().find("symmetric: yes\n") != std::string::npos);
  CHECK(out.str().find("directive: no\n") != std::string::npos);

  std::istringstream bad("carrier: x\nx z\n");
  std::ostringstream sink;
  CHECK(error_of([&] { cmd_relcheck("-", {}, bad, sink); }) == Errc::UnknownAtom);
  std::istringstream none;
  CHECK(error_of([&] { cmd_relcheck(data("missing.rel"), {}, none, sink); }) == Errc::ParseError);
}

TEST_CASE("enumeration commands") {
  auto run = [](const std::string& what, std::vector<std::string> args, Format f = Format::Plain) {
    std::ostringstream out;
    cmd_enum(what, args, {30, f}, out);
    return out.str();
  };
  CHECK(run("pair", {"3", "5"}) == "41\n");
  CHECK(run("unpair", {"23"}) == "4 2\n");
  CHECK(run("dyadic", {"17"}) == "7/2^2\n");
  CHECK(run("dyadic-index", {"7/2^2"}) == "17\n");
  CHECK(run("dyadic-index", {"1.75"}) == "17\n");
  CHECK(run("pair", {"3", "5"}, Format::JsonLines) == "{\"enum\":\"pair\",\"value\":\"41\"}\n");
  CHECK(run("unpair", {"23"}, Format::JsonLines) == "{\"enum\":\"unpair\",\"p\":\"4\",\"q\":\"2\"}\n");
  CHECK(error_of([&] { run("pair", {"3"}); }) == Errc::SyntaxError);
  CHECK(error_of([&] { run("triple", {"3"}); }) == Errc::SyntaxError);
  CHECK(error_of([&] { run("pair", {"3", "x"}); }) == Errc::ParseError);
  CHECK(error_of([&] { run("dyadic-index", {"-1"}); }) == Errc::NegativeInput);
  for (std::uint64_t n = 0; n < 500; ++n) {
    const std::string d = run("dyadic", {std::to_string(n)});
    CHECK(run("dyadic-index", {d.substr(0, d.size() - 1)}) == std::to_string(n) + "\n");
  }
}
