#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "core/expr.hpp"
#include "support/finite_diff.hpp"

using namespace isogeo4;
using namespace isogeo4::testing;

TEST_CASE("parsing honors the grammar") {
  CHECK(Expr::parse("0.5*cos(s)").print() == "0.5*cos(s)");
  CHECK(Expr::parse("1 + 2*s - q/t").eval(0, 2, 4) == 1 + 2 * 0 - 4.0 / 2.0);
  // Left associativity.
  CHECK(Expr::parse("8 - 4 - 2").eval(0, 0, 0) == 2.0);
  CHECK(Expr::parse("16/4/2").eval(0, 0, 0) == 2.0);
  // '^' associates right and binds tighter than unary minus.
  CHECK(Expr::parse("2^3^2").eval(0, 0, 0) == 512.0);
  CHECK(Expr::parse("-2^2").eval(0, 0, 0) == -4.0);
  CHECK(Expr::parse("(-2)^2").eval(0, 0, 0) == 4.0);
  CHECK(Expr::parse("2^-2").eval(0, 0, 0) == 0.25);
  // Unary minus between '^' and '*'.
  CHECK(Expr::parse("-s^2*2").eval(3, 0, 0) == -18.0);
}

TEST_CASE("parse errors carry offsets and expectations") {
  try {
    Expr::parse("sin(s");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 5);
    CHECK(e.expected() == ")");
  }

  CHECK_THROWS_AS(Expr::parse("2 +"), SyntaxError);
  CHECK_THROWS_AS(Expr::parse("2 3"), SyntaxError);
  CHECK_THROWS_AS(Expr::parse("(1"), SyntaxError);
  CHECK_THROWS_AS(Expr::parse("foo(2)"), UnknownIdentifier);

  try {
    Expr::parse("t + r", vars::tq);
    FAIL("expected UnknownIdentifier");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.name() == "r");
    CHECK(e.offset() == 4);
  }

  // Declared variables are scoped per call site.
  try {
    Expr::parse("(t - 0.5)*s", vars::tq);
    FAIL("expected UnknownIdentifier");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.name() == "s");
  }
}

TEST_CASE("evaluation") {
  CHECK(std::abs(Expr::parse("sin(pi)").eval(0, 0, 0)) <= 1e-15);
  CHECK(Expr::parse("(t - 0.5)*(q + sqrt(3))").eval(0, 0.5, 7.0) == 0.0);
  CHECK(Expr::parse("(t-0.5)*(q-0)").eval(1.5, 1, 1) == 0.5);
  CHECK_THROWS_AS(Expr::parse("1/ (t-1)").eval(0, 1, 0), DomainError);
  CHECK_THROWS_AS(Expr::parse("log(t)").eval(0, -1, 0), DomainError);
  CHECK_THROWS_AS(Expr::parse("sqrt(t)").eval(0, -2, 0), DomainError);
  CHECK_THROWS_AS(Expr::parse("(-2)^0.5").eval(0, 0, 0), DomainError);
  CHECK(Expr::parse("(-2)^3").eval(0, 0, 0) == -8.0);
  CHECK(Expr::parse("q^2").eval(0, 0, 0) == 0.0);
}

TEST_CASE("jet values and hand-computed derivatives") {
  const Jet4 cubic = Expr::parse("s^3").eval_jet_s(2, 0, 0);
  CHECK(cubic.v == 8.0);
  CHECK(cubic.d1 == 12.0);
  CHECK(cubic.d2 == 12.0);
  CHECK(cubic.d3 == 6.0);
  CHECK(cubic.d4 == 0.0);

  const Jet4 sine = Expr::parse("sin(s)").eval_jet_s(0, 0, 0);
  CHECK(sine.v == 0.0);
  CHECK(sine.d1 == 1.0);
  CHECK(sine.d2 == 0.0);
  CHECK(sine.d3 == -1.0);
  CHECK(sine.d4 == 0.0);

  // t and q enter jets as constants.
  const Jet4 mixed = Expr::parse("t*s + q").eval_jet_s(3, 2, 5);
  CHECK(mixed.v == 11.0);
  CHECK(mixed.d1 == 2.0);
  CHECK(mixed.d2 == 0.0);
}

TEST_CASE("jet value slot matches eval exactly") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> d(-2, 2);
  const Expr e = Expr::parse("sin(s)*cos(t) + s^2*q - exp(0.3*s)/(2 + cos(s))");
  for (int i = 0; i < 200; ++i) {
    const double s = d(rng), t = d(rng), q = d(rng);
    CHECK(e.eval_jet_s(s, t, q).v == e.eval(s, t, q));
  }
}

TEST_CASE("jets agree with finite differences for every grammar function") {
  struct Case {
    const char* text;
    double lo, hi;
  };
  // Inner arguments keep log/sqrt positive and tan away from its poles.
  const Case cases[] = {
      {"sin(0.9*s + 0.05*s^2)", -1, 1},
      {"cos(1.1*s - 0.04*s^2)", -1, 1},
      {"tan(0.4*s + 0.02*s^2)", -1, 1},
      {"exp(0.8*s + 0.03*s^2)", -1, 1},
      {"log(1.5 + 0.2*s + 0.04*s^2)", -1, 1},
      {"sqrt(1.5 + 0.2*s + 0.04*s^2)", -1, 1},
      {"(1.5 + 0.2*s)^2.7", -1, 1},
      {"(1.5 + 0.2*s)^(0.5 + 0.1*s)", -1, 1},
      {"(0.3*s)^3", 0.1, 1},
      {"(1 + s^2)/(2 + s)", -1, 1},
  };
  std::mt19937 rng(2024);
  for (const Case& c : cases) {
    const Expr e = Expr::parse(c.text);
    std::uniform_real_distribution<double> pts(c.lo, c.hi);
    const auto f = [&](double s) { return e.eval(s, 0, 0); };
    for (int i = 0; i < 1000; ++i) {
      const double s = pts(rng);
      const Jet4 jet = e.eval_jet_s(s, 0, 0);
      const double derivs[4] = {jet.d1, jet.d2, jet.d3, jet.d4};
      for (int order = 1; order <= 4; ++order) {
        const double fd = fd_derivative(f, s, order);
        CHECK(std::abs(derivs[order - 1] - fd) <=
              1e-5 * (1 + std::abs(derivs[order - 1])));
      }
    }
  }
}

TEST_CASE("gradient values and hand partials") {
  const Grad3 g = Expr::parse("(s+t+1)*(q-0)").eval_grad3(1, 2, 3);
  CHECK(g.v == 12.0);
  CHECK(g.ds == 3.0);
  CHECK(g.dt == 3.0);
  CHECK(g.dq == 4.0);

  const Grad3 lin = Expr::parse("t-0.5").eval_grad3(0.3, 0.9, 0.1);
  CHECK(lin.dt == 1.0);
  CHECK(lin.ds == 0.0);
  CHECK(lin.dq == 0.0);
}

TEST_CASE("gradients agree with central differences") {
  const Expr e =
      Expr::parse("sin(s*t) + exp(0.2*q)*cos(s) - (t + 1.5)^1.5 + q^2/(2 + t)");
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> d(-1, 1);
  const double h = 1e-6;
  for (int i = 0; i < 500; ++i) {
    const double s = d(rng), t = d(rng), q = d(rng);
    const Grad3 g = e.eval_grad3(s, t, q);
    const double fs = (e.eval(s + h, t, q) - e.eval(s - h, t, q)) / (2 * h);
    const double ft = (e.eval(s, t + h, q) - e.eval(s, t - h, q)) / (2 * h);
    const double fq = (e.eval(s, t, q + h) - e.eval(s, t, q - h)) / (2 * h);
    CHECK(std::abs(g.ds - fs) <= 1e-6 * (1 + std::abs(g.ds)));
    CHECK(std::abs(g.dt - ft) <= 1e-6 * (1 + std::abs(g.dt)));
    CHECK(std::abs(g.dq - fq) <= 1e-6 * (1 + std::abs(g.dq)));
  }
}

TEST_CASE("gradient of a sum is the sum of gradients, bit for bit") {
  const char* parts[] = {"sin(s*t)", "q^2 - t", "exp(0.1*s)*q", "(t + 2)^2"};
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> d(-1, 1);
  for (const char* a : parts) {
    for (const char* b : parts) {
      const Expr ea = Expr::parse(a);
      const Expr eb = Expr::parse(b);
      const Expr sum = Expr::parse(std::string("(") + a + ") + (" + b + ")");
      for (int i = 0; i < 20; ++i) {
        const double s = d(rng), t = d(rng), q = d(rng);
        const Grad3 ga = ea.eval_grad3(s, t, q);
        const Grad3 gb = eb.eval_grad3(s, t, q);
        const Grad3 gs = sum.eval_grad3(s, t, q);
        CHECK(gs.v == ga.v + gb.v);
        CHECK(gs.ds == ga.ds + gb.ds);
        CHECK(gs.dt == ga.dt + gb.dt);
        CHECK(gs.dq == ga.dq + gb.dq);
      }
    }
  }
}

TEST_CASE("print round-trips to a structurally identical tree") {
  const char* cases[] = {
      "0.5*cos(s)",
      "(t - 0.5)*(q - 0)",
      "s + t + 1",
      "(s + 1)*(t - 0.5)",
      "sin(s*(q - 1))",
      "s*q^2",
      "-s^2",
      "(-s)^2",
      "-(s + t)^2*q - -0.5",
      "2^3^2",
      "s^-2",
  };
  for (const char* text : cases) {
    const Expr e = Expr::parse(text);
    const Expr reparsed = Expr::parse(e.print());
    CHECK(e.equals(reparsed));
    CHECK(e.print() == reparsed.print());
  }
  // 'pi' folds to its numeric value and stays stable through reprinting.
  const Expr pi_expr = Expr::parse("pi + 1");
  CHECK(pi_expr.equals(Expr::parse(pi_expr.print())));
}

TEST_CASE("randomly generated trees survive print/parse") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> leaf(-3, 3);
  std::uniform_int_distribution<int> pick(0, 9);

  // Build random expression TEXT bottom-up; parse once, then round-trip.
  std::function<std::string(int)> build = [&](int depth) -> std::string {
    if (depth <= 0) {
      switch (pick(rng) % 4) {
        case 0: return "s";
        case 1: return "t";
        case 2: return "q";
        default: {
          char buf[40];
          std::snprintf(buf, sizeof(buf), "%.6g", leaf(rng));
          return buf;
        }
      }
    }
    const std::string a = build(depth - 1);
    const std::string b = build(depth - 1);
    switch (pick(rng)) {
      case 0: return "(" + a + ") + (" + b + ")";
      case 1: return "(" + a + ") - (" + b + ")";
      case 2: return "(" + a + ")*(" + b + ")";
      case 3: return "(" + a + ")/(2.5 + (" + b + ")^2)";
      case 4: return "-(" + a + ")";
      case 5: return "sin(" + a + ")";
      case 6: return "cos(" + a + ")";
      case 7: return "exp(0.1*(" + a + "))";
      case 8: return "(" + a + ")^2";
      default: return "(2 + (" + a + ")^2)^0.5";
    }
  };

  for (int i = 0; i < 500; ++i) {
    const Expr e = Expr::parse(build(3));
    const Expr round = Expr::parse(e.print());
    CHECK(e.equals(round));
  }
}

TEST_CASE("uses reports referenced variables") {
  const Expr e = Expr::parse("sin(s) + t");
  CHECK(e.uses(Var::S));
  CHECK(e.uses(Var::T));
  CHECK_FALSE(e.uses(Var::Q));
}

TEST_CASE("a shared expression evaluates identically from many threads") {
  const Expr e = Expr::parse("sin(s*t) + exp(0.1*q)*cos(s) - (t + 1.5)^1.5");
  const double want = e.eval(0.3, 0.7, 0.2);
  const Jet4 want_jet = e.eval_jet_s(0.3, 0.7, 0.2);
  std::vector<std::thread> pool;
  std::atomic<int> mismatches{0};
  for (int k = 0; k < 4; ++k) {
    pool.emplace_back([&] {
      for (int i = 0; i < 2000; ++i) {
        if (e.eval(0.3, 0.7, 0.2) != want) ++mismatches;
        const Jet4 jet = e.eval_jet_s(0.3, 0.7, 0.2);
        if (jet.v != want_jet.v || jet.d4 != want_jet.d4) ++mismatches;
      }
    });
  }
  for (std::thread& th : pool) th.join();
  CHECK(mismatches == 0);
}
