#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "teissier/errors.hpp"
#include "teissier/io.hpp"
#include "teissier/newton.hpp"

using namespace teissier;

TEST_CASE("text sugar") {
  CHECK(parse_ideal_text("x^2, x*y, y^3") ==
        normalize(2, {{2, 0}, {1, 1}, {0, 3}}));
  CHECK(parse_ideal_text("x, y") == maximal_ideal(2));
  CHECK(parse_ideal_text("(x^2, y^3)") == normalize(2, {{2, 0}, {0, 3}}));
  CHECK(parse_ideal_text("1") == unit_ideal(1));
  CHECK(parse_ideal_text("x1^2, x2*x4") ==
        normalize(4, {{2, 0, 0, 0}, {0, 1, 0, 1}}));
  CHECK(parse_ideal_text("z") == normalize(3, {{0, 0, 1}}));
  CHECK(parse_ideal_text("x", 3) == normalize(3, {{1, 0, 0}}));
  CHECK(parse_ideal_text("x*x*y") == normalize(2, {{2, 1}}));
}

TEST_CASE("text sugar errors") {
  CHECK_THROWS_AS(parse_ideal_text(""), InputError);
  CHECK_THROWS_AS(parse_ideal_text("x^2 +"), InputError);
  CHECK_THROWS_AS(parse_ideal_text("w^2"), InputError);
  CHECK_THROWS_AS(parse_ideal_text("x3", 2), InputError);
}

TEST_CASE("ideal JSON round trip") {
  MonomialIdeal I = normalize(2, {{2, 0}, {1, 1}, {0, 3}});
  Json j = ideal_to_json(I);
  CHECK(j["dim"] == 2);
  CHECK(parse_ideal_json(j) == I);
  CHECK_THROWS_AS(parse_ideal_json(Json{{"gens", Json::array()}}), InputError);
  CHECK_THROWS_AS(parse_ideal_json(Json::parse(R"({"dim":2,"gens":[[1,-1]]})")),
                  InputError);
}

TEST_CASE("parse_ideal dispatch") {
  CHECK(parse_ideal(R"({"dim":2,"gens":[[2,0],[0,3]]})") ==
        normalize(2, {{2, 0}, {0, 3}}));
  CHECK(parse_ideal("x^2, y^3") == normalize(2, {{2, 0}, {0, 3}}));
  CHECK_THROWS_AS(parse_ideal("{not json"), InputError);

  const char* path = "io_test_ideal.tmp";
  {
    std::ofstream out(path);
    out << "x^2, y^3\n";
  }
  CHECK(parse_ideal(path) == normalize(2, {{2, 0}, {0, 3}}));
  std::remove(path);
}

TEST_CASE("text rendering") {
  CHECK(monomial_to_text({2, 0}) == "x^2");
  CHECK(monomial_to_text({1, 1}) == "x*y");
  CHECK(monomial_to_text({0, 0}) == "1");
  CHECK(monomial_to_text({0, 1, 0, 2}) == "x2*x4^2");
  CHECK(ideal_to_text(normalize(2, {{2, 0}, {0, 3}})) == "(x^2, y^3)");
}

TEST_CASE("number serialization") {
  CHECK(to_json(mpz_class(7)) == 7);
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
  CHECK(to_json(big) == big.get_str());
  CHECK(to_json(mpq_class(3, 1)) == 3);
  Json half = to_json(mpq_class(1, 2));
  CHECK(half["num"] == 1);
  CHECK(half["den"] == 2);
}

TEST_CASE("polynomial and report schemas") {
  MonomialIdeal m = maximal_ideal(2);
  Json h = to_json(hilbert_polynomial(m));
  CHECK(h.contains("threshold"));
  CHECK(h["e"] == Json::array({1, 0, 0}));

  Json b = to_json(bhattacharya_polynomial(m, m));
  CHECK(b.contains("threshold"));
  for (const auto& t : b["terms"]) {
    CHECK(t.contains("r"));
    CHECK(t.contains("s"));
    CHECK(t.contains("num"));
    CHECK(t.contains("den"));
  }

  CHECK(to_json(mixed_multiplicities(m, m))["e"] == Json::array({1, 1, 1}));
}

TEST_CASE("verdict and rees JSON") {
  MonomialIdeal m = maximal_ideal(2);
  MonomialIdeal J = normalize(2, {{2, 0}, {0, 3}});
  Json v = verdict_json("teissier-first", Json::object(),
                        check_teissier_first(mixed_multiplicities(m, J)));
  CHECK(v["verdict"] == "holds");
  Json eq = verdict_json("teissier-first", Json::object(),
                         check_teissier_first(mixed_multiplicities(m, m)));
  CHECK(eq["verdict"] == "equality");

  Json r = rees_report_json(check_rees(J, normalize(2, {{2, 0}, {1, 1}, {0, 3}})));
  CHECK(r["verdict"] == "hypothesis-unmet");
  Json ok = rees_report_json(
      check_rees(normalize(2, {{2, 0}, {0, 2}}), power(m, 2)));
  CHECK(ok["verdict"] == "holds");
}

TEST_CASE("closure report lists added generators") {
  MonomialIdeal I = normalize(2, {{2, 0}, {0, 2}});
  Json rep = closure_report(I, integral_closure(I));
  CHECK(rep["closure_gens"].size() == 3);
  CHECK(rep["added"] == Json::array({Json::array({1, 1})}));
}

TEST_CASE("milnor report") {
  Json r = milnor_report_json({{3, 3}});
  CHECK(r["mu"] == Json::array({1, 2, 4}));
  CHECK(r["milnor"] == 4);
  CHECK(r["log_convex"] == true);
  CHECK(r["alt_sum"] == -1);
}
