#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "teissier/io.hpp"
#include "teissier/sweep.hpp"

using teissier::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = teissier::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("mixed verb") {
  Run r = cli({"mixed", "--i", "x,y", "--j", "x^2,y^3", "--json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["e"] == Json::array({1, 2, 6}));
}

TEST_CASE("equality verb") {
  Run r = cli({"equality", "--i", "x,y", "--j", "x^2,x*y,y^2", "--json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ratio"]["r"] == 2);
  CHECK(j["ratio"]["s"] == 1);
  CHECK(j["agree"] == true);
}

TEST_CASE("milnor verb") {
  Run r = cli({"milnor", "--exponents", "3,3", "--json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["mu"] == Json::array({1, 2, 4}));
  CHECK(j["milnor"] == 4);
}

TEST_CASE("colength, mult, hilbert verbs") {
  CHECK(Json::parse(cli({"colength", "--i", "x^2,y^3", "--json"}).out)
            ["colength"] == 6);
  CHECK(Json::parse(cli({"mult", "--i", "x^2,y^3", "--json"}).out)
            ["multiplicity"] == 6);
  Json h = Json::parse(cli({"hilbert", "--i", "x^2,y^3", "--json"}).out);
  CHECK(h["e"] == Json::array({6, 0, 0}));
  CHECK(Json::parse(cli({"hilbert", "--i", "x,y", "--n", "3", "--json"}).out)
            ["value"] == 6);
}

TEST_CASE("closure, reduce, minkowski, rees verbs") {
  Json c = Json::parse(cli({"closure", "--i", "x^2,y^2", "--json"}).out);
  CHECK(c["added"] == Json::array({Json::array({1, 1})}));
  CHECK(Json::parse(cli({"reduce", "--i", "x^2,y^2", "--j", "x^2,x*y,y^2",
                         "--json"}).out)["is_reduction"] == true);
  CHECK(Json::parse(cli({"minkowski", "--i", "x,y", "--j", "x^2,y^3",
                         "--json"}).out)["status"] == "strict");
  Json rees = Json::parse(cli({"rees", "--i", "x^2,y^2", "--j",
                               "x^2,x*y,y^2", "--json"}).out);
  CHECK(rees["verdict"] == "holds");
}

TEST_CASE("oracle mode validates without changing verdicts") {
  for (auto verb : {"colength", "mult", "closure"}) {
    Run plain = cli({verb, "--i", "x^3,x*y,y^4", "--json"});
    Run oracle = cli({verb, "--i", "x^3,x*y,y^4", "--json", "--oracle"});
    CHECK(plain.code == 0);
    CHECK(oracle.code == 0);
    CHECK(plain.out == oracle.out);
  }
  Run mixed = cli({"mixed", "--i", "x,y", "--j", "x^2,y^3", "--oracle"});
  CHECK(mixed.code == 0);
}

TEST_CASE("input errors exit with 2") {
  CHECK(cli({"frobnicate", "--i", "x"}).code == 2);
  CHECK(cli({"colength", "--i", "w%$"}).code == 2);
  CHECK(cli({"colength", "--i", "x*y"}).code == 2);  // not m-primary
  CHECK(cli({"mixed", "--i", "x,y", "--j", "x,y,z"}).code == 2);
  CHECK(cli({"sweep", "--count", "0"}).code == 2);
  CHECK(cli({"milnor", "--exponents", "1,3"}).code == 2);
}

TEST_CASE("sweep runs clean and is deterministic") {
  Run a = cli({"sweep", "--seed", "1", "--count", "25", "--json"});
  CHECK(a.code == 0);
  Json j = Json::parse(a.out);
  CHECK(j["verdict"] == "ok");
  CHECK(j["pairs"] == 25);
  CHECK(j["violations"].empty());

  Run b = cli({"sweep", "--seed", "1", "--count", "25", "--json"});
  CHECK(a.out == b.out);
  Run threaded = cli({"sweep", "--seed", "1", "--count", "25", "--json",
                      "--threads", "4"});
  CHECK(a.out == threaded.out);
  Run one = cli({"sweep", "--seed", "1", "--count", "25", "--json",
                 "--threads", "1"});
  CHECK(a.out == one.out);
}

TEST_CASE("sweep dims 1 and 3") {
  Run d1 = cli({"sweep", "--seed", "2", "--count", "20", "--dim", "1",
                "--json"});
  CHECK(d1.code == 0);
  Json j1 = Json::parse(d1.out);
  CHECK(j1["verdict"] == "ok");
  CHECK(j1["checks_passed"].contains("dim1-additivity"));

  Run d3 = cli({"sweep", "--seed", "2", "--count", "2", "--dim", "3",
                "--max-exp", "2", "--json"});
  CHECK(d3.code == 0);
  CHECK(Json::parse(d3.out)["verdict"] == "ok");
}

TEST_CASE("sweep generator yields valid m-primary ideals") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 50; ++k) {
    teissier::MonomialIdeal I = teissier::random_m_primary(rng, 2, 5);
    CHECK(teissier::is_m_primary(I));
    CHECK(teissier::normalize(I.dim, I.gens) == I);
  }
}

TEST_CASE("help exits zero") {
  CHECK(cli({"--help"}).code == 0);
}
