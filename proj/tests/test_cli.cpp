#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "heatinv/cli.hpp"

using namespace heatinv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string metric(const std::string& name) { return std::string(HEATINV_DATA_DIR) + "/metrics/" + name; }

}  // namespace

TEST_CASE("sphere a_1 and a_2") {
  const Run r = run({"compute", "--metric", metric("sphere.json"), "--n", "1", "--mode", "numeric"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/(12*pi)\n");
  CHECK(run({"compute", "--metric", metric("sphere.json"), "--n", "2", "--path", "eq310"}).out == "1/(60*pi)\n");
}

TEST_CASE("flat zeros for several n") {
  const Run r = run({"compute", "--n", "1", "--n", "2", "--metric", metric("flat.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n0\n");
}

TEST_CASE("a_0 is labeled as the Weyl term") {
  const Run r = run({"compute", "--n", "0", "--metric", metric("flat.json")});
  CHECK(r.out == "1/(4*pi)  # leading Weyl term\n");
  const auto j = nlohmann::json::parse(
      run({"compute", "--n", "0", "--metric", metric("flat.json"), "--format", "json"}).out);
  CHECK(j["results"][0]["weylLeadingTerm"] == true);
}

TEST_CASE("approx digits") {
  const Run r = run({"compute", "--n", "1", "--metric", metric("sphere.json"), "--approx", "8"});
  CHECK(r.out == "1/(12*pi) ~ 0.026525824\n");
}

TEST_CASE("symbolic output") {
  CHECK(run({"compute", "--n", "1", "--mode", "symbolic"}).out ==
        "(rho_u^2 + rho_v^2 - rho*rho_uu - rho*rho_vv) / (24*pi*rho^3)\n");
  CHECK(run({"compute", "--n", "1", "--mode", "symbolic", "--metric", metric("symbolic-a1.json")}).out ==
        "(rho_u^2 + rho_v^2 - rho*rho_uu - rho*rho_vv) / (24*pi*rho^3)\n");
  const Run latex = run({"compute", "--n", "1", "--mode", "symbolic", "--format", "latex"});
  CHECK(latex.out.rfind("\\frac{", 0) == 0);
  const Run named = run({"compute", "--n", "1", "--mode", "symbolic", "--metric", metric("sphere.json")});
  CHECK(named.code == cli::kExitInput);
}

TEST_CASE("json report") {
  const Run r = run({"compute", "--n", "1", "--n", "2", "--metric", metric("sphere.json"), "--format", "json",
                     "--approx", "5"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["path"] == "eq311");
  CHECK(j["metric"] == "sphereStereographic");
  CHECK(j["results"].size() == 2);
  CHECK(j["results"][0]["value"]["q"] == "1/12");
  CHECK(j["results"][0]["value"]["piPower"] == 1);
  CHECK(j["results"][1]["text"] == "1/(60*pi)");
  CHECK(j["results"][1]["approx"] == "0.0053052");
  CHECK(j["results"][1]["truncationOrder"] == 16);
}

TEST_CASE("paths agree on a generic jet") {
  const auto args = [&](const std::string& path) {
    return std::vector<std::string>{"compute", "--n", "1", "--metric", metric("generic.json"), "--path", path};
  };
  const Run direct = run(args("eq311"));
  CHECK(direct.code == 0);
  CHECK(run(args("eq310")).out == direct.out);
  CHECK(run(args("curvature")).out == direct.out);
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args{"compute", "--n", "2", "--mode", "symbolic", "--threads", "4"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("degenerate curvature input exits 3 with an error object") {
  const Run r = run({"compute", "--n", "1", "--metric", metric("sphere.json"), "--path", "curvature", "--format", "json"});
  CHECK(r.code == cli::kExitMath);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"]["code"] == "DegenerateCurvatureCoordinates");
  const Run plain = run({"compute", "--n", "1", "--metric", metric("sphere.json"), "--path", "curvature"});
  CHECK(plain.code == cli::kExitMath);
  CHECK(plain.err.find("DegenerateCurvatureCoordinates") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
  CHECK(run({"compute", "--n", "1"}).code == cli::kExitInput);
  CHECK(run({"compute", "--n", "1", "--metric", "/nonexistent.json"}).code == cli::kExitInput);
  CHECK(run({"compute", "--n", "1", "--metric", metric("flat.json"), "--path", "eq312"}).code == cli::kExitInput);
  CHECK(run({"compute", "--n", "x", "--metric", metric("flat.json")}).code == cli::kExitInput);
  CHECK(run({"compute", "--n", "3", "--metric", metric("small-jet.json")}).code == cli::kExitInput);
  CHECK(run({"compute", "--n", "1", "--metric", metric("flat.json"), "--jet-order", "1"}).code == cli::kExitInput);
  CHECK(run({"frobnicate"}).code == cli::kExitInput);
  CHECK(run({}).code == cli::kExitInput);
}

TEST_CASE("curvature command") {
  const Run sphere = run({"curvature", "--metric", metric("sphere.json")});
  CHECK(sphere.code == 0);
  CHECK(sphere.out.find("K0 = 1\n") != std::string::npos);
  CHECK(sphere.out.find("degenerate = true") != std::string::npos);
  const Run generic = run({"curvature", "--metric", metric("generic.json"), "--format", "json"});
  const auto j = nlohmann::json::parse(generic.out);
  CHECK(j["degenerate"] == false);
  CHECK(j["K0"] == "101/2880");
  CHECK(run({"curvature", "--metric", metric("small-jet.json")}).code == cli::kExitInput);
}

TEST_CASE("verify quick") {
  const Run r = run({"verify", "--level", "quick"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("SKIP [4]") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"verify", "--format", "json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["criteria"].size() == 9);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }
