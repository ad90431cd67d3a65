#include "dpl/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using dpl::cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dpl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(DPL_SOURCE_DIR) + "/data/" + rel; }

}  // namespace

TEST_CASE("analyze reports") {
  const Run r = run({"--format", "json", "analyze", data("maps/two_cover.json")});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["version"] == "dpl 0.1.0");
  CHECK(j["input_digest"].get<std::string>().size() == 64);
  CHECK(j["result"]["hopf"] == 1);
  CHECK(j["result"]["sigma"]["components"].size() == 1);
  CHECK(j["result"]["sigma"]["components"][0]["tau_invariant"] == true);
  CHECK(j["result"]["realizability"]["criterion_pass"] == false);

  const Run id = run({"--format", "json", "analyze", data("maps/identity.json")});
  const Json k = Json::parse(id.out);
  CHECK(k["result"]["sigma"]["components"].empty());
  CHECK_FALSE(k["result"]["realizability"]["notes"].get<std::string>().empty());

  const Run text = run({"analyze", data("maps/two_cover.json")});
  CHECK(text.out == j["summary"].get<std::string>() + "\n");
}

TEST_CASE("input errors exit with 2 and a diagnostic") {
  const Run bad = run({"analyze", data("maps/bad_fraction.json")});
  CHECK(bad.code == 2);
  const Json d = Json::parse(bad.err);
  CHECK(d["error"]["kind"] == "ParseError");
  CHECK(run({"analyze", data("maps/missing.json")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"unfold", data("maps/tent.json"), "--arc", "0", "1/3"}).code == 2);
  CHECK(run({"group"}).code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::string> args{"--format", "json", "unfold", data("maps/four_fold.json"), "--arc", "1/2", "3/5"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> st{"--format", "json", "selftest", "--cases", "5", "--seed", "7"};
  CHECK(run(st).out == run(st).out);
}

TEST_CASE("unfold, hopf, group, dcover-check and sweep") {
  const Json u = Json::parse(run({"--format", "json", "unfold", data("maps/tent.json"), "--arc", "1/4", "3/8"}).out);
  CHECK(u["result"]["final_arc"] == Json::array({"-1/8", "3/8"}));
  CHECK(u["result"]["trace"].size() == 2);
  CHECK(u["result"]["verification"]["negative"] == 0);

  const Json rv = Json::parse(run({"--format", "json", "unfold", data("maps/four_fold.json"), "--arc", "1/2", "3/5",
                                   "--mode", "regular-value", "--z", "11/20"})
                                  .out);
  CHECK(rv["result"]["verification"]["z_components_positive_or_circle"] == true);

  const Json cover = Json::parse(run({"--format", "json", "unfold", data("maps/two_cover.json"), "--arc", "1/10", "1/3"}).out);
  CHECK(cover["result"]["trace"].size() == 1);

  const Json h = Json::parse(run({"--format", "json", "hopf", data("polygons/figure8.json")}).out);
  CHECK(h["result"]["parity"] == 1);

  const Json g = Json::parse(run({"--format", "json", "group", "--family", "binary_dihedral", "--parameter", "2"}).out);
  CHECK(g["result"]["group"]["order"] == 8);
  CHECK(g["result"]["group"]["involutions"] == 1);
  CHECK(g["result"]["group"]["realizable"] == false);
  CHECK(g["result"]["group"]["hopf"] == 1);
  const Json gf = Json::parse(run({"--format", "json", "group", "--table", data("groups/quaternion.json")}).out);
  CHECK(gf["result"]["group"]["order"] == 8);
  const Json inf = Json::parse(run({"--format", "json", "group", "--family", "infinite"}).out);
  CHECK(inf["result"]["group"]["theorem4_verdict"] == false);
  const Json seven =
      Json::parse(run({"--format", "json", "group", "--family", "cyclic", "--parameter", "4", "--dimension", "7"}).out);
  CHECK(seven["result"]["evaluated"] == false);

  const Run dc = run({"dcover-check"});
  CHECK(dc.code == 0);

  const Run sw = run({"--format", "json", "sweep", "--example6"});
  REQUIRE(sw.code == 0);
  const Json s = Json::parse(sw.out);
  CHECK(s["result"]["census"]["initial_components"] == 4);
  CHECK(s["result"]["census"]["surgeries"] == 15);
  CHECK(s["result"]["census"]["final_components"] == 12);
  CHECK(s["result"]["census"]["min_nonorientable"] == 1);
  CHECK(s["result"]["certificate"]["passed"] == true);
}

TEST_CASE("selftest tallies") {
  const Run r = run({"--format", "json", "selftest", "--cases", "20", "--seed", "7"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  for (const Json& p : j["result"]["properties"]) CHECK(p["passed"] == p["checked"]);
  CHECK(j["result"]["violations"].empty());
}
