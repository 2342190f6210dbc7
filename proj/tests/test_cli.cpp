#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "arrlab/arrangement.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace arrlab;
using namespace arrlab::testing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("certify-hurewicz on the Boolean fixture") {
  // uniform thirds give weight -1 at infinity: resonant
  auto res = run({"certify-hurewicz", data_path("boolean3.json"), "--local-system", data_path("thirds3.json")});
  CHECK(res.code == 2);
  CHECK(has(res.err, "violation: edge {H_inf}  channel 1  sum -1"));

  auto r = run({"certify-hurewicz", data_path("boolean3.json"), "--local-system",
                data_path("boolean3_nonresonant.json")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "surjective: true"));
  CHECK(has(r.out, "generators 1 = 0 + 1"));
}

TEST_CASE("check-nonresonant reports resonance with exit 2") {
  auto r = run({"check-nonresonant", data_path("gp4.json"), "--local-system", data_path("quarters.json")});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(has(r.err, "violation: edge {H_inf}  channel 1  sum -1"));

  auto ok = run({"check-nonresonant", data_path("gp4.json"), "--local-system", data_path("thirds.json")});
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "nonresonant: true"));
  CHECK(has(ok.out, "diagonal"));
}

TEST_CASE("betti both methods") {
  auto r = run({"betti", data_path("boolean3.json"), "--method", "both"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "moebius: (1,3,3,1)"));
  CHECK(has(r.out, "nbc: (1,3,3,1)"));
  CHECK(has(r.out, "verdict: match"));
  auto n = run({"betti", data_path("gp4.json"), "--method", "nbc"});
  CHECK(n.out == "nbc: (1,4,6,4)\n");
}

TEST_CASE("homology commands on the general position fixture") {
  auto h = run({"homology", data_path("gp4.json"), "--local-system", data_path("thirds.json"), "--format", "json"});
  REQUIRE(h.code == 0);
  auto doc = nlohmann::json::parse(h.out);
  CHECK(doc["full_complement"]["dims"] == nlohmann::json({0, 0, 0, 1}));
  CHECK(doc["generic_section"]["dims"] == nlohmann::json({0, 0, 3}));
  CHECK(doc.contains("summary"));

  auto c = run({"certify-hurewicz", data_path("gp4.json"), "--local-system", data_path("thirds_rank2.json"),
                "--format", "json"});
  REQUIRE(c.code == 0);
  auto cd = nlohmann::json::parse(c.out);
  CHECK(cd["generators"] == 8);
  CHECK(cd["kernel_dim"] == 2);
  CHECK(cd["image_dim"] == 6);
  CHECK(cd["surjective"] == true);

  for (const char* cmd : {"homology", "certify-hurewicz"}) {
    auto res = run({cmd, data_path("gp4.json"), "--local-system", data_path("quarters.json")});
    CHECK(res.code == 2);
    CHECK(res.out.empty());
  }
}

TEST_CASE("simple reports") {
  auto info = run({"info", data_path("gp4.json")});
  CHECK(info.code == 0);
  CHECK(has(info.out, "rank profile: (1,4,6,4)"));
  CHECK(has(info.out, "chi(t) = t^3 - 4t^2 + 6t - 4"));

  auto poset = run({"poset", data_path("boolean3.json")});
  CHECK(poset.code == 0);
  CHECK(has(poset.out, "rank 0  set {}  dim 3  mu 1\n"));
  CHECK(has(poset.out, "rank 3  set {1,2,3}  dim 0  mu -1\n"));

  auto ep = run({"euler-positivity", data_path("gp4.json")});
  CHECK(has(ep.out, "positive: true"));
  auto hom = run({"homotopy", data_path("gp4.json"), "--k", "2"});
  CHECK(has(hom.out, "k 2  euler 3  nonvanishing true"));

  auto de = run({"dense-edges", data_path("parallel_pair_transversal.json")});
  CHECK(has(de.out, "edge {x0,x1,H_inf}  rank 2  dense true"));
  CHECK(has(de.out, "edge {y0,H_inf}  rank 2  dense false"));
}

TEST_CASE("section emits a parseable arrangement whose poset truncates correctly") {
  auto r = run({"section", data_path("gp4.json"), "--seed", "3"});
  REQUIRE(r.code == 0);
  Arrangement s = parse_arrangement(r.out);
  CHECK(s.dim() == 2);
  CHECK(s.size() == 4);
  CHECK(r.out == run({"section", data_path("gp4.json"), "--seed", "3"}).out);

  // iterate the pipeline through a file
  auto path = write_temp("arrlab_section.json", r.out);
  auto again = run({"section", path, "--seed", "1"});
  REQUIRE(again.code == 0);
  CHECK(parse_arrangement(again.out).dim() == 1);
}

TEST_CASE("oracle-check passes on fixtures") {
  for (const char* f : {"boolean3.json", "gp4.json", "parallel_pair_transversal.json"}) {
    auto r = run({"oracle-check", data_path(f)});
    CHECK(r.code == 0);
    CHECK(has(r.out, "verdict: pass"));
    CHECK_FALSE(has(r.out, ": fail"));
  }
  auto gated = run({"oracle-check", data_path("gp4.json"), "--oracle-bound", "2"});
  CHECK(has(gated.out, "whitney: skipped"));
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* cmd : {"poset", "dense-edges", "info", "oracle-check"}) {
    auto a = run({cmd, data_path("gp4.json"), "--format", "json", "--seed", "9"});
    auto b = run({cmd, data_path("gp4.json"), "--format", "json", "--seed", "9"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::accept(a.out));
  }
}

TEST_CASE("exit codes for input and domain errors") {
  CHECK(run({"info", "/nonexistent/file.json"}).code == 1);
  CHECK(run({"info", write_temp("arrlab_bad.json", "{\"dim\": 2, \"hyperplanes\": [{\"normal\": [\"1\"]}]}")}).code == 1);
  CHECK(run({"homology", data_path("gp4.json"), "--local-system", data_path("thirds3.json")}).code == 1);
  CHECK(run({"homology", data_path("gp4.json")}).code == 1);  // missing required flag
  CHECK(run({"frobnicate", data_path("gp4.json")}).code == 1);

  auto non_ess = write_temp("arrlab_nonessential.json",
                            R"({"dim":2,"hyperplanes":[{"normal":["1","0"]},{"normal":["1","0"],"offset":"1"}]})");
  auto e = run({"euler-positivity", non_ess});
  CHECK(e.code == 2);
  CHECK(e.out.empty());
  CHECK(has(e.err, "NotEssential"));
  CHECK(run({"homotopy", data_path("gp4.json"), "--k", "5"}).code == 2);

  auto j = run({"euler-positivity", non_ess, "--format", "json"});
  CHECK(nlohmann::json::parse(j.err)["error"] == "NotEssential");
}
