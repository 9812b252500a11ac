#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmpd/cli/commands.hpp"
#include "gmpd/cli/document.hpp"
#include "gmpd/error.hpp"

using namespace gmpd;
using namespace gmpd::cli;
using enum LocalClass;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Result invoke(std::vector<std::string> args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string &text, const std::string &needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

} // namespace

TEST_CASE("parse_model_document") {
  CHECK(parse_model_document(R"({"counts": {"K1": 1, "K2": 0, "K3": 2, "K4": 0}})") ==
        DomainModel{K1, K3, K3});
  CHECK(parse_model_document(R"({"counts": {"K4": 2, "K1": 1}})") == DomainModel{K1, K4, K4});
  CHECK(parse_model_document(R"({"counts": {}})").is_field());
  CHECK(parse_model_document(R"({"maximal_ideals": ["K4", "K1"]})") == DomainModel{K4, K1});
  CHECK(parse_model_document(R"({"maximal_ideals": []})").is_field());

  CHECK_THROWS_AS(parse_model_document("not json"), input_error);
  CHECK_THROWS_AS(parse_model_document("[1]"), input_error);
  CHECK_THROWS_AS(parse_model_document("{}"), input_error);
  CHECK_THROWS_AS(parse_model_document(R"({"counts": {}, "maximal_ideals": []})"), input_error);
  CHECK_THROWS_AS(parse_model_document(R"({"counts": {}, "extra": 1})"), input_error);
  CHECK_THROWS_AS(parse_model_document(R"({"counts": {"K5": 1}})"), input_error);
  CHECK_THROWS_AS(parse_model_document(R"({"counts": {"K1": -1}})"), input_error);
  CHECK_THROWS_AS(parse_model_document(R"({"counts": {"K1": 1.5}})"), input_error);
  CHECK_THROWS_AS(parse_model_document(R"({"counts": {"K1": "1"}})"), input_error);
  CHECK_THROWS_AS(parse_model_document(R"({"counts": [1, 2]})"), input_error);
  CHECK_THROWS_AS(parse_model_document(R"({"maximal_ideals": ["K1", 4]})"), input_error);
  CHECK_THROWS_AS(parse_model_document(R"({"maximal_ideals": "K1"})"), input_error);
  CHECK_THROWS_AS(parse_model_document(R"({"counts": {"K1": 2000000}})"), resource_limit_error);
}

TEST_CASE("count_json switches to strings past 64 bits") {
  CHECK(count_json(Count(12)) == Json(12));
  Count big = 1;
  for (int i = 0; i < 100; ++i) big *= 3;
  CHECK(count_json(big) == Json("515377520732011331036461129765621272702107522001"));
}

TEST_CASE("count command") {
  SUBCASE("counts form") {
    const auto r = invoke({"count", "--model", R"({"counts": {"K1": 0, "K2": 0, "K3": 0, "K4": 2}})"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["count_report"]["quasi_local_overrings"] == 3);
    CHECK(r.json()["characterization"]["dedekind"] == true);
  }
  SUBCASE("list form from stdin") {
    const auto r = invoke({"count"}, R"({"maximal_ideals": ["K1"]})");
    REQUIRE(r.code == 0);
    CHECK(r.json()["count_report"]["quasi_local_overrings"] == 3);
    CHECK(r.json()["count_report"]["total_overrings"] == 3);
  }
  SUBCASE("unknown tag") {
    const auto r = invoke({"count", "--model", R"({"maximal_ideals": ["K5"]})"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("K5") != std::string::npos);
  }
  SUBCASE("malformed JSON") { CHECK(invoke({"count"}, "{").code == 2); }
  SUBCASE("too many ideals") {
    CHECK(invoke({"count", "--model", R"({"counts": {"K4": 5000000}})"}).code == 3);
  }
  SUBCASE("file input") {
    const auto path = std::filesystem::temp_directory_path() / "gmpd_cli_test_model.json";
    {
      std::ofstream f(path);
      f << R"({"counts": {"K3": 1, "K4": 2}})";
    }
    const auto r = invoke({"count", path.string()});
    std::filesystem::remove(path);
    REQUIRE(r.code == 0);
    CHECK(r.json()["count_report"]["total_overrings"] == 12);
    CHECK(r.json()["mpd"]["total"] == 12);
    CHECK(r.json()["mpd"]["quasi_local"] == 5);
  }
  SUBCASE("missing file") { CHECK(invoke({"count", "/nonexistent/model.json"}).code == 2); }
  SUBCASE("file and inline together") {
    CHECK(invoke({"count", "x.json", "--model", R"({"counts": {}})"}).code == 2);
  }
  SUBCASE("lattice statistics on request") {
    const auto r = invoke({"count", "--lattice-stats", "--model", R"({"maximal_ideals": ["K1", "K4"]})"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["lattice"]["elements"] == 6);
    CHECK(r.json()["lattice"]["quasi_local_elements"] == 4);
    CHECK(r.json()["lattice"]["longest_chain"] == 4);
  }
  SUBCASE("lattice statistics respect the size guard") {
    CHECK(invoke({"count", "--lattice-stats", "--size-guard", "5", "--model",
                  R"({"maximal_ideals": ["K1", "K4"]})"})
              .code == 3);
  }
  SUBCASE("huge totals are exact") {
    const auto r = invoke({"count", "--model", R"({"counts": {"K3": 100}})"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["count_report"]["total_overrings"] ==
          "515377520732011331036461129765621272702107522001");
    CHECK(r.json()["count_report"]["quasi_local_overrings"] == 201);
    CHECK(r.json()["spectrum"]["shape"]["a"] == 100);
  }
}

TEST_CASE("count report golden output") {
  const auto r = invoke({"count", "--model", R"({"maximal_ideals": ["K1", "K4"]})"});
  REQUIRE(r.code == 0);
  CHECK(r.out == R"({
  "model": {
    "maximal_ideals": [
      "K1",
      "K4"
    ],
    "counts": {
      "K1": 1,
      "K2": 0,
      "K3": 0,
      "K4": 1
    }
  },
  "count_report": {
    "total_overrings": 6,
    "quasi_local_overrings": 4,
    "max_count": 2,
    "counts": {
      "n1": 1,
      "n2": 0,
      "n3": 0,
      "n4": 1
    }
  },
  "characterization": {
    "noetherian": true,
    "prufer": false,
    "dedekind": false,
    "count_noetherian_formula": 4,
    "count_prufer_formula": 2,
    "count_dedekind_formula": 2
  },
  "mpd": {
    "is_mpd": true,
    "total": 6,
    "quasi_local": 4
  },
  "spectrum": {
    "elements": 3,
    "maximal_ideals": 2,
    "shape": {
      "a": 0,
      "b": 2
    }
  }
}
)");
  CHECK(invoke({"count", "--model", R"({"maximal_ideals": ["K1", "K4"]})"}).out == r.out);
}

TEST_CASE("lattice command") {
  SUBCASE("DVR") {
    const auto r = invoke({"lattice", "--emit", "dot", "--model", R"({"maximal_ideals": ["K4"]})"});
    REQUIRE(r.code == 0);
    CHECK(count_of(r.out, "[label=") == 2);
    CHECK(count_of(r.out, "->") == 1);
  }
  SUBCASE("3x2 grid") {
    const auto r =
        invoke({"lattice", "--emit", "dot", "--model", R"({"maximal_ideals": ["K1", "K4"]})"});
    REQUIRE(r.code == 0);
    CHECK(r.out.starts_with("digraph overrings {"));
    CHECK(count_of(r.out, "[label=") == 6);
    CHECK(count_of(r.out, "->") == 7);
    CHECK(r.out.find("n4 [label=\"2,0\"];") != std::string::npos);
  }
  SUBCASE("size guard") {
    const auto r = invoke({"lattice", "--model", R"({"counts": {"K3": 13}})"});
    CHECK(r.code == 3);
    CHECK(r.err.find("lattice too large") != std::string::npos);
  }
  SUBCASE("size guard is configurable") {
    const std::string grid = R"({"maximal_ideals": ["K1", "K4"]})";
    CHECK(invoke({"lattice", "--size-guard", "5", "--model", grid}).code == 3);
    CHECK(invoke({"lattice", "--size-guard", "6", "--model", grid}).code == 0);
  }
  SUBCASE("json") {
    const auto r = invoke({"lattice", "--model", R"({"maximal_ideals": ["K1", "K4"]})"});
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["elements"] == 6);
    CHECK(j["covers"] == 7);
    CHECK(j["quasi_local_elements"] == 4);
    CHECK(j["longest_chain"] == 4);
    CHECK(j["closure_of_bottom"] == Json::array({1, 0}));
    CHECK(j["nodes"].size() == 6);
    CHECK(j["edges"].size() == 7);
  }
  SUBCASE("bad emit value") {
    CHECK(invoke({"lattice", "--emit", "svg", "--model", R"({"counts": {}})"}).code == 2);
  }
}

TEST_CASE("enum-spec command") {
  SUBCASE("n = 6") {
    const auto r = invoke({"enum-spec", "6"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["shape_count"] == 3);
    CHECK_FALSE(r.json().contains("oracle"));
  }
  SUBCASE("n = 1") {
    const auto r = invoke({"enum-spec", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["shape_count"] == 1);
    CHECK(r.json()["shapes"][0]["realizing_model"] == Json::array());
  }
  SUBCASE("n = 7 with the oracle") {
    const auto r = invoke({"enum-spec", "7", "--oracle"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["shape_count"] == 4);
    CHECK(r.json()["oracle"]["classes"] == 4);
    CHECK(r.json()["oracle"]["agree"] == true);
  }
  SUBCASE("oracle bound") {
    CHECK(invoke({"enum-spec", "10", "--oracle"}).code == 3);
    CHECK(invoke({"enum-spec", "6", "--oracle", "--bound", "5"}).code == 3);
    CHECK(invoke({"enum-spec", "10"}).code == 0);
  }
  SUBCASE("n = 0") { CHECK(invoke({"enum-spec", "0"}).code == 2); }
  SUBCASE("not a number") { CHECK(invoke({"enum-spec", "five"}).code == 2); }
  SUBCASE("dot") {
    const auto r = invoke({"enum-spec", "5", "--emit", "dot"});
    REQUIRE(r.code == 0);
    CHECK(count_of(r.out, "digraph") == 3);
    CHECK(r.out.find("digraph shape_2_0 {") != std::string::npos);
  }
}

TEST_CASE("verify command") {
  SUBCASE("35 models up to three maximal ideals") {
    const auto r = invoke({"verify", "--max-maximals", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["models_checked"] == 35);
    CHECK(r.json()["result"] == "pass");
  }
  SUBCASE("the field alone") {
    const auto r = invoke({"verify", "--max-maximals", "0"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["models_checked"] == 1);
  }
  SUBCASE("default range") {
    const auto r = invoke({"verify"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["models_checked"] == 495);
    CHECK(r.json()["checks_failed"] == 0);
  }
  SUBCASE("a too-small size guard is reported as failures") {
    const auto r = invoke({"verify", "--max-maximals", "2", "--size-guard", "4"});
    CHECK(r.code == 1);
    CHECK(r.json()["result"] == "fail");
    CHECK(r.err.find("counterexample") != std::string::npos);
  }
}

TEST_CASE("argument errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"verify", "--max-maximals", "-1"}).code == 2);
  const auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("enum-spec") != std::string::npos);
}
