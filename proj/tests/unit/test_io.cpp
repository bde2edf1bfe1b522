#include <filesystem>

#include "doctest.h"
#include "trigor/io/examples.hpp"
#include "trigor/io/fixture.hpp"
#include "trigor/io/report.hpp"
#include "trigor/algebra/decompose.hpp"
#include "trigor/trimat/triangle.hpp"

using namespace trigor::io;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> fixture_files() {
  std::vector<fs::path> v;
  for (const auto& e : fs::directory_iterator(TRIGOR_FIXTURE_DIR))
    if (e.path().extension() == ".json") v.push_back(e.path());
  std::sort(v.begin(), v.end());
  return v;
}

const char* kSmall = R"({
  "name": "small", "field": {"GF": 3},
  "algebras": {"R": {"vertices": ["1", "2"], "arrows": [{"name": "a", "source": "1", "target": "2"}]}},
  "bimodules": {"U": {"regular": "R"}},
  "triangle": {"A": "R", "B": "R", "U": "U"},
  "modules": {
    "M": {"over": "R", "dims": [1, 1], "maps": {"a": [["2"]]}},
    "P": {"over": "R", "standard": "simple", "vertex": "2"},
    "X": {"m1": "M", "m2": "P", "phi": [[["0", "0"]], [["0", "0"]], [["0", "0"]]]}
  },
  "tasks": [{"id": "pd", "op": "pd", "module": "M", "expect": "0"}]
})";

std::string expect_error(const std::string& text) {
  try {
    build_workspace(parse_fixture(text));
  } catch (const FixtureError& e) {
    return e.where + " | " + e.what();
  }
  return "";
}

std::string replaced(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("fixtures round-trip") {
  auto files = fixture_files();
  REQUIRE(files.size() >= 6);
  for (const auto& f : files) {
    CAPTURE(f.string());
    auto d = load_fixture(f.string());
    auto again = parse_fixture(serialize_fixture(d));
    CHECK(again == d);
    CHECK(serialize_fixture(again) == serialize_fixture(d));
    CHECK(fixture_digest(again) == fixture_digest(d));
    CHECK_NOTHROW(build_workspace(d));
  }
}

TEST_CASE("built-in examples match the files") {
  for (const auto& id : example_ids()) {
    CAPTURE(id);
    CHECK(example_fixture(id) == load_fixture((fs::path(TRIGOR_FIXTURE_DIR) / (id + ".json")).string()));
    CHECK(!example_fields(id).empty());
  }
  CHECK(example_fields("p-not-w-tilting") == std::vector<std::uint32_t>{2, 3});
  CHECK_THROWS_AS(example_fixture("nope"), std::invalid_argument);
  CHECK_THROWS_AS(reproduce_example("nope"), std::invalid_argument);
}

TEST_CASE("workspace builds triples from per-vector phi") {
  auto ws = build_workspace(parse_fixture(kSmall));
  CHECK(ws.field.p == 3);
  CHECK(ws.module("M").dims() == std::vector<std::size_t>{1, 1});
  const auto& x = ws.triple("X");
  CHECK(x.m1.total_dim() == 2);
  CHECK(x.m2.total_dim() == 1);
  CHECK(ws.module("X").total_dim() == 3);
  CHECK_THROWS_AS(ws.module("nope"), FixtureError);
  CHECK_THROWS_AS(ws.triple("M"), FixtureError);
}

TEST_CASE("multiplication triple is p(R, 0)") {
  auto ws = build_workspace(parse_fixture(R"({
    "name": "mult", "field": {"GF": 2},
    "algebras": {"R": {"vertices": ["1"], "arrows": [{"name": "x", "source": "1", "target": "1"}],
                       "relations": [[{"path": ["x", "x"]}]]}},
    "bimodules": {"U": {"regular": "R"}},
    "triangle": {"A": "R", "B": "R", "U": "U"},
    "modules": {
      "R": {"over": "R", "standard": "regular"},
      "Z": {"over": "R", "standard": "zero"},
      "X": {"m1": "R", "m2": "R", "phi": [[["1", "0"], ["0", "1"]], [["0", "0"], ["1", "0"]]]},
      "Y": {"m1": "R", "m2": "R", "phi": [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]},
      "P": {"functor": "p", "args": ["R", "Z"]}
    }
  })"));
  CHECK(trigor::algebra::is_projective(ws.module("X")));
  CHECK(trigor::algebra::is_isomorphic(ws.module("X"), ws.module("P")));
  CHECK(!trigor::algebra::is_projective(ws.module("Y")));

  const std::string bad = R"({
    "name": "bad", "field": {"GF": 2},
    "algebras": {"R": {"vertices": ["1"], "arrows": [{"name": "x", "source": "1", "target": "1"}],
                       "relations": [[{"path": ["x", "x"]}]]}},
    "bimodules": {"U": {"regular": "R"}},
    "triangle": {"A": "R", "B": "R", "U": "U"},
    "modules": {
      "R": {"over": "R", "standard": "regular"},
      "X": {"m1": "R", "m2": "R", "phi": [[["1", "0"], ["0", "1"]], [["1", "0"], ["0", "1"]]]}
    }
  })";
  CHECK(expect_error(bad).rfind("modules.X", 0) == 0);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_fixture("{\n  \"field\": \"Q\",\n  \"algebras\": {,}\n}");
    FAIL("no error");
  } catch (const FixtureError& e) {
    CHECK(e.where == "line 3, column 16");
  }
}

TEST_CASE("validation errors name the offending key") {
  CHECK(expect_error(replaced(kSmall, "\"dims\": [1, 1]", "\"dims\": [1, 2]")).rfind("modules.M", 0) == 0);
  CHECK(expect_error(replaced(kSmall, "[[\"2\"]]", "[[\"2\", \"1\"]]")).rfind("modules.M", 0) == 0);
  CHECK(expect_error(replaced(kSmall, "\"m2\": \"P\"", "\"m2\": \"Q\"")).find("Q") != std::string::npos);
  CHECK(expect_error(replaced(kSmall, "\"vertex\": \"2\"", "\"vertex\": \"7\"")).rfind("modules.P", 0) == 0);
  CHECK(expect_error(replaced(kSmall, "\"over\": \"R\", \"dims\"", "\"over\": \"S\", \"dims\"")).rfind("modules.M", 0) == 0);
  CHECK(expect_error(replaced(kSmall, "[[\"0\", \"0\"]], ", "")).rfind("modules.X", 0) == 0);
  CHECK(expect_error(replaced(kSmall, "\"name\": \"small\"", "\"name\": \"small\", \"extra\": 1")).find("extra") !=
        std::string::npos);
  CHECK(expect_error(replaced(kSmall, "{\"GF\": 3}", "{\"GF\": 4}")).rfind("field", 0) == 0);
  CHECK(expect_error(replaced(kSmall, "[\"2\"]", "[\"x\"]")).rfind("modules.M", 0) == 0);

  const std::string cyclic = replaced(kSmall, "\"P\": {\"over\": \"R\", \"standard\": \"simple\", \"vertex\": \"2\"}",
                                      "\"P\": {\"sum\": [\"Y\"]}, \"Y\": {\"sum\": [\"P\"]}");
  CHECK(expect_error(cyclic).find("circular") != std::string::npos);
}

TEST_CASE("runner semantics") {
  RunOptions opt;
  auto empty = parse_fixture(R"({"name": "e", "field": {"GF": 2}, "tasks": []})");
  auto r = run_fixture(empty, opt);
  CHECK(r.tasks.empty());
  CHECK(r.ok());
  CHECK(exit_status(r) == 0);

  auto doc = parse_fixture(kSmall);
  CHECK(exit_status(run_fixture(doc, opt)) == 0);

  auto wrong = doc;
  wrong.tasks[0].params["expect"] = "1";
  auto rw = run_fixture(wrong, opt);
  CHECK(exit_status(rw) == 1);
  REQUIRE(rw.tasks.size() == 1);
  CHECK(rw.tasks[0].report.claims[0].lhs == "0");
  CHECK(rw.tasks[0].report.claims[0].rhs == "1");

  auto bad_op = doc;
  bad_op.tasks[0].op = "frobnicate";
  CHECK_THROWS_AS(run_fixture(bad_op, opt), FixtureError);

  opt.task_filter = {"missing"};
  CHECK_THROWS_AS(run_fixture(doc, opt), FixtureError);

  auto no_module = doc;
  no_module.tasks[0].params["module"] = "nope";
  opt.task_filter.clear();
  auto rn = run_fixture(no_module, opt);
  CHECK(!rn.tasks[0].error.empty());
  CHECK(exit_status(rn) == 1);
}

TEST_CASE("reports are deterministic") {
  auto d = example_fixture("p-not-w-tilting");
  auto a = report_json(run_fixture(d, {}), false).dump();
  auto b = report_json(run_fixture(d, {}), false).dump();
  CHECK(a == b);
  CHECK(a.find("seconds") == std::string::npos);
  CHECK(report_json(run_fixture(d, {}), true).dump().find("seconds") != std::string::npos);
}

TEST_CASE("every assertion carries both sides") {
  for (const auto& id : example_ids())
    for (const auto& run : reproduce_example(id)) {
      CAPTURE(id);
      CHECK(run.ok());
      auto j = report_json(run, false);
      for (const auto& t : j["tasks"])
        for (const auto& c : t["report"]["claims"])
          if (c["status"] != "skipped") {
            CHECK(c.contains("lhs"));
            CHECK(c.contains("rhs"));
          }
    }
}

TEST_CASE("matrix specs round-trip exact scalars") {
  auto q = trigor::linalg::Field::rationals();
  MatrixSpec s{{"3/2", "-1"}, {"0", "7"}};
  CHECK(matrix_to_spec(matrix_from_spec(q, 2, 2, s, "m")) == s);
  CHECK_THROWS_AS(matrix_from_spec(q, 3, 2, s, "m"), FixtureError);
  auto f5 = trigor::linalg::Field::prime(5);
  CHECK(matrix_to_spec(matrix_from_spec(f5, 1, 2, {{"7", "1/2"}}, "m")) == MatrixSpec{{"2", "3"}});
}
