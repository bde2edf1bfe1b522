#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "trigor/io/examples.hpp"
#include "trigor/io/fixture.hpp"
#include "trigor/io/report.hpp"
#include "trigor/oracle/enumerate.hpp"
#include "trigor/oracle/exhaustive.hpp"

using namespace trigor;
using io::Json;

namespace {

constexpr int kUsage = 2;

// Triangles for verify-theorem when no fixture is given. Both take U = R as a bimodule.
const char* kDual = R"({
  "name": "dual-numbers", "field": {"GF": 3},
  "algebras": {"R": {"vertices": ["1"], "arrows": [{"name": "x", "source": "1", "target": "1"}],
                     "relations": [[{"path": ["x", "x"]}]]}},
  "bimodules": {"U": {"regular": "R"}},
  "triangle": {"A": "R", "B": "R", "U": "U"}
})";
const char* kA2 = R"({
  "name": "a2", "field": {"GF": 2},
  "algebras": {"R": {"vertices": ["1", "2"], "arrows": [{"name": "alpha", "source": "1", "target": "2"}]}},
  "bimodules": {"U": {"regular": "R"}},
  "triangle": {"A": "R", "B": "R", "U": "U"}
})";

struct Theorem {
  std::string op, property;
};

const std::map<std::string, Theorem>& theorems() {
  static const std::map<std::string, Theorem> m = [] {
    std::map<std::string, Theorem> t;
    for (const auto& id : oracle::property_ids()) t[id] = {"exhaustive", id};
    t["compatibility"] = {"compatibility", ""};
    t["wtilting-transfer"] = {"wtilting-transfer", ""};
    t["cm-free"] = {"cm-free", ""};
    t["special-precover"] = {"precovers", ""};
    t["global-bounds"] = {"global-bounds", ""};
    t["tr-formula"] = {"tr-formula", ""};
    return t;
  }();
  return m;
}

std::string theorem_list() {
  std::string s;
  for (const auto& [k, v] : theorems()) s += (s.empty() ? "" : ", ") + k;
  return s;
}

struct Output {
  std::string format = "text";
  std::string path;
  bool timings = true;
};

void emit(const std::vector<io::RunReport>& runs, const Output& out) {
  std::string body;
  if (out.format == "json") {
    Json all = Json::array();
    for (const auto& r : runs) all.push_back(io::report_json(r, out.timings));
    body = (runs.size() == 1 ? all[0] : all).dump(2) + "\n";
  } else {
    for (const auto& r : runs) body += io::report_text(r);
  }
  if (out.path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out.path);
    if (!f) throw std::runtime_error("cannot write " + out.path);
    f << body;
  }
  for (const auto& r : runs)
    if (r.indefinite())
      std::cerr << "warning: " << r.fixture << ": " << r.indefinite() << " claim(s) inconclusive at the bound\n";
}

int status(const std::vector<io::RunReport>& runs) {
  for (const auto& r : runs)
    if (!r.ok()) return 1;
  return 0;
}

io::FixtureDocument load_doc(const std::string& what) {
  for (const auto& id : io::example_ids())
    if (id == what) return io::example_fixture(id);
  return io::load_fixture(what);
}

void add_output(CLI::App* sub, Output& out) {
  sub->add_option("--format", out.format, "report format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("-o,--output", out.path, "write the report to a file");
  sub->add_flag("!--no-timings", out.timings, "omit timings from JSON reports");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trigor: relative Gorenstein homological algebra over triangular matrix rings"};
  app.require_subcommand(1);

  io::RunOptions opt;
  app.add_option("--bound", opt.bound, "search bound for semi-decisions")->capture_default_str();
  app.add_option("--cap", opt.cap, "enumeration cap, e.g. 2 or 2,2|2,2");
  app.add_option("--seed", opt.seed, "seed for randomized isomorphism search over Q");
  app.add_option("--work-limit", opt.work_limit, "refuse enumerations estimated above this many candidates")
      ->envname("TRIGOR_WORK_LIMIT");

  Output out;
  std::string fixture;
  std::vector<std::string> ids;

  auto* run = app.add_subcommand("run", "execute the tasks of a fixture");
  run->add_option("fixture", fixture, "fixture file or built-in example id")->required();
  run->add_option("--task", opt.task_filter, "run only these task ids");
  add_output(run, out);

  auto* report = app.add_subcommand("report", "execute a fixture and print its full report");
  report->add_option("fixture", fixture, "fixture file or built-in example id")->required();
  report->add_option("--task", opt.task_filter, "run only these task ids");
  add_output(report, out);

  auto* repro = app.add_subcommand("reproduce-example", "run built-in examples over all their fields");
  repro->add_option("ids", ids, "example ids or all")->required();
  add_output(repro, out);

  std::string algebra = "T";
  auto* enumerate = app.add_subcommand("enumerate", "list modules up to isomorphism within the cap");
  enumerate->add_option("fixture", fixture, "fixture file or built-in example id")->required();
  enumerate->add_option("--algebra", algebra, "algebra name; T for the triangle")->capture_default_str();

  std::string module, c_module;
  auto* gcpd = app.add_subcommand("gcpd", "G_C-projective dimension of a fixture module");
  gcpd->add_option("fixture", fixture, "fixture file or built-in example id")->required();
  gcpd->add_option("--module", module, "module name")->required();
  gcpd->add_option("--c", c_module, "the module C")->required();
  add_output(gcpd, out);

  std::string theorem, triangle = "dual", c1, c2;
  auto* verify = app.add_subcommand("verify-theorem", "check a theorem exhaustively within the cap");
  verify->add_option("id", theorem, "one of: " + theorem_list())->required();
  verify->add_option("--triangle", triangle, "built-in triangle when no fixture is given")
      ->check(CLI::IsMember({"dual", "a2"}))
      ->capture_default_str();
  verify->add_option("--fixture", fixture, "fixture supplying the triangle and modules");
  verify->add_option("--c1", c1, "fixture module C1 (default: regular)");
  verify->add_option("--c2", c2, "fixture module C2 (default: regular)");
  add_output(verify, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (run->parsed() || report->parsed()) {
      if (report->parsed() && !report->count("--format")) out.format = "json";
      auto doc = load_doc(fixture);
      std::vector<io::RunReport> runs{io::run_fixture(doc, opt)};
      emit(runs, out);
      return status(runs);
    }
    if (repro->parsed()) {
      if (ids.size() == 1 && ids[0] == "all") ids = io::example_ids();
      std::vector<io::RunReport> runs;
      for (const auto& id : ids)
        for (auto& r : io::reproduce_example(id, opt)) runs.push_back(std::move(r));
      emit(runs, out);
      return status(runs);
    }
    if (enumerate->parsed()) {
      auto ws = io::build_workspace(load_doc(fixture));
      const auto& a = ws.algebra(algebra);
      if (opt.cap.empty()) throw std::invalid_argument("enumerate needs --cap");
      auto mods = oracle::enumerate_modules(a, oracle::EnumerationCap::parse(opt.cap, a), opt.work_limit);
      std::cout << mods.size() << " isomorphism classes within cap " << opt.cap << "\n";
      for (const auto& m : mods) std::cout << "  " << m.describe() << "\n";
      return 0;
    }
    if (gcpd->parsed()) {
      auto doc = load_doc(fixture);
      doc.tasks = {{"gcpd", "gcpd", Json{{"module", module}, {"c", c_module}}}};
      std::vector<io::RunReport> runs{io::run_fixture(doc, opt)};
      emit(runs, out);
      return status(runs);
    }
    if (verify->parsed()) {
      auto it = theorems().find(theorem);
      if (it == theorems().end()) throw std::invalid_argument("unknown theorem id \"" + theorem + "\"; known: " + theorem_list());
      io::FixtureDocument doc = fixture.empty() ? io::parse_fixture(triangle == "a2" ? kA2 : kDual) : load_doc(fixture);
      if (opt.cap.empty()) opt.cap = fixture.empty() ? (triangle == "a2" ? "2,2|2,2" : "2|2") : "";
      Json params = Json::object();
      if (!it->second.property.empty()) params["property"] = it->second.property;
      if (!c1.empty()) params["c1"] = c1;
      if (!c2.empty()) params["c2"] = c2;
      if (it->second.op == "tr-formula") {
        if (!doc.triangle) throw std::invalid_argument("the fixture has no triangle");
        params["algebra"] = doc.triangle->a;
        if (!c1.empty()) params.erase("c2");
      }
      doc.tasks = {{theorem, it->second.op, params}};
      std::vector<io::RunReport> runs{io::run_fixture(doc, opt)};
      emit(runs, out);
      return status(runs);
    }
  } catch (const io::FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
