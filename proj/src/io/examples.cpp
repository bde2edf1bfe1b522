#include "trigor/io/examples.hpp"

#include <stdexcept>
#include <utility>

namespace trigor::io {

namespace {

const std::vector<std::pair<std::string, std::string>>& table() {
  static const std::vector<std::pair<std::string, std::string>> t{
#include "examples.inc"
  };
  return t;
}

}  // namespace

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, text] : table()) out.push_back(id);
    return out;
  }();
  return ids;
}

FixtureDocument example_fixture(const std::string& id) {
  for (const auto& [name, text] : table())
    if (name == id) return parse_fixture(text);
  std::string known;
  for (const auto& k : example_ids()) known += (known.empty() ? "" : ", ") + k;
  throw std::invalid_argument("unknown example \"" + id + "\" (known: " + known + ")");
}

std::vector<std::uint32_t> example_fields(const std::string& id) {
  const FixtureDocument doc = example_fixture(id);
  if (id == "p-not-w-tilting") return {doc.characteristic, 3};
  return {doc.characteristic};
}

std::vector<RunReport> reproduce_example(const std::string& id, const RunOptions& opt) {
  FixtureDocument doc = example_fixture(id);
  std::vector<RunReport> out;
  for (auto p : example_fields(id)) {
    doc.characteristic = p;
    RunReport r = run_fixture(doc, opt);
    r.fixture = id + (p == 0 ? " over Q" : " over GF(" + std::to_string(p) + ")");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace trigor::io
