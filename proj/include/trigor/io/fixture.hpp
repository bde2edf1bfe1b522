#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "trigor/trimat/triangle.hpp"

namespace trigor::io {

using Json = nlohmann::json;

// Parse or validation error; `where` is "line L, column C" for syntax errors and a key path otherwise.
class FixtureError : public std::runtime_error {
 public:
  FixtureError(std::string where, const std::string& what);
  std::string where;
};

// Row-major rows of exact scalars as strings ("3/2", "1").
using MatrixSpec = std::vector<std::vector<std::string>>;

struct ArrowSpec {
  std::string name, source, target;
  bool operator==(const ArrowSpec&) const = default;
};
struct PathTermSpec {
  std::vector<std::string> path;  // arrow names in traversal order
  std::string coeff = "1";
  bool operator==(const PathTermSpec&) const = default;
};
struct AlgebraSpec {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<std::vector<PathTermSpec>> relations;
  bool operator==(const AlgebraSpec&) const = default;
};

// Either {"regular": R} or explicit actions: left_action[i] is dim x dim for basis element i of `left`.
struct BimoduleSpec {
  std::string regular;
  std::string left, right;
  std::size_t dim = 0;
  std::vector<MatrixSpec> left_action, right_action;
  bool operator==(const BimoduleSpec&) const = default;
};

struct TriangleSpec {
  std::string a, b, u;
  bool operator==(const TriangleSpec&) const = default;
};

// kind is one of
//   "rep"      {over, dims, maps: arrow -> matrix}
//   "triple"   {m1, m2, phi}: phi[i] is the action of the i-th basis vector of U, total(M2) x total(M1)
//   "functor"  {functor: p|h|r, args: [M1, M2]}
//   "standard" {over, standard: projective|injective|simple|regular|zero, vertex}
//   "sum"      {sum: [names]}
// Modules over the triangle are referred to with over = "T".
struct ModuleSpec {
  std::string kind;
  std::string over;
  std::vector<std::size_t> dims;
  std::map<std::string, MatrixSpec> maps;
  std::string m1, m2;
  std::vector<MatrixSpec> phi;
  std::string functor;
  std::vector<std::string> args;
  std::string standard, vertex;
  bool operator==(const ModuleSpec&) const = default;
};

struct TaskSpec {
  std::string id, op;
  Json params = Json::object();
  bool operator==(const TaskSpec&) const = default;
};

struct FixtureDocument {
  std::string name;
  std::uint32_t characteristic = 0;  // 0 for Q
  std::map<std::string, AlgebraSpec> algebras;
  std::map<std::string, BimoduleSpec> bimodules;
  std::optional<TriangleSpec> triangle;
  std::map<std::string, ModuleSpec> modules;
  std::vector<TaskSpec> tasks;
  bool operator==(const FixtureDocument&) const = default;
};

FixtureDocument parse_fixture(const std::string& text);
FixtureDocument load_fixture(const std::string& path);
Json to_json(const FixtureDocument& doc);
std::string serialize_fixture(const FixtureDocument& doc);
// FNV-1a of the compact serialisation.
std::uint64_t fixture_digest(const FixtureDocument& doc);

// Built objects. The flat form of every T-module is in `modules`, its triple in `triples`.
struct Workspace {
  linalg::Field field = linalg::Field::rationals();
  std::map<std::string, algebra::AlgebraPtr> algebras;
  std::map<std::string, algebra::Bimodule> bimodules;
  std::optional<trimat::TriangleAlgebra> triangle;
  std::map<std::string, algebra::Module> modules;
  std::map<std::string, trimat::TriangleModule> triples;

  const algebra::AlgebraPtr& algebra(const std::string& name) const;  // "T" is the flat triangle
  const algebra::Module& module(const std::string& name) const;
  const trimat::TriangleModule& triple(const std::string& name) const;
};

// Resolves references and validates every matrix against its declared shape and the relations.
Workspace build_workspace(const FixtureDocument& doc);

linalg::Matrix matrix_from_spec(linalg::Field f, std::size_t rows, std::size_t cols, const MatrixSpec& m,
                                const std::string& where);
MatrixSpec matrix_to_spec(const linalg::Matrix& m);

}  // namespace trigor::io
