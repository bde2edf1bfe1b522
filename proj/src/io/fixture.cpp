#include "trigor/io/fixture.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "trigor/algebra/decompose.hpp"

namespace trigor::io {

using algebra::AlgebraPtr;
using algebra::Module;
using linalg::Field;
using linalg::Matrix;
using trimat::TriangleModule;

FixtureError::FixtureError(std::string w, const std::string& what) : std::runtime_error(w + ": " + what), where(std::move(w)) {}

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Json& need(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw FixtureError(path, "missing key \"" + key + "\"");
  return j.at(key);
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw FixtureError(path, "expected a string");
  return j.get<std::string>();
}

std::size_t get_size(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw FixtureError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::string> get_strings(const Json& j, const std::string& path) {
  if (!j.is_array()) throw FixtureError(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::string scalar_text(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw FixtureError(path, "expected a scalar as a string such as \"3/2\"");
}

MatrixSpec get_matrix(const Json& j, const std::string& path) {
  if (!j.is_array()) throw FixtureError(path, "expected a matrix as an array of rows");
  MatrixSpec m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw FixtureError(rp, "expected a row");
    std::vector<std::string> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(scalar_text(j[i][k], rp + "[" + std::to_string(k) + "]"));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<MatrixSpec> get_matrices(const Json& j, const std::string& path) {
  if (!j.is_array()) throw FixtureError(path, "expected an array of matrices");
  std::vector<MatrixSpec> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_matrix(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

void reject_unknown(const Json& j, const std::set<std::string>& keys, const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!keys.count(it.key())) throw FixtureError(path, "unknown key \"" + it.key() + "\"");
}

AlgebraSpec parse_algebra(const Json& j, const std::string& path) {
  reject_unknown(j, {"vertices", "arrows", "relations"}, path);
  AlgebraSpec a;
  a.vertices = get_strings(need(j, "vertices", path), path + ".vertices");
  if (j.contains("arrows")) {
    const Json& arr = j.at("arrows");
    if (!arr.is_array()) throw FixtureError(path + ".arrows", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + ".arrows[" + std::to_string(i) + "]";
      a.arrows.push_back({get_string(need(arr[i], "name", p), p + ".name"), get_string(need(arr[i], "source", p), p + ".source"),
                          get_string(need(arr[i], "target", p), p + ".target")});
    }
  }
  if (j.contains("relations")) {
    const Json& rels = j.at("relations");
    if (!rels.is_array()) throw FixtureError(path + ".relations", "expected an array");
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const std::string p = path + ".relations[" + std::to_string(i) + "]";
      if (!rels[i].is_array()) throw FixtureError(p, "expected an array of terms");
      std::vector<PathTermSpec> rel;
      for (std::size_t k = 0; k < rels[i].size(); ++k) {
        const std::string tp = p + "[" + std::to_string(k) + "]";
        PathTermSpec t;
        t.path = get_strings(need(rels[i][k], "path", tp), tp + ".path");
        if (rels[i][k].contains("coeff")) t.coeff = scalar_text(rels[i][k].at("coeff"), tp + ".coeff");
        rel.push_back(std::move(t));
      }
      a.relations.push_back(std::move(rel));
    }
  }
  return a;
}

BimoduleSpec parse_bimodule(const Json& j, const std::string& path) {
  BimoduleSpec b;
  if (j.contains("regular")) {
    reject_unknown(j, {"regular"}, path);
    b.regular = get_string(j.at("regular"), path + ".regular");
    return b;
  }
  reject_unknown(j, {"left", "right", "dim", "left_action", "right_action"}, path);
  b.left = get_string(need(j, "left", path), path + ".left");
  b.right = get_string(need(j, "right", path), path + ".right");
  b.dim = get_size(need(j, "dim", path), path + ".dim");
  b.left_action = get_matrices(need(j, "left_action", path), path + ".left_action");
  b.right_action = get_matrices(need(j, "right_action", path), path + ".right_action");
  return b;
}

ModuleSpec parse_module(const Json& j, const std::string& path) {
  if (!j.is_object()) throw FixtureError(path, "expected an object");
  ModuleSpec m;
  if (j.contains("m1") || j.contains("phi")) {
    reject_unknown(j, {"m1", "m2", "phi"}, path);
    m.kind = "triple";
    m.m1 = get_string(need(j, "m1", path), path + ".m1");
    m.m2 = get_string(need(j, "m2", path), path + ".m2");
    m.phi = get_matrices(need(j, "phi", path), path + ".phi");
  } else if (j.contains("functor")) {
    reject_unknown(j, {"functor", "args"}, path);
    m.kind = "functor";
    m.functor = get_string(j.at("functor"), path + ".functor");
    if (m.functor != "p" && m.functor != "h" && m.functor != "r")
      throw FixtureError(path + ".functor", "expected one of p, h, r");
    m.args = get_strings(need(j, "args", path), path + ".args");
    if (m.args.size() != 2) throw FixtureError(path + ".args", "expected two module names");
  } else if (j.contains("standard")) {
    reject_unknown(j, {"over", "standard", "vertex"}, path);
    m.kind = "standard";
    m.over = get_string(need(j, "over", path), path + ".over");
    m.standard = get_string(j.at("standard"), path + ".standard");
    static const std::set<std::string> known{"projective", "injective", "simple", "regular", "zero"};
    if (!known.count(m.standard)) throw FixtureError(path + ".standard", "unknown standard module \"" + m.standard + "\"");
    if (j.contains("vertex")) m.vertex = get_string(j.at("vertex"), path + ".vertex");
  } else if (j.contains("sum")) {
    reject_unknown(j, {"sum"}, path);
    m.kind = "sum";
    m.args = get_strings(j.at("sum"), path + ".sum");
  } else {
    reject_unknown(j, {"over", "dims", "maps"}, path);
    m.kind = "rep";
    m.over = get_string(need(j, "over", path), path + ".over");
    const Json& d = need(j, "dims", path);
    if (!d.is_array()) throw FixtureError(path + ".dims", "expected an array");
    for (std::size_t i = 0; i < d.size(); ++i) m.dims.push_back(get_size(d[i], path + ".dims[" + std::to_string(i) + "]"));
    if (j.contains("maps")) {
      const Json& mp = j.at("maps");
      if (!mp.is_object()) throw FixtureError(path + ".maps", "expected an object keyed by arrow name");
      for (auto it = mp.begin(); it != mp.end(); ++it) m.maps[it.key()] = get_matrix(it.value(), path + ".maps." + it.key());
    }
  }
  return m;
}

Json matrix_json(const MatrixSpec& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

Json matrices_json(const std::vector<MatrixSpec>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(matrix_json(m));
  return out;
}

}  // namespace

FixtureDocument parse_fixture(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FixtureError(line_col(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  if (!j.is_object()) throw FixtureError("document", "expected a JSON object");
  reject_unknown(j, {"name", "field", "algebras", "bimodules", "triangle", "modules", "tasks"}, "document");
  FixtureDocument doc;
  if (j.contains("name")) doc.name = get_string(j.at("name"), "name");
  const Json& f = need(j, "field", "document");
  if (f.is_string()) {
    if (f.get<std::string>() != "Q") throw FixtureError("field", "expected \"Q\" or {\"GF\": p}");
  } else if (f.is_object() && f.contains("GF")) {
    doc.characteristic = static_cast<std::uint32_t>(get_size(f.at("GF"), "field.GF"));
    try {
      Field::prime(doc.characteristic);
    } catch (const std::exception& e) {
      throw FixtureError("field.GF", e.what());
    }
  } else {
    throw FixtureError("field", "expected \"Q\" or {\"GF\": p}");
  }
  auto objects = [&](const char* key) -> const Json* {
    if (!j.contains(key)) return nullptr;
    if (!j.at(key).is_object()) throw FixtureError(key, "expected an object keyed by name");
    return &j.at(key);
  };
  if (auto* a = objects("algebras"))
    for (auto it = a->begin(); it != a->end(); ++it) {
      if (it.key() == "T") throw FixtureError("algebras.T", "the name T is reserved for the triangle");
      doc.algebras[it.key()] = parse_algebra(it.value(), "algebras." + it.key());
    }
  if (auto* b = objects("bimodules"))
    for (auto it = b->begin(); it != b->end(); ++it) doc.bimodules[it.key()] = parse_bimodule(it.value(), "bimodules." + it.key());
  if (j.contains("triangle")) {
    const Json& t = j.at("triangle");
    reject_unknown(t, {"A", "B", "U"}, "triangle");
    doc.triangle = TriangleSpec{get_string(need(t, "A", "triangle"), "triangle.A"), get_string(need(t, "B", "triangle"), "triangle.B"),
                                get_string(need(t, "U", "triangle"), "triangle.U")};
  }
  if (auto* m = objects("modules"))
    for (auto it = m->begin(); it != m->end(); ++it) doc.modules[it.key()] = parse_module(it.value(), "modules." + it.key());
  if (j.contains("tasks")) {
    const Json& ts = j.at("tasks");
    if (!ts.is_array()) throw FixtureError("tasks", "expected an array");
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const std::string p = "tasks[" + std::to_string(i) + "]";
      if (!ts[i].is_object()) throw FixtureError(p, "expected an object");
      TaskSpec t;
      t.op = get_string(need(ts[i], "op", p), p + ".op");
      t.id = ts[i].contains("id") ? get_string(ts[i].at("id"), p + ".id") : t.op + "-" + std::to_string(i);
      for (auto it = ts[i].begin(); it != ts[i].end(); ++it)
        if (it.key() != "id" && it.key() != "op") t.params[it.key()] = it.value();
      doc.tasks.push_back(std::move(t));
    }
  }
  return doc;
}

FixtureDocument load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError(path, "cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_fixture(ss.str());
  } catch (const FixtureError& e) {
    throw FixtureError(path + ": " + e.where, std::string(e.what()).substr(e.where.size() + 2));
  }
}

Json to_json(const FixtureDocument& doc) {
  Json j = Json::object();
  if (!doc.name.empty()) j["name"] = doc.name;
  j["field"] = doc.characteristic == 0 ? Json("Q") : Json{{"GF", doc.characteristic}};
  Json algs = Json::object();
  for (const auto& [name, a] : doc.algebras) {
    Json arrows = Json::array();
    for (const auto& ar : a.arrows) arrows.push_back({{"name", ar.name}, {"source", ar.source}, {"target", ar.target}});
    Json rels = Json::array();
    for (const auto& rel : a.relations) {
      Json terms = Json::array();
      for (const auto& t : rel) terms.push_back({{"path", t.path}, {"coeff", t.coeff}});
      rels.push_back(terms);
    }
    algs[name] = {{"vertices", a.vertices}, {"arrows", arrows}, {"relations", rels}};
  }
  j["algebras"] = algs;
  Json bims = Json::object();
  for (const auto& [name, b] : doc.bimodules) {
    if (!b.regular.empty())
      bims[name] = {{"regular", b.regular}};
    else
      bims[name] = {{"left", b.left},
                    {"right", b.right},
                    {"dim", b.dim},
                    {"left_action", matrices_json(b.left_action)},
                    {"right_action", matrices_json(b.right_action)}};
  }
  j["bimodules"] = bims;
  if (doc.triangle) j["triangle"] = {{"A", doc.triangle->a}, {"B", doc.triangle->b}, {"U", doc.triangle->u}};
  Json mods = Json::object();
  for (const auto& [name, m] : doc.modules) {
    Json x = Json::object();
    if (m.kind == "triple") {
      x = {{"m1", m.m1}, {"m2", m.m2}, {"phi", matrices_json(m.phi)}};
    } else if (m.kind == "functor") {
      x = {{"functor", m.functor}, {"args", m.args}};
    } else if (m.kind == "standard") {
      x = {{"over", m.over}, {"standard", m.standard}};
      if (!m.vertex.empty()) x["vertex"] = m.vertex;
    } else if (m.kind == "sum") {
      x = {{"sum", m.args}};
    } else {
      Json maps = Json::object();
      for (const auto& [a, mat] : m.maps) maps[a] = matrix_json(mat);
      x = {{"over", m.over}, {"dims", m.dims}, {"maps", maps}};
    }
    mods[name] = x;
  }
  j["modules"] = mods;
  Json tasks = Json::array();
  for (const auto& t : doc.tasks) {
    Json x = t.params;
    x["id"] = t.id;
    x["op"] = t.op;
    tasks.push_back(x);
  }
  j["tasks"] = tasks;
  return j;
}

std::string serialize_fixture(const FixtureDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::uint64_t fixture_digest(const FixtureDocument& doc) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : to_json(doc).dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Matrix matrix_from_spec(Field f, std::size_t rows, std::size_t cols, const MatrixSpec& m, const std::string& where) {
  // zero-row matrices may be written as [] and zero-column ones as [[], ...] or []
  if (rows == 0 || cols == 0) {
    for (const auto& r : m)
      if (!r.empty()) throw FixtureError(where, "expected an empty " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    if (!m.empty() && m.size() != rows)
      throw FixtureError(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(m.size()));
    return Matrix(f, rows, cols);
  }
  if (m.size() != rows) throw FixtureError(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(m.size()));
  std::vector<std::string> flat;
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols)
      throw FixtureError(where + "[" + std::to_string(i) + "]",
                         "expected " + std::to_string(cols) + " entries, got " + std::to_string(m[i].size()));
    flat.insert(flat.end(), m[i].begin(), m[i].end());
  }
  try {
    return Matrix::from_strings(f, rows, cols, flat);
  } catch (const std::exception& e) {
    throw FixtureError(where, e.what());
  }
}

MatrixSpec matrix_to_spec(const Matrix& m) {
  MatrixSpec out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------

const AlgebraPtr& Workspace::algebra(const std::string& name) const {
  if (name == "T") {
    if (!triangle) throw FixtureError("T", "the fixture declares no triangle");
    return triangle->T();
  }
  auto it = algebras.find(name);
  if (it == algebras.end()) throw FixtureError(name, "unknown algebra");
  return it->second;
}

const Module& Workspace::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw FixtureError(name, "unknown module");
  return it->second;
}

const TriangleModule& Workspace::triple(const std::string& name) const {
  auto it = triples.find(name);
  if (it == triples.end()) throw FixtureError(name, "not a module over the triangle");
  return it->second;
}

namespace {

class Builder {
 public:
  Builder(const FixtureDocument& doc, Workspace& ws) : doc_(doc), ws_(ws) {}

  void build() {
    ws_.field = doc_.characteristic == 0 ? Field::rationals() : Field::prime(doc_.characteristic);
    for (const auto& [name, a] : doc_.algebras) ws_.algebras[name] = make_algebra(name, a);
    for (const auto& [name, b] : doc_.bimodules) ws_.bimodules[name] = make_bimodule(name, b);
    if (doc_.triangle) {
      const auto& t = *doc_.triangle;
      const auto& u = bimodule(t.u, "triangle.U");
      AlgebraPtr a = algebra(t.a, "triangle.A"), b = algebra(t.b, "triangle.B");
      if (!u.left_algebra()->same_as(*b) || !u.right_algebra()->same_as(*a))
        throw FixtureError("triangle.U", "must be a (B, A)-bimodule");
      try {
        ws_.triangle = trimat::TriangleAlgebra::make(a, b, u, "T");
      } catch (const std::exception& e) {
        throw FixtureError("triangle", e.what());
      }
    }
    for (const auto& [name, m] : doc_.modules) resolve(name);
  }

 private:
  AlgebraPtr algebra(const std::string& name, const std::string& where) const {
    if (name == "T") {
      if (!ws_.triangle) throw FixtureError(where, "the fixture declares no triangle");
      return ws_.triangle->T();
    }
    auto it = ws_.algebras.find(name);
    if (it == ws_.algebras.end()) throw FixtureError(where, "unknown algebra \"" + name + "\"");
    return it->second;
  }

  const algebra::Bimodule& bimodule(const std::string& name, const std::string& where) const {
    auto it = ws_.bimodules.find(name);
    if (it == ws_.bimodules.end()) throw FixtureError(where, "unknown bimodule \"" + name + "\"");
    return it->second;
  }

  AlgebraPtr make_algebra(const std::string& name, const AlgebraSpec& a) {
    const std::string path = "algebras." + name;
    std::map<std::string, int> vid, aid;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
      if (!vid.emplace(a.vertices[i], static_cast<int>(i)).second) throw FixtureError(path + ".vertices", "duplicate vertex " + a.vertices[i]);
    std::vector<algebra::Arrow> arrows;
    for (std::size_t i = 0; i < a.arrows.size(); ++i) {
      const auto& ar = a.arrows[i];
      const std::string p = path + ".arrows[" + std::to_string(i) + "]";
      if (!vid.count(ar.source)) throw FixtureError(p + ".source", "unknown vertex \"" + ar.source + "\"");
      if (!vid.count(ar.target)) throw FixtureError(p + ".target", "unknown vertex \"" + ar.target + "\"");
      if (!aid.emplace(ar.name, static_cast<int>(i)).second) throw FixtureError(p + ".name", "duplicate arrow " + ar.name);
      arrows.push_back({vid[ar.source], vid[ar.target], ar.name});
    }
    std::vector<algebra::Relation> rels;
    for (std::size_t i = 0; i < a.relations.size(); ++i) {
      algebra::Relation rel;
      for (std::size_t k = 0; k < a.relations[i].size(); ++k) {
        const auto& t = a.relations[i][k];
        const std::string p = path + ".relations[" + std::to_string(i) + "][" + std::to_string(k) + "]";
        std::vector<int> word;
        for (const auto& s : t.path) {
          if (!aid.count(s)) throw FixtureError(p + ".path", "unknown arrow \"" + s + "\"");
          word.push_back(aid[s]);
        }
        try {
          rel.push_back({word, linalg::Scalar::parse(ws_.field, t.coeff)});
        } catch (const std::exception& e) {
          throw FixtureError(p + ".coeff", e.what());
        }
      }
      rels.push_back(std::move(rel));
    }
    try {
      return algebra::Algebra::from_quiver(ws_.field, a.vertices, arrows, rels, name);
    } catch (const std::exception& e) {
      throw FixtureError(path, e.what());
    }
  }

  algebra::Bimodule make_bimodule(const std::string& name, const BimoduleSpec& b) {
    const std::string path = "bimodules." + name;
    if (!b.regular.empty()) return algebra::Bimodule::regular(algebra(b.regular, path + ".regular"));
    AlgebraPtr l = algebra(b.left, path + ".left"), r = algebra(b.right, path + ".right");
    auto mats = [&](const std::vector<MatrixSpec>& ms, const AlgebraPtr& alg, const std::string& key) {
      if (ms.size() != static_cast<std::size_t>(alg->dim()))
        throw FixtureError(path + "." + key, "expected one matrix per basis element (" + std::to_string(alg->dim()) + ")");
      std::vector<Matrix> out;
      for (std::size_t i = 0; i < ms.size(); ++i)
        out.push_back(matrix_from_spec(ws_.field, b.dim, b.dim, ms[i], path + "." + key + "[" + std::to_string(i) + "]"));
      return out;
    };
    try {
      return algebra::Bimodule::make(l, r, b.dim, mats(b.left_action, l, "left_action"), mats(b.right_action, r, "right_action"));
    } catch (const FixtureError&) {
      throw;
    } catch (const std::exception& e) {
      throw FixtureError(path, e.what());
    }
  }

  const trimat::TriangleAlgebra& triangle(const std::string& where) const {
    if (!ws_.triangle) throw FixtureError(where, "the fixture declares no triangle");
    return *ws_.triangle;
  }

  int vertex_of(const AlgebraPtr& alg, const std::string& v, const std::string& where) const {
    for (int i = 0; i < alg->num_vertices(); ++i)
      if (alg->vertices()[i] == v) return i;
    throw FixtureError(where, "unknown vertex \"" + v + "\"");
  }

  void store_flat(const std::string& name, const Module& m) {
    ws_.modules[name] = m;
    if (ws_.triangle && m.algebra()->same_as(*ws_.triangle->T())) ws_.triples[name] = trimat::flat_to_triple(*ws_.triangle, m);
  }

  void store_triple(const std::string& name, const TriangleModule& t) {
    ws_.triples[name] = t;
    ws_.modules[name] = trimat::triple_to_flat(*ws_.triangle, t);
  }

  const Module& resolve(const std::string& name) {
    if (auto it = ws_.modules.find(name); it != ws_.modules.end()) return it->second;
    const std::string path = "modules." + name;
    auto spec_it = doc_.modules.find(name);
    if (spec_it == doc_.modules.end()) throw FixtureError(path, "unknown module \"" + name + "\"");
    if (!active_.insert(name).second) throw FixtureError(path, "circular module reference");
    const ModuleSpec& m = spec_it->second;
    try {
      if (m.kind == "rep") {
        AlgebraPtr alg = algebra(m.over, path + ".over");
        if (m.dims.size() != static_cast<std::size_t>(alg->num_vertices()))
          throw FixtureError(path + ".dims", "expected " + std::to_string(alg->num_vertices()) + " entries");
        std::vector<Matrix> maps;
        for (const auto& ar : alg->arrows()) {
          const std::size_t r = m.dims[ar.target], c = m.dims[ar.source];
          auto it = m.maps.find(ar.label);
          if (it == m.maps.end()) {
            if (r * c != 0) throw FixtureError(path + ".maps", "missing map for arrow " + ar.label);
            maps.emplace_back(ws_.field, r, c);
          } else {
            maps.push_back(matrix_from_spec(ws_.field, r, c, it->second, path + ".maps." + ar.label));
          }
        }
        for (const auto& [label, mat] : m.maps) {
          bool found = false;
          for (const auto& ar : alg->arrows()) found = found || ar.label == label;
          if (!found) throw FixtureError(path + ".maps." + label, "no such arrow");
        }
        auto mod = Module::try_make(alg, m.dims, maps);
        if (!mod) throw FixtureError(path, "the maps violate a relation");
        store_flat(name, *mod);
      } else if (m.kind == "standard") {
        AlgebraPtr alg = algebra(m.over, path + ".over");
        if (m.standard == "regular") {
          store_flat(name, algebra::regular(alg));
        } else if (m.standard == "zero") {
          store_flat(name, Module::zero(alg));
        } else {
          if (m.vertex.empty()) throw FixtureError(path, "missing key \"vertex\"");
          int v = vertex_of(alg, m.vertex, path + ".vertex");
          store_flat(name, m.standard == "projective" ? algebra::projective(alg, v)
                           : m.standard == "injective" ? algebra::injective(alg, v)
                                                       : algebra::simple(alg, v));
        }
      } else if (m.kind == "sum") {
        if (m.args.empty()) throw FixtureError(path + ".sum", "expected at least one summand");
        std::vector<Module> parts;
        for (const auto& a : m.args) parts.push_back(resolve(a));
        for (const auto& p : parts)
          if (!p.algebra()->same_as(*parts[0].algebra())) throw FixtureError(path + ".sum", "summands over different algebras");
        store_flat(name, algebra::direct_sum(parts, parts[0].algebra()).sum);
      } else if (m.kind == "functor") {
        const auto& ta = triangle(path);
        Module x1 = resolve(m.args[0]), x2 = resolve(m.args[1]);
        if (!x1.algebra()->same_as(*ta.A())) throw FixtureError(path + ".args[0]", "expected a module over A");
        if (!x2.algebra()->same_as(*ta.B())) throw FixtureError(path + ".args[1]", "expected a module over B");
        store_triple(name, m.functor == "p"   ? trimat::functor_p(ta, x1, x2)
                           : m.functor == "h" ? trimat::functor_h(ta, x1, x2)
                                              : trimat::functor_r(ta, x1, x2));
      } else {
        const auto& ta = triangle(path);
        Module x1 = resolve(m.m1), x2 = resolve(m.m2);
        if (!x1.algebra()->same_as(*ta.A())) throw FixtureError(path + ".m1", "expected a module over A");
        if (!x2.algebra()->same_as(*ta.B())) throw FixtureError(path + ".m2", "expected a module over B");
        const std::size_t du = ta.U().dim();
        if (m.phi.size() != du)
          throw FixtureError(path + ".phi", "expected one matrix per basis vector of U (" + std::to_string(du) + ")");
        std::vector<Matrix> given;
        for (std::size_t i = 0; i < du; ++i)
          given.push_back(matrix_from_spec(ws_.field, x2.total_dim(), x1.total_dim(), m.phi[i], path + ".phi[" + std::to_string(i) + "]"));
        // phi is declared on the given basis of U; the triangle works on the adapted one
        const Matrix& bc = ta.U().basis_change();
        std::vector<Matrix> act;
        for (std::size_t k = 0; k < du; ++k) {
          Matrix a(ws_.field, x2.total_dim(), x1.total_dim());
          for (std::size_t i = 0; i < du; ++i)
            if (!bc.at(i, k).is_zero()) a = a + given[i].scaled(bc.at(i, k));
          act.push_back(std::move(a));
        }
        store_triple(name, TriangleModule::from_u_action(ta, x1, x2, act));
      }
    } catch (const FixtureError&) {
      throw;
    } catch (const std::exception& e) {
      throw FixtureError(path, e.what());
    }
    active_.erase(name);
    return ws_.modules.at(name);
  }

  const FixtureDocument& doc_;
  Workspace& ws_;
  std::set<std::string> active_;
};

}  // namespace

Workspace build_workspace(const FixtureDocument& doc) {
  Workspace ws;
  Builder(doc, ws).build();
  return ws;
}

}  // namespace trigor::io
