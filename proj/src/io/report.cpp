#include "trigor/io/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "trigor/algebra/decompose.hpp"
#include "trigor/oracle/exhaustive.hpp"
#include "trigor/trimat/checks.hpp"

namespace trigor::io {

using algebra::Module;
using algebra::Morphism;
using relgor::Verdict;

namespace {

std::string str(std::size_t n) { return std::to_string(n); }

std::string hex(std::uint64_t x) {
  std::ostringstream o;
  o << std::hex << std::setw(16) << std::setfill('0') << x;
  return o.str();
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool indefinite_claim(const Claim& c) { return c.status == ClaimStatus::Skipped && c.note.rfind("hypothesis", 0) != 0; }

struct Ctx {
  const Workspace& ws;
  const TaskSpec& task;
  const RunOptions& opt;
  Report& r;

  std::string where(const std::string& key) const { return "tasks." + task.id + "." + key; }
  bool has(const std::string& key) const { return task.params.contains(key); }
  std::string text(const std::string& key) const {
    if (!has(key)) throw FixtureError(where(key), "missing parameter");
    const Json& j = task.params.at(key);
    if (!j.is_string()) throw FixtureError(where(key), "expected a string");
    return j.get<std::string>();
  }
  std::size_t size(const std::string& key) const {
    const Json& j = task.params.at(key);
    if (!j.is_number_unsigned()) throw FixtureError(where(key), "expected a non-negative integer");
    return j.get<std::size_t>();
  }
  std::size_t size_or(const std::string& key, std::size_t fallback) const { return has(key) ? size(key) : fallback; }
  std::size_t bound() const { return size_or("bound", opt.bound); }
  std::string cap(const std::string& key = "cap") const {
    if (has(key)) {
      const Json& j = task.params.at(key);
      return j.is_number_unsigned() ? std::to_string(j.get<std::size_t>()) : text(key);
    }
    if (!opt.cap.empty()) return opt.cap;
    throw FixtureError(where(key), "missing parameter (or pass --cap)");
  }
  const Module& module(const std::string& key) const { return ws.module(text(key)); }

  const trimat::TriangleAlgebra& triangle() const {
    if (!ws.triangle) throw FixtureError(where("op"), "needs a triangle");
    return *ws.triangle;
  }
  trimat::Setting setting() const {
    const auto& ta = triangle();
    Module c1 = has("c1") ? module("c1") : algebra::regular(ta.A());
    Module c2 = has("c2") ? module("c2") : algebra::regular(ta.B());
    return trimat::Setting::make(ta, c1, c2, bound());
  }

  // An assertion when the task carries "expect", a plain fact otherwise.
  void expect(const std::string& what, const std::string& computed) {
    if (!has("expect")) {
      r.fact(what, computed);
      return;
    }
    const Json& e = task.params.at("expect");
    const std::string want = e.is_string() ? e.get<std::string>() : e.dump();
    r.add(what, computed, want, computed == want);
  }
  void expect_verdict(const std::string& what, Verdict v, const std::string& detail) {
    if (v == Verdict::Inconclusive && has("expect")) {
      r.skip(what, "inconclusive at bound " + str(bound()) + ": " + detail);
      return;
    }
    expect(what, lower(relgor::verdict_name(v)));
  }
  void expect_dim(const std::string& what, const homology::DimBound& d) {
    if (!d.exact() && has("expect")) {
      r.skip(what, "beyond the bound: " + d.to_string());
      return;
    }
    expect(what, d.to_string());
  }
};

void describe_verdict(Report& r, const std::string& prefix, const relgor::GCVerdict& v) {
  r.fact(prefix + "verdict", v.summary());
  if (v.certificate) r.fact(prefix + "certificate digest", hex(v.certificate->digest));
  if (v.refutation) {
    const auto& ref = *v.refutation;
    r.fact(prefix + "witness", relgor::witness_name(ref.kind) + " degree " + str(ref.degree) + " dimension " +
                                   str(ref.dimension) + (ref.detail.empty() ? "" : " (" + ref.detail + ")"));
  }
}

void op_w_tilting(Ctx& c) {
  const Module& m = c.module("module");
  auto w = relgor::is_w_tilting(m, c.bound());
  describe_verdict(c.r, "C: ", w.on_c);
  describe_verdict(c.r, "regular: ", w.on_regular);
  c.expect_verdict("w-tilting", w.kind, w.summary());
  if (c.has("expect_witness")) {
    const Json& e = c.task.params.at("expect_witness");
    const bool on_c = w.on_c.refuted();
    const relgor::GCVerdict& side = on_c ? w.on_c : w.on_regular;
    std::string got = "none";
    if (side.refutation) {
      got = relgor::witness_name(side.refutation->kind) + " dimension " + str(side.refutation->dimension);
      const Module target = on_c ? m : algebra::regular(m.algebra());
      const bool again = relgor::recheck_refutation(target, m, *side.refutation);
      c.r.add("refutation re-checked on a separate route", again ? "yes" : "no", "yes", again);
    }
    const std::string want = e.value("kind", std::string("?")) + " dimension " + std::to_string(e.value("dimension", 0));
    c.r.add("refutation witness", got, want, got == want);
  }
}

void op_gc_projective(Ctx& c) {
  const Module& m = c.module("module");
  const Module& cm = c.module("c");
  auto v = relgor::is_gc_projective(m, cm, c.bound());
  describe_verdict(c.r, "", v);
  if (v.certificate) {
    auto val = relgor::validate_certificate(*v.certificate);
    c.r.add("certificate re-validates", val.ok ? "accepted" : "rejected: " + (val.failures.empty() ? "" : val.failures[0]),
            "accepted", val.ok);
  }
  c.expect_verdict("G_C-projective", v.kind, v.summary());
}

void op_gcpd(Ctx& c) {
  auto d = relgor::gc_pd(c.module("module"), c.module("c"), c.bound());
  if (d.status == Verdict::Inconclusive && c.has("expect")) {
    c.r.skip("G_C-pd", "inconclusive: " + d.to_string());
    return;
  }
  c.expect_dim("G_C-pd", d.value);
}

void op_pd(Ctx& c) { c.expect_dim("pd", homology::pd_up_to(c.module("module"), c.bound())); }

void op_ext(Ctx& c) {
  const Module &m = c.module("m"), &n = c.module("n");
  const std::size_t deg = c.size_or("degree", 1);
  const std::size_t e = homology::ext_dim(m, n, deg), e2 = homology::ext_dim_dual(m, n, deg);
  c.r.add("projective and injective routes agree", str(e), str(e2), e == e2);
  c.expect("dim Ext^" + str(deg), str(e));
}

void op_projective(Ctx& c) {
  const Module& m = c.module("module");
  const bool flat = algebra::is_projective(m);
  if (c.ws.triangle && m.algebra()->same_as(*c.ws.triangle->T())) {
    const bool t = trimat::is_projective_triple(trimat::flat_to_triple(*c.ws.triangle, m));
    c.r.add("triple criterion agrees with the flat test", t ? "true" : "false", flat ? "true" : "false", t == flat);
  }
  c.expect("projective", flat ? "true" : "false");
}

void op_injective(Ctx& c) {
  const Module& m = c.module("module");
  const bool flat = algebra::is_injective(m);
  if (c.ws.triangle && m.algebra()->same_as(*c.ws.triangle->T())) {
    const bool t = trimat::is_injective_triple(*c.ws.triangle, trimat::flat_to_triple(*c.ws.triangle, m));
    c.r.add("triple criterion agrees with the flat test", t ? "true" : "false", flat ? "true" : "false", t == flat);
  }
  c.expect("injective", flat ? "true" : "false");
}

void op_gldim(Ctx& c) { c.expect_dim("gldim", homology::gldim_up_to(c.ws.algebra(c.text("algebra")), c.bound())); }

trimat::Families families(const Ctx& c, const trimat::Setting& s) {
  const auto ta = s.ta;
  auto caps = oracle::EnumerationCap::parse(c.cap(), ta.T()).dims;
  std::size_t ca = 0, cb = 0;
  for (int v = 0; v < ta.T()->num_vertices(); ++v)
    (v < ta.a_vertices() ? ca : cb) = std::max(v < ta.a_vertices() ? ca : cb, caps[static_cast<std::size_t>(v)]);
  return trimat::default_families(s, ca, cb);
}

void op_compatibility(Ctx& c) {
  auto s = c.setting();
  auto cr = trimat::compatibility_report(s, families(c, s));
  c.r.merge(cr.report);
  c.r.family = cr.report.family;
  c.expect("compatibility", trimat::compatibility_name(cr.verdict));
}

void op_wtilting_transfer(Ctx& c) {
  auto s = c.setting();
  auto cr = trimat::compatibility_report(s, families(c, s));
  auto rep = trimat::wtilting_transfer_check(s, cr);
  c.r.merge(rep);
  c.r.family = cr.report.family;
}

void op_add_membership(Ctx& c) {
  const auto& ta = c.triangle();
  auto a = trimat::add_membership_triple(ta, c.ws.triple(c.text("module")), c.module("c1"), c.module("c2"));
  c.r.fact("reason", a.reason);
  c.expect("of the form p(X1, X2) with X1 in add(C1), X2 in add(C2)", a.member ? "true" : "false");
}

void op_exhaustive(Ctx& c) {
  auto s = c.setting();
  auto res = oracle::exhaustive_check(c.text("property"), s, c.cap(), c.opt.work_limit);
  c.r.merge(res.report);
  c.r.family = res.report.family;
}

void op_tr_formula(Ctx& c) {
  auto r = c.ws.algebra(c.text("algebra"));
  Module c1 = c.has("c1") ? c.module("c1") : algebra::regular(r);
  const std::size_t cap_r = c.size_or("cap_r", 2), cap_t = c.size_or("cap_t", 2);
  auto rep = trimat::tr_formula_check(r, c1, cap_r, cap_t, c.bound());
  c.r.merge(rep);
  c.r.family = rep.family;
}

void op_pd_counterexample(Ctx& c) {
  auto w = trimat::pd_counterexample_search(c.ws.algebra(c.text("algebra")), c.cap());
  c.r.merge(w.report);
  c.r.family = w.report.family;
  if (w.found) {
    c.r.fact("pd_T(M)", str(w.pd_t));
    c.r.fact("pd(M1)", str(w.pd_m1));
    c.r.fact("pd(coker phi)", str(w.pd_coker));
  }
}

void op_gc_global_dim(Ctx& c) {
  auto a = c.ws.algebra(c.text("algebra"));
  const Module& cm = c.module("c");
  auto mods = oracle::enumerate_modules(a, oracle::EnumerationCap::parse(c.cap(), a), c.opt.work_limit);
  auto g = relgor::gc_global_dim(a, cm, mods, c.bound(), true);
  c.r.family = "all " + str(mods.size()) + " modules within cap " + c.cap() + "; the value is a lower bound relative to the cap";
  if (g.status == Verdict::Inconclusive && c.has("expect")) {
    c.r.skip("G_C-PD lower bound", "inconclusive");
    return;
  }
  c.expect_dim("G_C-PD lower bound", g.lower);
}

// Constructed special precovers of every enumerated module of G_C-pd <= 1 must be recognised, and the
// broken maps of every non-G_C-projective module rejected with a witness.
void op_precovers(Ctx& c) {
  auto s = c.setting();
  auto fam = families(c, s);
  auto compat = trimat::compatibility_report(s, fam);
  auto mods = oracle::enumerate_modules(s.ta.T(), oracle::EnumerationCap::parse(c.cap(), s.ta.T()), c.opt.work_limit);
  c.r.family = fam.name + "; targets: " + str(mods.size()) + " modules within cap " + c.cap();
  std::size_t built = 0, broken = 0, rejected = 0, accepted = 0;
  std::string first_witness;
  for (const auto& m : mods) {
    if (m.is_zero()) continue;
    if (auto f = trimat::construct_special_precover(s, m)) {
      ++built;
      auto rep = trimat::special_precover_check(s, compat, fam, *f);
      for (auto cl : rep.claims) {
        cl.what = m.describe() + ": " + cl.what;
        c.r.claims.push_back(std::move(cl));
      }
      for (const auto& [k, v] : rep.facts)
        if (k == "special precover") accepted += v == "yes";
    }
    if (trimat::gc_verdict(m, s.c_flat, s.bound) == Verdict::Certified) continue;
    Morphism b = trimat::broken_precover(s, m);
    if (trimat::flat_to_triple(s.ta, b).f2.is_surjective()) continue;
    if (trimat::gc_verdict(b.source(), s.c_flat, s.bound) != Verdict::Certified) continue;
    ++broken;
    auto rep = trimat::special_precover_check(s, compat, fam, b);
    for (auto cl : rep.claims) {
      cl.what = m.describe() + " (broken): " + cl.what;
      c.r.claims.push_back(std::move(cl));
    }
    for (const auto& [k, v] : rep.facts) {
      if (k == "special precover" && v == "no") ++rejected;
      if (k == "witness" && first_witness.empty()) first_witness = m.describe() + ": " + v;
    }
  }
  c.r.add("constructed precovers are special", str(accepted) + " of " + str(built), str(built) + " of " + str(built),
          accepted == built && built > 0);
  c.r.add("broken maps are rejected with a witness", str(rejected) + " of " + str(broken), str(broken) + " of " + str(broken),
          rejected == broken && broken > 0);
  if (!first_witness.empty()) c.r.fact("first broken witness", first_witness);
}

std::vector<Module> enumerate_side(const Ctx& c, const trimat::Setting& s, int side) {
  const auto& ta = s.ta;
  auto dims = oracle::EnumerationCap::parse(c.cap(), ta.T()).dims;
  const auto na = static_cast<long>(ta.a_vertices());
  if (side == 0) return oracle::enumerate_modules(ta.T(), {dims, std::nullopt}, c.opt.work_limit);
  std::vector<std::size_t> part = side == 1 ? std::vector<std::size_t>(dims.begin(), dims.begin() + na)
                                            : std::vector<std::size_t>(dims.begin() + na, dims.end());
  return oracle::enumerate_modules(side == 1 ? ta.A() : ta.B(), {part, std::nullopt}, c.opt.work_limit);
}

void op_cm_free(Ctx& c) {
  auto s = c.setting();
  auto compat = trimat::compatibility_report(s, families(c, s));
  c.r.merge(trimat::cm_free_check(s, compat, enumerate_side(c, s, 1), enumerate_side(c, s, 2), enumerate_side(c, s, 0)));
}

void op_global_bounds(Ctx& c) {
  auto s = c.setting();
  auto fam = families(c, s);
  auto sg = trimat::sgc_pd(s, fam.a);
  auto rep = trimat::global_bounds_check(s, sg, enumerate_side(c, s, 1), enumerate_side(c, s, 2), enumerate_side(c, s, 0));
  c.r.merge(rep);
  c.r.family = rep.family;
}

using Op = std::function<void(Ctx&)>;

const std::map<std::string, Op>& ops() {
  static const std::map<std::string, Op> m{
      {"w-tilting", op_w_tilting},
      {"gc-projective", op_gc_projective},
      {"gcpd", op_gcpd},
      {"pd", op_pd},
      {"ext", op_ext},
      {"projective", op_projective},
      {"injective", op_injective},
      {"gldim", op_gldim},
      {"compatibility", op_compatibility},
      {"wtilting-transfer", op_wtilting_transfer},
      {"add-membership", op_add_membership},
      {"exhaustive", op_exhaustive},
      {"tr-formula", op_tr_formula},
      {"pd-counterexample", op_pd_counterexample},
      {"gc-global-dim", op_gc_global_dim},
      {"precovers", op_precovers},
      {"cm-free", op_cm_free},
      {"global-bounds", op_global_bounds},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& task_ops() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (const auto& [k, f] : ops()) out.push_back(k);
    return out;
  }();
  return v;
}

bool RunReport::ok() const {
  for (const auto& t : tasks)
    if (t.failed()) return false;
  return true;
}

std::size_t RunReport::indefinite() const {
  std::size_t n = 0;
  for (const auto& t : tasks)
    for (const auto& c : t.report.claims) n += indefinite_claim(c);
  return n;
}

RunReport run_fixture(const FixtureDocument& doc, const RunOptions& opt) {
  RunReport out;
  out.fixture = doc.name;
  out.digest = fixture_digest(doc);
  for (const auto& id : opt.task_filter) {
    bool known = false;
    for (const auto& t : doc.tasks) known = known || t.id == id;
    if (!known) throw FixtureError("tasks", "no task with id \"" + id + "\"");
  }
  for (const auto& t : doc.tasks)
    if (!ops().count(t.op)) throw FixtureError("tasks." + t.id + ".op", "unknown op \"" + t.op + "\"");
  Workspace ws = build_workspace(doc);
  for (const auto& t : doc.tasks) {
    if (!opt.task_filter.empty() && std::find(opt.task_filter.begin(), opt.task_filter.end(), t.id) == opt.task_filter.end())
      continue;
    TaskResult tr;
    tr.id = t.id;
    tr.op = t.op;
    tr.report.title = t.id;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Ctx c{ws, t, opt, tr.report};
      ops().at(t.op)(c);
    } catch (const std::exception& e) {
      tr.error = e.what();
    }
    tr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.tasks.push_back(std::move(tr));
  }
  return out;
}

Json report_json(const Report& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json x = {{"what", c.what}, {"status", status_name(c.status)}};
    if (c.status != ClaimStatus::Skipped) {
      x["lhs"] = c.lhs;
      x["rhs"] = c.rhs;
    }
    if (!c.note.empty()) x["note"] = c.note;
    claims.push_back(x);
  }
  Json facts = Json::array();
  for (const auto& [k, v] : r.facts) facts.push_back({{"key", k}, {"value", v}});
  Json out = {{"title", r.title}, {"claims", claims}, {"facts", facts}};
  if (!r.family.empty()) out["family"] = r.family;
  return out;
}

Json report_json(const RunReport& r, bool timings) {
  Json tasks = Json::array();
  for (const auto& t : r.tasks) {
    Json x = {{"id", t.id}, {"op", t.op}, {"report", report_json(t.report)}, {"ok", !t.failed()}};
    if (!t.error.empty()) x["error"] = t.error;
    if (timings) x["seconds"] = t.seconds;
    tasks.push_back(x);
  }
  return {{"fixture", r.fixture}, {"inputs_digest", hex(r.digest)}, {"ok", r.ok()}, {"indefinite", r.indefinite()}, {"tasks", tasks}};
}

std::string report_text(const Report& r, const std::string& indent) {
  std::ostringstream o;
  if (!r.family.empty()) o << indent << "family: " << r.family << "\n";
  for (const auto& [k, v] : r.facts) o << indent << k << ": " << v << "\n";
  for (const auto& c : r.claims) {
    o << indent << "[" << status_name(c.status) << "] " << c.what;
    if (c.status == ClaimStatus::Skipped)
      o << " (" << c.note << ")";
    else
      o << ": " << c.lhs << " | " << c.rhs << (c.note.empty() ? "" : " (" + c.note + ")");
    o << "\n";
  }
  return o.str();
}

std::string report_text(const RunReport& r) {
  std::ostringstream o;
  o << "fixture " << (r.fixture.empty() ? "(unnamed)" : r.fixture) << ", inputs digest " << hex(r.digest) << "\n";
  for (const auto& t : r.tasks) {
    o << "task " << t.id << " (" << t.op << "): " << (t.failed() ? "FAIL" : "ok") << "\n";
    if (!t.error.empty()) o << "  error: " << t.error << "\n";
    o << report_text(t.report, "  ");
  }
  const std::size_t ind = r.indefinite();
  if (ind) o << "warning: " << ind << " claim(s) indefinite at the bound\n";
  o << (r.ok() ? "all assertions hold" : "some assertion failed") << "\n";
  return o.str();
}

int exit_status(const RunReport& r) { return r.ok() ? 0 : 1; }

}  // namespace trigor::io
