#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "trigor/io/examples.hpp"
#include "trigor/io/fixture.hpp"
#include "trigor/oracle/enumerate.hpp"
#include "trigor/oracle/exhaustive.hpp"
#include "trigor/relgor/gc.hpp"
#include "trigor/trimat/checks.hpp"

using namespace trigor;
using algebra::Module;
using algebra::Morphism;
using linalg::Field;
using algebra::AlgebraPtr;
using trigor::ClaimStatus;

namespace {

// Wall-clock budgets in seconds; every count below is an exact equality.
constexpr double kLimitExample = 5, kLimitTriples = 60, kLimitExt = 120, kLimitStructure = 120;
constexpr double kLimitTransfer = 30, kLimitDims = 120, kLimitAS = 60, kLimitCertificates = 300, kLimitPrecovers = 30;
constexpr std::size_t kMutations = 20;
constexpr std::uint64_t kMutationSeed = 20240601;

struct Fixture {
  std::string name, cap;
  trimat::TriangleAlgebra ta;
};

std::vector<Fixture> fixtures() {
  return {
      {"T(k[x]/x^2) over GF(2)", "2|2", trimat::TriangleAlgebra::of_algebra(algebra::dual_numbers(Field::prime(2)))},
      {"T(k[x]/x^2) over GF(3)", "2|2", trimat::TriangleAlgebra::of_algebra(algebra::dual_numbers(Field::prime(3)))},
      {"T(A2) over GF(2)", "2,2|2,2", trimat::TriangleAlgebra::of_algebra(algebra::path_algebra_An(Field::prime(2), 2))},
  };
}

std::vector<relgor::Certificate> g_certificates;

void keep(const relgor::GCVerdict& v) {
  if (v.certificate) g_certificates.push_back(*v.certificate);
}
void keep(const relgor::WTilting& w) {
  keep(w.on_c);
  keep(w.on_regular);
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " MISMATCH(" << what << ")";
    }
  }
};

// ---- 1 ----
void example_reproduction(Outcome& o) {
  for (std::uint32_t p : {2u, 3u}) {
    auto doc = io::example_fixture("p-not-w-tilting");
    doc.characteristic = p;
    auto ws = io::build_workspace(doc);
    const Module &i1 = ws.module("I1"), &r = ws.module("C1"), &c = ws.module("C");
    auto pd = homology::pd_up_to(i1, 8);
    const std::size_t ext = homology::ext_dim(i1, r, 1);
    auto w = relgor::is_w_tilting(c, 8);
    keep(w);
    const bool refuted = w.kind == relgor::Verdict::Refuted && w.on_c.refutation &&
                         w.on_c.refutation->kind == relgor::Witness::W2 && w.on_c.refutation->dimension == 1;
    const bool recheck = refuted && relgor::recheck_refutation(c, c, *w.on_c.refutation);
    const std::size_t ext_cc = homology::ext_dim(c, c, 1);
    o.detail << " GF(" << p << "): pd(I1)=" << pd.to_string() << " Ext1(I1,R)=" << ext << " p(C1,C2) "
             << relgor::verdict_name(w.kind) << " Ext1_T(C,C)=" << ext_cc;
    o.require(pd.exact() && *pd.value == 1, "pd(I1)");
    o.require(ext == 1, "Ext1(I1,R)");
    o.require(refuted, "W2 refutation of dimension 1");
    o.require(recheck, "separate-route recheck");
    o.require(ext_cc == 1, "Ext1_T(C,C)");
    for (const auto& run : io::reproduce_example("p-not-w-tilting")) o.require(run.ok(), "fixture assertions");
  }
}

// ---- 2, 3 ----
void exhaustive(Outcome& o, const std::string& property) {
  for (const auto& f : fixtures()) {
    auto s = trimat::Setting::regular(f.ta);
    auto res = oracle::exhaustive_check(property, s, f.cap);
    o.detail << " " << f.name << ": " << res.passed << " pass, " << res.failed << " mismatch, " << res.not_applicable
             << " hypothesis not met;";
    o.require(res.failed == 0, f.name);
    o.require(res.passed > 0, f.name + " nothing checked");
  }
}

// ---- 4 ----
void structure(Outcome& o) {
  for (const auto& f : fixtures()) {
    auto s = trimat::Setting::regular(f.ta);
    auto res = oracle::exhaustive_check("gc-structure", s, f.cap);
    const std::size_t definite = res.passed + res.failed;
    const double rate = res.cases ? static_cast<double>(res.indefinite) / static_cast<double>(res.cases) : 0.0;
    o.detail << " " << f.name << ": " << definite << " definite, " << res.failed << " mismatch, inconclusive rate "
             << rate << ";";
    o.require(res.failed == 0, f.name);
    o.require(res.indefinite == 0, f.name + " inconclusive");
    o.require(definite > 0, f.name + " nothing checked");
    for (const auto& m : oracle::enumerate_modules(f.ta.T(), oracle::EnumerationCap::parse(f.cap, f.ta.T())))
      keep(relgor::is_gc_projective(m, s.c_flat, s.bound));
  }
}

// ---- 5 ----
void transfer(Outcome& o) {
  {
    auto ws = io::build_workspace(io::example_fixture("theta-transfer"));
    auto wr = relgor::is_w_tilting(ws.module("R"), 4);
    auto wc = relgor::is_w_tilting(ws.module("C"), 4);
    keep(wr);
    keep(wc);
    o.detail << " R " << relgor::verdict_name(wr.kind) << ", (R; R+R) " << relgor::verdict_name(wc.kind) << " at bound 4;";
    o.require(wr.kind == relgor::Verdict::Certified && wc.kind == relgor::Verdict::Certified, "bound-4 certification");
  }
  {
    auto ws = io::build_workspace(io::example_fixture("w-tilting-not-p"));
    auto w = relgor::is_w_tilting(ws.module("C"), 8);
    keep(w);
    auto a = trimat::add_membership_triple(*ws.triangle, ws.triple("C"), ws.module("R"), ws.module("R"));
    o.detail << " I0+I1 " << relgor::verdict_name(w.kind) << ", p-form " << (a.member ? "accepted" : "refuted (" + a.reason + ")");
    o.require(w.kind == relgor::Verdict::Certified, "I0+I1 w-tilting");
    o.require(!a.member, "p-form refuted");
  }
  for (const char* id : {"theta-transfer", "w-tilting-not-p", "injective-pair"})
    for (const auto& run : io::reproduce_example(id)) o.require(run.ok(), std::string(id) + " assertions");
}

// ---- 6 ----
void dims(Outcome& o) {
  auto dual = trimat::TriangleAlgebra::of_algebra(algebra::dual_numbers(Field::prime(2)));
  auto a2 = trimat::TriangleAlgebra::of_algebra(algebra::path_algebra_An(Field::prime(2), 2));
  auto gpd = [](const AlgebraPtr& alg, const Module& c, const std::string& cap) {
    auto mods = oracle::enumerate_modules(alg, oracle::EnumerationCap::parse(cap, alg));
    return relgor::gc_global_dim(alg, c, mods, 8, true);
  };
  auto r_dual = gpd(dual.A(), algebra::regular(dual.A()), "2");
  auto t_dual = gpd(dual.T(), algebra::regular(dual.T()), "2|2");
  auto gl_a2 = homology::gldim_up_to(a2.A(), 8);
  auto t_a2 = gpd(a2.T(), algebra::regular(a2.T()), "2,2|2,2");
  o.detail << " G-PD(k[x]/x^2)=" << r_dual.lower.to_string() << " G-PD(T(k[x]/x^2))=" << t_dual.lower.to_string()
           << " gldim(A2)=" << gl_a2.to_string() << " lD(T(A2))=" << t_a2.lower.to_string() << ";";
  o.require(r_dual.lower.exact() && *r_dual.lower.value == 0, "G-PD(R)");
  o.require(t_dual.lower.exact() && *t_dual.lower.value == 1, "G-PD(T(R)) = 0+1");
  o.require(gl_a2.exact() && *gl_a2.value == 1, "gldim A2");
  o.require(t_a2.lower.exact() && *t_a2.lower.value == 2, "lD(T(A2)) = 1+1");

  for (const auto& r : {dual.A(), a2.A()}) {
    auto rep = trimat::tr_formula_check(r, algebra::regular(r), 2, 2, 8);
    o.require(rep.ok(), "T(R) formula on " + r->name());
  }
  for (const auto& f : fixtures()) {
    auto res = oracle::exhaustive_check("pd-sandwich", trimat::Setting::regular(f.ta), f.cap);
    o.detail << " sandwich " << f.name << ": " << res.passed << " pass, " << res.failed << " violations;";
    o.require(res.failed == 0 && res.indefinite == 0 && res.passed > 0, "sandwich " + f.name);
  }
}

// ---- 7 ----
void counterexample(Outcome& o) {
  auto r = algebra::path_algebra_An(Field::prime(2), 2);
  auto ta = trimat::TriangleAlgebra::of_algebra(r);
  auto w = trimat::pd_counterexample_search(r, "2,2|2,2");
  o.require(w.found, "witness found");
  if (!w.found) return;
  auto pd_t = homology::pd_up_to(trimat::triple_to_flat(ta, w.m), 8);
  auto pd_m1 = homology::pd_up_to(w.m.m1, 8);
  auto pd_cok = homology::pd_up_to(algebra::cokernel_of(w.m.phi).module, 8);
  const auto k1 = trimat::flat_to_triple(ta, homology::projective_resolution(w.flat)->syzygy(1));
  const bool inj = k1.phi.is_injective();
  o.detail << " M = " << w.m.describe() << " after " << w.searched << " modules: pd_T(M)=" << pd_t.to_string()
           << " pd(M1)=" << pd_m1.to_string() << " pd(coker phi)=" << pd_cok.to_string()
           << " phi of K1=" << k1.describe() << " injective=" << (inj ? "yes" : "no") << ";";
  o.require(pd_t.exact() && *pd_t.value == 2, "pd_T(M) = 2");
  o.require(pd_m1.exact() && *pd_m1.value <= 1, "pd(M1) <= 1");
  o.require(pd_cok.exact() && *pd_cok.value <= 1, "pd(coker) <= 1");
  o.require(inj, "phi of the first syzygy injective");
  o.require(w.report.ok() && w.report.count(ClaimStatus::Pass) >= 4, "report re-validations");
}

// ---- 8 ----
struct Slot {
  std::string name;
  Morphism* map;
  std::function<bool(const relgor::Certificate&)> broken;  // an identity the mutated map must violate
};

bool differs_from_identity(const Morphism& f) { return !(f == Morphism::identity(f.source())); }

std::vector<Slot> slots(relgor::Certificate& c) {
  std::vector<Slot> out;
  auto& l = c.left;
  for (std::size_t i = 0; i < l.inclusions.size() && i < l.differentials.size(); ++i) {
    out.push_back({"left inclusion " + std::to_string(i), &l.inclusions[i], [i](const relgor::Certificate& x) {
                     return !x.left.inclusions[i].intertwines() ||
                            !compose(x.left.differentials[i], x.left.inclusions[i]).is_zero() ||
                            !x.left.inclusions[i].is_injective();
                   }});
    if (i > 0)
      out.push_back({"left differential " + std::to_string(i), &l.differentials[i], [i](const relgor::Certificate& x) {
                       return !x.left.differentials[i].intertwines() ||
                              !compose(x.left.differentials[i], x.left.inclusions[i]).is_zero() ||
                              !compose(x.left.differentials[i - 1], x.left.differentials[i]).is_zero();
                     }});
  }
  auto& r = c.right;
  for (std::size_t j = 0; j < r.approximations.size() && j < r.projections.size(); ++j) {
    out.push_back({"right approximation " + std::to_string(j), &r.approximations[j], [j](const relgor::Certificate& x) {
                     return !x.right.approximations[j].intertwines() ||
                            !compose(x.right.projections[j], x.right.approximations[j]).is_zero() ||
                            !x.right.approximations[j].is_injective();
                   }});
    out.push_back({"right projection " + std::to_string(j), &r.projections[j], [j](const relgor::Certificate& x) {
                     return !x.right.projections[j].intertwines() ||
                            !compose(x.right.projections[j], x.right.approximations[j]).is_zero() ||
                            !x.right.projections[j].is_surjective();
                   }});
  }
  for (std::size_t j = 0; j < r.term_witnesses.size(); ++j)
    out.push_back({"term witness " + std::to_string(j), &r.term_witnesses[j].section, [j](const relgor::Certificate& x) {
                     const auto& w = x.right.term_witnesses[j];
                     return !w.section.intertwines() || differs_from_identity(compose(w.retraction, w.section));
                   }});
  if (l.closure_witness)
    out.push_back({"left closure witness", &l.closure_witness->section, [](const relgor::Certificate& x) {
                     const auto& w = *x.left.closure_witness;
                     return !w.section.intertwines() || differs_from_identity(compose(w.retraction, w.section));
                   }});
  std::erase_if(out, [](const Slot& s) { return s.map->source().is_zero() || s.map->target().is_zero(); });
  return out;
}

void certificates(Outcome& o) {
  std::size_t accepted = 0;
  for (const auto& c : g_certificates) accepted += relgor::validate_certificate(c).ok;
  o.detail << " accepted " << accepted << " of " << g_certificates.size() << " emitted certificates;";
  o.require(!g_certificates.empty() && accepted == g_certificates.size(), "all emitted certificates accepted");

  std::mt19937_64 rng(kMutationSeed);
  std::size_t made = 0, rejected = 0, attempts = 0;
  std::vector<std::size_t> rich;
  for (std::size_t i = 0; i < g_certificates.size(); ++i) {
    auto copy = g_certificates[i];
    if (!slots(copy).empty()) rich.push_back(i);
  }
  o.require(!rich.empty(), "certificates with mutable maps");
  while (made < kMutations && !rich.empty() && attempts < 100 * kMutations) {
    ++attempts;
    relgor::Certificate cert = g_certificates[rich[rng() % rich.size()]];
    auto ss = slots(cert);
    Slot& slot = ss[rng() % ss.size()];
    std::vector<int> vs;
    for (int v = 0; v < static_cast<int>(slot.map->maps().size()); ++v)
      if (slot.map->at(v).rows() && slot.map->at(v).cols()) vs.push_back(v);
    if (vs.empty()) continue;
    auto maps = slot.map->maps();
    const int v = vs[rng() % vs.size()];
    auto& mat = maps[static_cast<std::size_t>(v)];
    const std::size_t i = rng() % mat.rows(), j = rng() % mat.cols();
    const std::uint32_t p = cert.m.field().p ? cert.m.field().p : 7;
    const auto delta = linalg::Scalar(cert.m.field(), 1 + static_cast<long long>(rng() % (p - 1)));
    mat.set(i, j, mat.at(i, j) + delta);
    *slot.map = Morphism::unchecked(slot.map->source(), slot.map->target(), maps);
    cert.digest = relgor::certificate_digest(cert);
    if (!slot.broken(cert)) continue;  // not provably corrupt; draw again
    ++made;
    const bool caught = !relgor::validate_certificate(cert).ok;
    rejected += caught;
    if (!caught) o.detail << " accepted corrupt " << slot.name << ";";
  }
  o.detail << " rejected " << rejected << " of " << made << " mutation-corrupted certificates";
  o.require(made == kMutations, "enough corruptions generated");
  o.require(rejected == made, "all corruptions rejected");
}

// ---- 9 ----
void precovers(Outcome& o) {
  auto doc = io::load_fixture(std::string(TRIGOR_FIXTURE_DIR) + "/dual-numbers-suite.json");
  io::RunOptions opt;
  opt.task_filter = {"precovers"};
  auto run = io::run_fixture(doc, opt);
  o.require(run.tasks.size() == 1 && run.tasks[0].error.empty(), "task ran");
  if (run.tasks.size() != 1) return;
  const auto& rep = run.tasks[0].report;
  std::string special, broken, witness;
  for (const auto& c : rep.claims) {
    if (c.what == "constructed precovers are special") special = c.lhs + (c.status == ClaimStatus::Pass ? "" : " FAIL");
    if (c.what == "broken maps are rejected with a witness") broken = c.lhs + (c.status == ClaimStatus::Pass ? "" : " FAIL");
  }
  for (const auto& [k, v] : rep.facts)
    if (k == "first broken witness") witness = v;
  o.detail << " constructed special: " << special << "; broken rejected: " << broken << "; e.g. " << witness;
  o.require(rep.ok(), "all precover claims");
  o.require(!special.empty() && special.find("FAIL") == std::string::npos, "constructed precovers special");
  o.require(!broken.empty() && broken.find("FAIL") == std::string::npos, "broken maps rejected");
  o.require(!witness.empty(), "named witness");
}

}  // namespace

int main() {
  struct Criterion {
    int n;
    std::string name;
    double limit;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "p(C1,C2) not w-tilting over GF(2) and GF(3)", kLimitExample, example_reproduction},
      {2, "triple vs flat projectivity/injectivity", kLimitTriples, [](Outcome& o) { exhaustive(o, "triple-projectivity"); }},
      {3, "Ext isomorphisms in degrees 1..3", kLimitExt, [](Outcome& o) { exhaustive(o, "ext-isos"); }},
      {4, "G_C-projective structure with C = T", kLimitStructure, structure},
      {5, "w-tilting transfer", kLimitTransfer, transfer},
      {6, "dimension formulas and sandwich", kLimitDims, dims},
      {7, "projective dimension counterexample", kLimitAS, counterexample},
      {8, "certificate soundness", kLimitCertificates, certificates},
      {9, "special precovers on T(k[x]/x^2)", kLimitPrecovers, precovers},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s criterion %d: %s (%.2fs, limit %.0fs%s)%s\n", pass ? "PASS" : "FAIL", c.n, c.name.c_str(), secs,
                c.limit, in_time ? "" : ", over time", o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAIL" : "PASS", failures, criteria.size());
  return failures ? 1 : 0;
}
