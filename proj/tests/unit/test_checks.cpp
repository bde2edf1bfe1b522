#include "doctest.h"
#include "trigor/algebra/decompose.hpp"
#include "trigor/oracle/enumerate.hpp"
#include "trigor/oracle/exhaustive.hpp"
#include "trigor/trimat/checks.hpp"

using namespace trigor;
using namespace trigor::algebra;
using namespace trigor::trimat;

namespace {
Field F2 = Field::prime(2), F3 = Field::prime(3);
}

TEST_CASE("add membership of p-forms") {
  auto ta = TriangleAlgebra::of_algebra(dual_numbers(F2));
  Module r = regular(ta.A()), z = Module::zero(ta.A());
  CHECK(add_membership_triple(ta, functor_p(ta, r, r), r, r).member);
  CHECK(add_membership_triple(ta, functor_p(ta, direct_sum(r, r), z), r, r).member);
  // with U = R, h(0, N) is p(N, 0) while r(R, 0) has phi = 0
  CHECK(add_membership_triple(ta, functor_h(ta, z, direct_sum(r, r)), r, r).member);
  auto x = add_membership_triple(ta, functor_r(ta, r, z), r, r);
  CHECK_FALSE(x.member);
  CHECK(x.reason.find("not injective") != std::string::npos);
  CHECK_FALSE(add_membership_triple(ta, functor_p(ta, simple(ta.A(), 0), z), r, r).member);
}

TEST_CASE("compatibility verdicts") {
  auto dual = Setting::regular(TriangleAlgebra::of_algebra(dual_numbers(F2)));
  auto c = compatibility_report(dual, default_families(dual, 2, 2));
  CHECK(c.verdict == Compatibility::Compatible);
  CHECK(c.report.ok());

  // C = p(A2, I1 + I2) over T(A2): Ext^1(I1, A2) = 1 breaks the Ext condition
  auto ta = TriangleAlgebra::of_algebra(path_algebra_An(F2, 2));
  Module cb = direct_sum(injective(ta.B(), 0), injective(ta.B(), 1));
  auto s = Setting::make(ta, regular(ta.A()), cb);
  auto r = compatibility_report(s, default_families(s, 2, 2));
  CHECK(r.verdict == Compatibility::Refuted);
  CHECK(!r.witness.empty());
}

TEST_CASE("precover construction and broken maps") {
  auto s = Setting::regular(TriangleAlgebra::of_algebra(dual_numbers(F3)));
  auto fam = default_families(s, 2, 2);
  auto compat = compatibility_report(s, fam);
  std::size_t built = 0, broken = 0;
  for (const auto& m : oracle::enumerate_modules(s.ta.T(), oracle::EnumerationCap::parse("1|1", s.ta.T()))) {
    if (m.is_zero()) continue;
    if (auto f = construct_special_precover(s, m)) {
      ++built;
      CHECK(special_precover_check(s, compat, fam, *f).ok());
    }
    auto b = broken_precover(s, m);
    if (!b.is_surjective()) {
      ++broken;
      CHECK(special_precover_check(s, compat, fam, b).ok());  // the check agrees it is not special
    }
  }
  CHECK(built > 0);
  CHECK(broken > 0);
}

TEST_CASE("projective dimension counterexample") {
  CHECK_THROWS_AS(pd_counterexample_search(semisimple(F2, 2), "1,1|1,1"), std::invalid_argument);
  CHECK_THROWS_AS(pd_counterexample_search(dual_numbers(F2), "1|1"), std::invalid_argument);
  auto w = pd_counterexample_search(path_algebra_An(F2, 2), "2,2|2,2");
  REQUIRE(w.found);
  CHECK(w.pd_t == 2);
  CHECK(w.pd_m1 <= 1);
  CHECK(w.pd_coker <= 1);
  CHECK(w.report.ok());
  auto a3 = pd_counterexample_search(path_algebra_An(F2, 3), "1,1,1|1,1,1");
  CHECK(a3.found);
}

TEST_CASE("exhaustive registry") {
  auto s = Setting::regular(TriangleAlgebra::of_algebra(dual_numbers(F2)));
  CHECK_THROWS_AS(oracle::exhaustive_check("nope", s, "1|1"), std::invalid_argument);
  for (const auto& id : oracle::property_ids()) {
    CAPTURE(id);
    auto r = oracle::exhaustive_check(id, s, "1|1");
    CHECK(r.ok());
    CHECK(r.indefinite == 0);
    CHECK(r.passed + r.not_applicable + r.failed + r.indefinite >= r.cases);
  }
}

TEST_CASE("formula over T(R)") {
  auto r = dual_numbers(F2);
  CHECK(tr_formula_check(r, regular(r), 2, 2, 8).ok());
  auto a2 = path_algebra_An(F3, 2);
  CHECK(tr_formula_check(a2, regular(a2), 1, 1, 8).ok());
}
