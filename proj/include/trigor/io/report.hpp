#pragma once

#include <string>
#include <vector>

#include "trigor/io/fixture.hpp"
#include "trigor/oracle/enumerate.hpp"
#include "trigor/relgor/gc.hpp"
#include "trigor/report.hpp"

namespace trigor::io {

struct RunOptions {
  std::size_t bound = relgor::kDefaultBound;
  std::string cap;  // default cap for tasks that enumerate; a task's own "cap" wins
  std::uint64_t work_limit = oracle::kDefaultWorkLimit;
  std::uint64_t seed = 0;
  std::vector<std::string> task_filter;  // task ids; empty runs everything
};

struct TaskResult {
  std::string id, op;
  Report report;
  std::string error;  // precondition or validation failure; counts as a failed assertion
  double seconds = 0;

  bool failed() const { return !error.empty() || !report.ok(); }
};

struct RunReport {
  std::string fixture;
  std::uint64_t digest = 0;
  std::vector<TaskResult> tasks;

  bool ok() const;
  // Claims skipped because a verdict was Inconclusive or a value ran past the bound.
  std::size_t indefinite() const;
};

// Executes the tasks in declaration order. Task ops:
//   w-tilting, gc-projective, gcpd, pd, ext, projective, injective, gldim, compatibility,
//   wtilting-transfer, add-membership, exhaustive, tr-formula, pd-counterexample, gc-global-dim, precovers,
//   cm-free, global-bounds
// An optional "expect" parameter turns the computed value into an assertion.
RunReport run_fixture(const FixtureDocument& doc, const RunOptions& opt);
const std::vector<std::string>& task_ops();

Json report_json(const Report& r);
Json report_json(const RunReport& r, bool timings = true);
std::string report_text(const Report& r, const std::string& indent = "");
std::string report_text(const RunReport& r);

// 0 when no assertion failed, 1 otherwise. Inconclusive results do not fail.
int exit_status(const RunReport& r);

}  // namespace trigor::io
