#pragma once

#include <map>
#include <string>
#include <vector>

namespace trigor {

enum class ClaimStatus { Pass, Fail, Skipped };

// One asserted equality, inequality or implication with both computed sides.
struct Claim {
  std::string what;
  std::string lhs, rhs;
  ClaimStatus status = ClaimStatus::Pass;
  std::string note;
};

struct Report {
  std::string title;
  std::string family;  // names the family when claims are family-relative
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, std::string>> facts;

  void add(std::string what, std::string lhs, std::string rhs, bool holds, std::string note = "");
  void skip(std::string what, std::string note);
  void fact(std::string key, std::string value);
  std::size_t count(ClaimStatus s) const;
  bool ok() const { return count(ClaimStatus::Fail) == 0; }
  const Claim* first_failure() const;
  void merge(const Report& other, const std::string& prefix = "");
};

std::string status_name(ClaimStatus s);

}  // namespace trigor
