#include "trigor/report.hpp"

namespace trigor {

void Report::add(std::string what, std::string lhs, std::string rhs, bool holds, std::string note) {
  claims.push_back({std::move(what), std::move(lhs), std::move(rhs), holds ? ClaimStatus::Pass : ClaimStatus::Fail,
                    std::move(note)});
}

void Report::skip(std::string what, std::string note) {
  claims.push_back({std::move(what), "", "", ClaimStatus::Skipped, std::move(note)});
}

void Report::fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }

std::size_t Report::count(ClaimStatus s) const {
  std::size_t n = 0;
  for (const auto& c : claims) n += c.status == s;
  return n;
}

const Claim* Report::first_failure() const {
  for (const auto& c : claims)
    if (c.status == ClaimStatus::Fail) return &c;
  return nullptr;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.claims) {
    c.what = prefix + c.what;
    claims.push_back(std::move(c));
  }
  for (const auto& [k, v] : other.facts) facts.emplace_back(prefix + k, v);
}

std::string status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

}  // namespace trigor
