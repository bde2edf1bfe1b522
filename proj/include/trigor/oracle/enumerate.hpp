#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigor/algebra/module.hpp"

namespace trigor::oracle {

using algebra::AlgebraPtr;
using algebra::Module;

constexpr std::uint64_t kDefaultWorkLimit = std::uint64_t{1} << 24;

// Per-vertex dimension bounds, optionally with a total-dimension bound.
struct EnumerationCap {
  std::vector<std::size_t> dims;
  std::optional<std::size_t> total;

  static EnumerationCap uniform(const AlgebraPtr& a, std::size_t d);
  // "2,2|2,2" or "2|2" (the bar only separates the two sides of a triangle) or "3" for every vertex.
  static EnumerationCap parse(const std::string& text, const AlgebraPtr& a);
  std::string to_string() const;
};

class WorkLimitExceeded : public std::runtime_error {
 public:
  WorkLimitExceeded(std::uint64_t estimate, std::uint64_t limit);
  std::uint64_t estimate, limit;
};

// Number of raw arrow-matrix tuples the enumeration would visit.
std::uint64_t enumeration_work(const AlgebraPtr& a, const EnumerationCap& cap);

// One module per isomorphism class within the cap (zero module first), ordered by dimension vector and then
// by the smallest encoding in the orbit. Requires a finite field.
std::vector<Module> enumerate_modules(const AlgebraPtr& a, const EnumerationCap& cap,
                                      std::uint64_t work_limit = kDefaultWorkLimit);

}  // namespace trigor::oracle
