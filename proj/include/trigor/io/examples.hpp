#pragma once

#include <string>
#include <vector>

#include "trigor/io/report.hpp"

namespace trigor::io {

// Built-in fixtures, identical to the files under fixtures/.
const std::vector<std::string>& example_ids();
FixtureDocument example_fixture(const std::string& id);
// The fields an example is reproduced over; the fixture's own field comes first.
std::vector<std::uint32_t> example_fields(const std::string& id);

// One run per field. Throws std::invalid_argument for an unknown id.
std::vector<RunReport> reproduce_example(const std::string& id, const RunOptions& opt = {});

}  // namespace trigor::io
