#pragma once

#include "sarp/datasets/sample_set.hpp"

#include <filesystem>
#include <iosfwd>

namespace sarp {

/// CSV layout: a single header line of `name:unit` cells. The first column
/// is `trajectory_id:id`; state, action and feature columns carry the
/// prefixes `s.`, `a.` and `z.`. Values use %.17g and round-trip exactly.
void write_csv(std::ostream& out, const SampleSet& set);
SampleSet read_csv(std::istream& in);

void save_csv(const std::filesystem::path& path, const SampleSet& set);
SampleSet load_csv(const std::filesystem::path& path);

/// load_csv plus a check that the schema equals `expected`'s.
SampleSet load_csv(const std::filesystem::path& path, const SampleSet& expected_schema);

}  // namespace sarp
