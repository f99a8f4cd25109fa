#pragma once

#include "sarp/diffcore/matrix.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sarp {

struct Column {
  std::string name;
  std::string unit;

  bool operator==(const Column&) const = default;
};

/// Expert or exploration data: one row per time step, rows of a trajectory
/// contiguous and in time order.
struct SampleSet {
  std::vector<Column> state_columns;
  std::vector<Column> action_columns;
  std::vector<Column> feature_columns;  ///< may be empty
  Matrix states;
  Matrix actions;
  Matrix features;
  std::vector<int> trajectory_ids;

  std::size_t size() const { return trajectory_ids.size(); }
  bool empty() const { return trajectory_ids.empty(); }
  bool has_features() const { return !feature_columns.empty(); }

  /// Throws DataError on inconsistent shapes, non-finite values or
  /// non-contiguous trajectories.
  void validate() const;

  /// Distinct trajectory ids in order of first appearance.
  std::vector<int> trajectories() const;
  /// [begin, end) row range of every trajectory, in row order.
  std::vector<std::pair<std::size_t, std::size_t>> trajectory_ranges() const;

  SampleSet select_rows(std::span<const std::size_t> rows) const;
  SampleSet select_trajectories(std::span<const int> ids) const;

  int state_index(std::string_view name) const;
  int action_index(std::string_view name) const;
  int feature_index(std::string_view name) const;

  bool same_schema(const SampleSet& other) const;
};

/// Appends `more` below `into`; schemas must match.
void append(SampleSet& into, const SampleSet& more);

/// Column lookup that throws DataError naming the missing column.
int column_index(const std::vector<Column>& columns, std::string_view name);

}  // namespace sarp
