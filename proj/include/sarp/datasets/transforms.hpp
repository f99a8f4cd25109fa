#pragma once

#include "sarp/datasets/sample_set.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sarp {

/// Upper end of the predictor target range relative to the anchor t.
/// inclusive: s^f(t+1 .. t+q+1), q+1 steps. shifted: s^f(t+1 .. t+q), q steps.
enum class PredictorIndexing { inclusive, shifted };

PredictorIndexing parse_predictor_indexing(std::string_view s);
std::string_view to_string(PredictorIndexing p);

struct WindowSpec {
  int history = 1;                          ///< h
  int horizon = 1;                          ///< q
  std::vector<std::string> observable_columns;
  std::vector<std::string> feature_columns; ///< predictor targets; empty = all states
  PredictorIndexing indexing = PredictorIndexing::inclusive;

  void validate() const;
  int target_steps() const { return indexing == PredictorIndexing::inclusive ? horizon + 1 : horizon; }
};

struct WindowStats {
  std::size_t windows = 0;
  std::size_t skipped_trajectories = 0;
};

/// One row per valid anchor t inside each trajectory:
///   states   = s^o(t-h+1 .. t) concatenated oldest first
///   actions  = a(t .. t+q-1)
///   features = s^f(t+1 .. t+q+1)  (or t+q under shifted indexing)
/// Windows never cross trajectory boundaries; trajectories without a valid
/// anchor are skipped and counted.
SampleSet window(const SampleSet& set, const WindowSpec& spec, WindowStats* stats = nullptr);

/// Valid anchors of a trajectory of `length` rows.
std::size_t anchor_count(std::size_t length, const WindowSpec& spec);

/// Trajectory-level split. n_train = round(fraction * n_traj), clamped to
/// [1, n_traj - 1]. Deterministic for a given seed.
std::pair<SampleSet, SampleSet> split(const SampleSet& set, double train_fraction,
                                      std::uint64_t seed);

/// Z-score statistics. Columns with std below kMinStd get mean 0, std 1 and
/// pass through unchanged.
struct NormStats {
  std::vector<Column> state_columns;
  std::vector<Column> action_columns;
  RowVector state_mean, state_std;
  RowVector action_mean, action_std;

  static constexpr double kMinStd = 1e-12;
  static NormStats compute(const SampleSet& set);
};

SampleSet normalize(const SampleSet& set, const NormStats& stats);
SampleSet denormalize(const SampleSet& set, const NormStats& stats);

/// Column mean/std of a matrix with the same constant-column rule.
std::pair<RowVector, RowVector> column_stats(const Matrix& m);

}  // namespace sarp
