#pragma once

#include "sarp/common/error.hpp"
#include "sarp/eval/metrics.hpp"
#include "sarp/pipeline/config.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sarp::pipeline {

/// Raised by the CLI-facing entry points when repair stops unconverged.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Outcome of one repair stage.
struct RepairSummary {
  std::string label;  ///< "repaired" or "repaired_penalty"
  RepairMode mode = RepairMode::lagrangian;
  bool converged = false;
  int outer_iterations = 0;
  int returned_iteration = 0;
  std::size_t samples = 0;
  std::size_t initial_violating = 0;
  std::size_t final_violating = 0;
  std::size_t final_violations = 0;
};

/// One point of the collision-model sensitivity sweep.
struct SweepPoint {
  double explore_fraction = 0.0;
  int replicate = 0;
  std::size_t train_rows = 0;
  double model_accuracy = 0.0;
  bool converged = false;
  MetricsReport report;
};

/// Replicate means of one sweep level.
struct SweepLevel {
  double explore_fraction = 0.0;
  int replicates = 0;
  double accuracy = 0.0;
  double gr = 0.0;
  double e = 0.0;
};

/// Groups sweep points by training fraction; sorted by mean accuracy.
std::vector<SweepLevel> sweep_levels(const std::vector<SweepPoint>& points);

/// File layout and stage implementations for one output directory. Every
/// stage reads its inputs from and writes its outputs to `dir`, so stages can
/// be rerun independently; the manifest records seeds, counts and file
/// digests.
class Runner {
 public:
  Runner(RunConfig config, std::filesystem::path dir);

  const RunConfig& config() const { return config_; }
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file(const std::string& name) const { return dir_ / name; }

  /// Writes config.resolved.json.
  void write_resolved_config() const;

  void gen_demos();
  void gen_explore();
  void gen_gait();
  void train_policy();
  void train_predictor();
  /// Repairs policy.model. `mode` overrides the configured mode; penalty-only
  /// results are stored under the "repaired_penalty" label.
  RepairSummary repair(std::optional<RepairMode> mode = std::nullopt);
  /// Paired original-vs-repaired evaluation on held-out data; writes
  /// metrics.csv, table.txt, logs and figures.
  std::vector<MetricsReport> evaluate();
  /// Rebuilds metrics.csv and table.txt from the persisted evaluation logs.
  std::vector<MetricsReport> report();
  /// Collision-model sensitivity sweep (navigation only).
  std::vector<SweepPoint> sweep();
  /// Every stage in order. Returns the repair summaries.
  std::vector<RepairSummary> run_all();

 private:
  void record(const std::string& stage, nlohmann::json entry) const;
  std::string digest(const std::string& name) const;
  std::vector<std::string> repaired_labels() const;

  RunConfig config_;
  std::filesystem::path dir_;
};

/// FNV-1a digest of a file's bytes, as 16 hex digits.
std::string file_digest(const std::filesystem::path& path);

}  // namespace sarp::pipeline
