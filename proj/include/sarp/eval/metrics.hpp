#pragma once

#include "sarp/diffcore/matrix.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sarp {

/// 100 * reached / total. Throws DataError on an empty list.
double goal_reach_rate(const std::vector<bool>& reached);
/// Sample-wise form: 100 * safe / samples. Throws DataError when empty.
double efficacy(const std::vector<bool>& unsafe);
/// Repaired-fraction form: 100 * (originally unsafe now safe) / (originally
/// unsafe). Undefined without originally-unsafe samples.
std::optional<double> repaired_efficacy(const std::vector<bool>& original_unsafe,
                                        const std::vector<bool>& new_unsafe);
/// (x_new - x_orig) / x_orig * 100, undefined when x_orig == 0.
std::optional<double> relative_change(double x_orig, double x_new);

/// Mean absolute error over the selected rows, accumulated row by row.
double mean_abs_error_streaming(const Matrix& pred, const Matrix& truth,
                                std::span<const std::size_t> rows);
/// Same quantity through a gathered block reduction.
double mean_abs_error_batch(const Matrix& pred, const Matrix& truth,
                            std::span<const std::size_t> rows);

/// Relative change of the mean absolute error on `safe_rows` between the
/// original and repaired predictions. Throws DataError on an empty subset.
std::optional<double> side_effect(const Matrix& orig_pred, const Matrix& new_pred,
                                  const Matrix& truth, std::span<const std::size_t> safe_rows);

/// One named value of a report; undefined values are kept and printed as such.
struct MetricValue {
  std::string name;
  std::optional<double> value;
  bool operator==(const MetricValue&) const = default;
};

struct MetricsReport {
  std::string scenario;
  std::string policy;
  std::uint64_t seed = 0;
  std::vector<MetricValue> entries;

  void set(const std::string& name, std::optional<double> value);
  std::optional<double> get(const std::string& name) const;
  /// get() that throws DataError for missing or undefined entries.
  double at(const std::string& name) const;
  bool operator==(const MetricsReport&) const = default;
};

/// Long format: scenario,policy,seed,metric,value.
void write_reports_csv(std::ostream& out, std::span<const MetricsReport> reports);
std::vector<MetricsReport> read_reports_csv(std::istream& in);
void save_reports_csv(const std::filesystem::path& path, std::span<const MetricsReport> reports);
std::vector<MetricsReport> load_reports_csv(const std::filesystem::path& path);

/// Fixed-width text table, one row per report, one column per metric name.
std::string render_table(std::span<const MetricsReport> reports,
                         const std::vector<std::string>& columns, const std::string& title = {});

struct HistogramSeries {
  std::string label;
  std::vector<double> values;
  std::string color = "steelblue";
};

/// Overlaid histograms with an optional vertical threshold marker.
void write_histogram_svg(std::ostream& out, const std::string& title, const std::string& xlabel,
                         std::span<const HistogramSeries> series, int bins,
                         std::optional<double> threshold = std::nullopt);
void save_histogram_svg(const std::filesystem::path& path, const std::string& title,
                        const std::string& xlabel, std::span<const HistogramSeries> series,
                        int bins, std::optional<double> threshold = std::nullopt);

/// (x, y) curves, e.g. efficacy against model accuracy.
struct CurveSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "steelblue";
};
void save_curve_svg(const std::filesystem::path& path, const std::string& title,
                    const std::string& xlabel, const std::string& ylabel,
                    std::span<const CurveSeries> series);

}  // namespace sarp
