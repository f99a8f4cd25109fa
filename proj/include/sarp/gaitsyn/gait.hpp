#pragma once

#include "sarp/datasets/sample_set.hpp"
#include "sarp/datasets/transforms.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sarp::gait {

/// Two-harmonic periodic channel: amplitude[0] sin(phi + phase[0]) +
/// amplitude[1] sin(2 phi + phase[1]) + offset.
struct Harmonics {
  std::array<double, 2> amplitude{0.0, 0.0};
  std::array<double, 2> phase{0.0, 0.0};
  double offset = 0.0;
};

struct GaitConfig {
  int period = 100;                 ///< steps per stride
  double rate_hz = 100.0;           ///< sampling rate for the velocity channels
  int n_strides = 250;
  int strides_per_trial = 10;       ///< strides per trajectory
  Harmonics upper_limb{{20.0, 4.0}, {0.0, 0.5}, 0.0};
  Harmonics lower_limb{{30.0, 8.0}, {-1.0, 0.3}, 10.0};
  Harmonics ankle{{30.0, 30.0}, {0.0, 0.0}, 0.0};
  double pressure_peak = 60.0;      ///< N/cm^2 at unit stride gain on the first sensor
  std::array<double, 4> pressure_scale{1.0, 0.95, 0.9, 0.85};
  std::array<double, 4> pressure_peak_phase{0.35, 0.40, 0.45, 0.50};  ///< fraction of the period
  double stride_jitter = 0.3;       ///< stride gain = 1 - stride_jitter * U[0, 1)
  double limb_gain_noise = 0.05;    ///< std of the limb gain around the stride gain
  std::array<double, 9> noise_std{0.2, 2.0, 0.2, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0};  ///< per frame channel
  std::uint64_t seed = 1;

  void validate() const;
};

/// Frame channel names in schema order.
inline constexpr std::array<std::string_view, 9> kChannels = {
    "alpha_ul", "dalpha_ul", "alpha_ll", "dalpha_ll", "p1", "p2", "p3", "p4", "alpha_a"};

enum class Observability { full, partial };
Observability parse_observability(std::string_view s);
std::string_view to_string(Observability o);

/// Observable state columns of a mode: all nine channels, or the four limb
/// channels when pressures (and the ankle history) are withheld.
std::vector<std::string> observable_columns(Observability mode);
/// Predictor target channels s^f: limb angles and velocities and the four pressures.
std::vector<std::string> feature_channels();
/// Predictor input channels: the limb channels.
std::vector<std::string> predictor_state_channels();

/// n_strides * period frames. States are the nine channels, the action is the
/// ankle angle alpha_a, trajectories hold strides_per_trial strides each.
SampleSet generate(const GaitConfig& config);

struct PolicyIO {
  Matrix inputs;   ///< h x |observable| history, oldest first
  Matrix targets;  ///< alpha_a(t .. t+q-1)
  SampleSet windows;
};

struct PredictorIO {
  Matrix inputs;   ///< [limb history (h x 4), action window (q)]
  Matrix targets;  ///< s^f(t+1 .. t+q+1), step-major
  SampleSet windows;
};

WindowSpec policy_window(Observability mode, int h, int q,
                         PredictorIndexing indexing = PredictorIndexing::inclusive);
PolicyIO make_policy_io(const SampleSet& set, Observability mode, int h, int q,
                        PredictorIndexing indexing = PredictorIndexing::inclusive);
PredictorIO make_predictor_io(const SampleSet& set, int h, int q,
                              PredictorIndexing indexing = PredictorIndexing::inclusive);

void to_json(nlohmann::json& j, const GaitConfig& c);
void from_json(const nlohmann::json& j, GaitConfig& c);

}  // namespace sarp::gait
