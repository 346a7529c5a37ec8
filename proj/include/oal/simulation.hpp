#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oal/channel.hpp"
#include "oal/localization.hpp"
#include "oal/rng.hpp"

namespace oal {

/// Point in the deployment frame: x, y horizontal, z depth (positive down).
struct Vec3 {
  double x_m = 0.0;
  double y_m = 0.0;
  double z_m = 0.0;
};

/// Beacon track: plasma sources at x_start, x_start + spacing, ... <= x_end,
/// all at the same y offset and depth.
struct TrackConfig {
  double y_m = 0.0;
  double depth_m = 1.0;
  double x_start_m = -100.0;
  double x_end_m = 600.0;
  double spacing_m = 10.0;
  int blocks_per_source = 5;
};

/// Full Monte Carlo scenario. Defaults reproduce the 100-node, 500 m cube
/// deployment with a 10 m track pitch.
struct ScenarioConfig {
  double volume_x_m = 500.0;
  double volume_y_m = 500.0;
  double volume_z_m = 500.0;
  int node_count = 100;
  TrackConfig track;
  ChannelParams channel;
  std::vector<double> snr_grid_db{0.0, 10.0, 20.0, 30.0, 40.0};
  int trials = 20;
  std::uint64_t master_seed = 42;
  double depth_sensor_std_m = 0.0;
  double side_flip_prob = 0.0;

  /// Minimum pair baseline handed to the localizer: one track spacing.
  double min_baseline_m() const { return track.spacing_m; }

  /// Throws ConfigError naming the offending key.
  void validate() const;
};

/// Outcome for one node in one trial. estimate is empty when the node could
/// not be localized (nothing detected, no eligible pair, or a solver error).
struct NodeOutcome {
  Vec3 truth;
  std::optional<PositionEstimate> estimate;
};

struct TrialResult {
  std::vector<NodeOutcome> nodes;
};

/// Per-SNR aggregate row. rmse_m averages the per-trial RMSE over localized
/// nodes; the fractions and the x-error column are pooled over all trials.
struct SnrRow {
  double snr_db = 0.0;
  double rmse_m = 0.0;
  double localized_fraction = 0.0;
  double degenerate_fraction = 0.0;
  double mean_abs_x_error_m = 0.0;
};

struct RmseReport {
  std::vector<SnrRow> rows;
  ScenarioConfig config_echo;
};

enum class Execution {
  serial,   ///< plain-loop reference implementation
  parallel  ///< OpenMP over (snr, trial) work items; bit-identical to serial
};

/// Plasma sources along the configured track, sorted by x.
std::vector<PlasmaSource> build_track(const ScenarioConfig& config);

/// node_count positions i.i.d. uniform over the deployment box.
std::vector<Vec3> deploy_nodes(const ScenarioConfig& config, Rng& rng);

/// Forward-simulates one node against the track at the given SNR and runs the
/// localizer. Exposed separately so tests can place nodes exactly.
std::optional<PositionEstimate> simulate_node(const ScenarioConfig& config,
                                              std::span<const PlasmaSource> sources,
                                              double alpha_db_per_km, const Vec3& truth,
                                              double snr_db, Rng& rng);

/// One Monte Carlo trial: deploy, forward-simulate, localize every node.
/// The trial stream is derived from (master_seed, snr_index, trial_index), so
/// results do not depend on execution order.
TrialResult run_trial(const ScenarioConfig& config, double snr_db, std::size_t snr_index,
                      std::size_t trial_index);

/// Root mean square 3D position error over paired truth/estimate lists.
double rmse(std::span<const Vec3> truths, std::span<const Vec3> estimates);

/// Full SNR sweep. Deterministic for a given config: the serial and parallel
/// executions produce bit-identical reports.
RmseReport sweep_snr(const ScenarioConfig& config, Execution execution = Execution::parallel);

}  // namespace oal
