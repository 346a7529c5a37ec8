#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "oal/channel.hpp"
#include "oal/ranging.hpp"

namespace oal {

/// One plasma burst created by the airborne beacon. Sources on a single track
/// share y_m and depth_m; the beacon varies x only.
struct PlasmaSource {
  double x_m = 0.0;
  double y_m = 0.0;
  double depth_m = 0.0;  ///< positive down, surface at 0
  double spl_db = 0.0;   ///< declared source level, dB re 1 uPa at 1 m
};

/// A source as seen by one node: the block-averaged level plus the directional
/// receiver's side indicator that picks the +/- branch of the y solution.
struct NodeObservation {
  PlasmaSource source;
  double mean_sil_db = 0.0;
  bool side_positive = true;
};

struct PositionEstimate {
  double x_m = 0.0;
  double y_m = 0.0;
  double z_m = 0.0;        ///< always the sensed depth, untouched by the solver
  bool degenerate = false; ///< true when a radicand was clamped to zero
  std::pair<std::size_t, std::size_t> pair{0, 1};  ///< selected observation indices
};

/// Mean of the detected block levels, in dB. Undetected entries are skipped;
/// throws UnlocalizableError when nothing detected remains.
double average_sil(std::span<const ReceivedLevel> block_levels);

/// Picks the equivalent-pressure pair. Candidates are the pairs (i, j), i < j,
/// with baseline |x_i - x_j| >= min_baseline_m that straddle the strongest
/// observation; far nearly-equidistant pairs would otherwise win the |dSIL|
/// comparison with midpoints unrelated to the node. Among candidates the pair
/// minimizing |mean_sil_i - mean_sil_j| wins; ties go to the higher pair mean
/// SIL, then to the lower indices.
///
/// Requires observations sorted by source x. Throws UnlocalizableError when no
/// candidate pair exists.
std::pair<std::size_t, std::size_t> select_equivalent_pair(
    std::span<const NodeObservation> observations, double min_baseline_m);

/// Range from an equivalent pair: each observation's TL is its declared SPL
/// minus its mean SIL; the two TLs are averaged before inversion.
double estimate_range(const NodeObservation& first, const NodeObservation& second,
                      double alpha_db_per_km, double spreading_factor,
                      const InversionSettings& settings = {});

/// Position from a pair and a range:
///   x = (x_a + x_e) / 2
///   d = sqrt(R^2 - (z - z_a)^2)
///   y = y_a +/- sqrt((2d)^2 - (x_a - x_e)^2) / 2
/// Negative radicands are clamped to zero and flagged degenerate instead of
/// producing NaN; they occur routinely under noise near the track plane. The
/// sign comes from the higher-SIL observation's side indicator. z passes the
/// sensed node depth through unchanged.
PositionEstimate estimate_position(const NodeObservation& first, const NodeObservation& second,
                                   double range_m, double node_depth_m,
                                   std::pair<std::size_t, std::size_t> pair = {0, 1});

/// Full node-side pipeline: pair selection, range inversion, position solve,
/// with alpha = thorp_absorption(channel.frequency_khz) and k from channel.
PositionEstimate localize_node(std::span<const NodeObservation> observations,
                               double node_depth_m, const ChannelParams& channel,
                               double min_baseline_m, const InversionSettings& settings = {});

}  // namespace oal
