#pragma once

#include "oal/rng.hpp"

namespace oal {

/// SNR values at or above this are treated as a noiseless channel.
inline constexpr double kNoiselessSnrDb = 300.0;

/// Acoustic channel and receiver parameters.
struct ChannelParams {
  double frequency_khz = 20.0;           ///< acoustic frequency f, kHz
  double spreading_factor = 2.0;         ///< k; 2 = spherical spreading
  double source_level_db = 210.0;        ///< SPL, dB re 1 uPa at 1 m
  double detection_threshold_db = 80.0;  ///< minimum usable received level, dB re 1 uPa

  /// Throws DomainError unless f > 0, k > 0, and SPL exceeds the threshold.
  void validate() const;
};

/// One received message block. When detected is false the level carries no
/// information and must not enter any estimate.
struct ReceivedLevel {
  double sil_db = 0.0;
  bool detected = false;
};

/// Thorp seawater absorption coefficient in dB/km for a frequency in kHz.
double thorp_absorption(double frequency_khz);

/// Path loss in dB: spreading term 10*k*log10(R) plus absorption alpha*R/1000.
/// Strictly increasing in R on (0, inf).
double transmission_loss(double range_m, double alpha_db_per_km, double spreading_factor);

/// Received level: SIL = SPL - TL.
double received_sil(double spl_db, double tl_db);

/// Perturbs one block with amplitude-domain AWGN at the given SNR and runs the
/// detector. The noise standard deviation is sigma = p * 10^(-snr/20) for true
/// amplitude p; a nonpositive noisy amplitude loses the block outright.
/// snr_db >= kNoiselessSnrDb (including +inf) bypasses the noise draw.
ReceivedLevel apply_awgn(double sil_db, double snr_db, double detection_threshold_db, Rng& rng);

}  // namespace oal
