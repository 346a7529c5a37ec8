#pragma once

namespace oal {

/// Controls for the Halley iteration behind lambert_w0.
struct InversionSettings {
  double tolerance = 1.0e-12;  ///< convergence criterion on |dw/w|
  int max_iterations = 50;

  /// Throws DomainError unless tolerance is in (0, 1e-6] and max_iterations >= 10.
  void validate() const;
};

/// Principal-branch Lambert W on x >= 0: returns w >= 0 with w*e^w = x.
/// Halley iteration from w0 = x (x < e) or w0 = ln x - ln ln x (x >= e).
double lambert_w0(double x, const InversionSettings& settings = {});

/// Inverts transmission_loss for the range in meters. For alpha > 0,
///   R = (10^4 k / (alpha ln 10)) * W((alpha ln 10 / (10^4 k)) * 10^(TL/(10 k)));
/// for alpha = 0 the closed form R = 10^(TL/(10 k)).
double invert_tl(double tl_db, double alpha_db_per_km, double spreading_factor,
                 const InversionSettings& settings = {});

}  // namespace oal
