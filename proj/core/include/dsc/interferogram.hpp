#ifndef DSC_INTERFEROGRAM_HPP
#define DSC_INTERFEROGRAM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dsc/dispersion.hpp"
#include "dsc/spectrum.hpp"

namespace dsc {

enum class Placement { HomArm, Between, MzArm };
enum class Normalization { Raw, BaselineOne };

/// Interference regime of a delay pair, classified against the photon
/// wavepacket width tau_c. Doubles as the feature type in locate_features.
enum class Regime { NoInterference, HomSideDip, CentralPeak };

struct SetupConfig {
  SpectralAmplitude spectrum;
  SamplePtr sample;          // nullptr = no dispersive element (phi == 0)
  double tau2_ps = 0.0;
  Placement placement = Placement::MzArm;
  FrequencyGrid grid;
  Normalization normalization = Normalization::BaselineOne;
};

struct Decomposition {
  double b;
  double r0;
  double r_even;
  double r_odd;
  double rc() const { return b + r0 - r_even - r_odd; }
};

struct Interferogram {
  std::vector<double> tau1_ps;
  std::vector<double> rc;
  std::vector<double> r0;
  std::vector<double> r_even;
  std::vector<double> r_odd;
  double baseline = 0.0;            // B in the reported units (1 when normalized)
  double baseline_raw = 0.0;        // B before normalization
  double max_imag_residual = 0.0;   // worst |Im| of the rate quadrature, raw units
  double normalization_scale = 1.0; // applied to every reported component
  std::string units_label;          // "baseline-normalized" or "arbitrary units"
  std::vector<std::string> warnings;
  SetupConfig config;

  std::size_t size() const { return tau1_ps.size(); }
};

struct Feature {
  Regime type;             // CentralPeak or HomSideDip
  double center_ps;
  double width_ps;         // FWHM of |Rc - baseline| around the extremum
  double depth_or_height;  // signed extremum of Rc - baseline
};

/// Quadrature engine for the analytic coincidence rate and its
/// B/R0/R_even/R_odd decomposition, sample placed in the MZ arm. Precomputes
/// every tau1-independent array once per configuration; rate_at/decompose_at
/// are pure and safe to call concurrently.
class AnalyticEngine {
 public:
  explicit AnalyticEngine(SetupConfig cfg);

  /// Coincidence rate at tau1; imag_residual (raw units) is the quadrature's
  /// leftover imaginary part, recorded for the realness audit.
  double rate_at(double tau1_ps, double* imag_residual = nullptr) const;

  Decomposition decompose_at(double tau1_ps, double* imag_residual = nullptr) const;

  /// Magnitude of one chirped half of R_even: the envelope of the central
  /// pedestal, free of the 2*Omega0*tau2 carrier constant.
  double even_term_envelope_at(double tau1_ps) const;

  /// Magnitude of one R_odd term; side = +1 tracks the dip near +(tau2+c1),
  /// side = -1 the mirror dip.
  double odd_term_envelope_at(double tau1_ps, int side) const;

  double baseline_raw() const noexcept { return baseline_raw_; }
  double normalization_scale() const noexcept { return scale_; }
  const SetupConfig& config() const noexcept { return cfg_; }

  Interferogram scan(double tau1_min_ps, double tau1_max_ps, std::size_t steps,
                     unsigned threads = 0) const;

 private:
  SetupConfig cfg_;
  std::vector<double> omega_;     // grid detunings
  std::vector<double> weight_;    // trapezoid weights
  std::vector<double> f2_;        // |f(w)|^2
  std::vector<double> corr_re_;   // f(w) f*(-w)
  std::vector<double> corr_im_;
  std::vector<double> phi_alpha_; // 2 cos(2 w tau2 + odd_diff)
  std::vector<double> phi_beta_;  // 2 cos(2 W0 tau2 + even_sum)
  std::vector<double> even_sum_;
  std::vector<double> odd_diff_;
  double baseline_raw_ = 0.0;
  double scale_ = 1.0;
};

/// Grid sized for a full setup: on top of the spectrum/delay alias guard it
/// folds in the sample's phase slopes (group delay and chirp reach across the
/// band), which stretch the integrand's effective delays. Without this, a
/// strongly chirped sample aliases at any fixed N.
FrequencyGrid recommended_grid(const SpectralAmplitude& spectrum,
                               const PhaseFunction* sample, double tau2_ps,
                               double max_abs_tau1_ps,
                               std::size_t min_count = 8192,
                               double halfwidth_factor = 5.0);

/// Spec-level operations; each builds a one-shot engine.
double coincidence_rate(const SetupConfig& cfg, double tau1_ps);
Decomposition decompose(const SetupConfig& cfg, double tau1_ps);
Interferogram scan(const SetupConfig& cfg, double tau1_min_ps,
                   double tau1_max_ps, std::size_t steps, unsigned threads = 0);

Regime classify_regime(double tau1_ps, double tau2_ps, double tau_c_ps);

/// Extrema of the interferogram classified by location: the central feature
/// (|tau1| within the dispersion-broadened window) and side features near
/// +-(tau2 + c1). Absent features yield an empty list, not an error.
std::vector<Feature> locate_features(const Interferogram& ig, double tau_c_ps);

}  // namespace dsc

#endif
