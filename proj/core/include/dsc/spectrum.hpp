#ifndef DSC_SPECTRUM_HPP
#define DSC_SPECTRUM_HPP

#include <complex>
#include <string>
#include <vector>

namespace dsc {

/// Biphoton spectral amplitude f(omega) over detuning from the degenerate
/// frequency Omega0 = Omega_pump/2. Immutable after construction.
///
/// Gaussian convention: the stored width is the FWHM of the intensity
/// spectrum |f|^2, so f(omega) = exp(-2 ln2 omega^2 / fwhm^2). This is the
/// convention a spectrometer trace gives you; it is also what the config
/// schema documents.
class SpectralAmplitude {
 public:
  enum class Kind { Gaussian, Tabulated };

  /// Placeholder; assign a gaussian()/tabulated() result before use.
  SpectralAmplitude() = default;

  static SpectralAmplitude gaussian(double center_radps, double fwhm_radps);
  static SpectralAmplitude tabulated(double center_radps,
                                     std::vector<double> detunings_radps,
                                     std::vector<std::complex<double>> amplitudes);

  Kind kind() const noexcept { return kind_; }
  double center_radps() const noexcept { return center_radps_; }
  double fwhm_radps() const noexcept { return fwhm_radps_; }

  /// f at a detuning [rad/ps]. Tabulated kind: linear interpolation of the
  /// complex samples; out-of-range detunings throw std::out_of_range.
  std::complex<double> value(double detuning_radps) const;

  /// RMS width of |f|^2 viewed as a distribution over detuning.
  double rms_bandwidth_radps() const;

  /// Largest symmetric detuning |omega| at which value() is defined.
  double max_abs_detuning_radps() const;

  const std::vector<double>& table_detunings() const { return detunings_; }
  const std::vector<std::complex<double>>& table_amplitudes() const {
    return amplitudes_;
  }

 private:
  Kind kind_ = Kind::Gaussian;
  double center_radps_ = 0.0;
  double fwhm_radps_ = 0.0;           // gaussian only
  std::vector<double> detunings_;     // tabulated only, strictly increasing
  std::vector<std::complex<double>> amplitudes_;
};

/// make_gaussian(800 nm, 100 nm) style constructor; wavelengths in meters,
/// width is the intensity-spectrum FWHM in wavelength, converted first order:
/// fwhm_omega = 2 pi c dlambda / lambda^2.
SpectralAmplitude make_gaussian(double center_wavelength_m,
                                double fwhm_wavelength_m);

/// Two/three-column text file: detuning [rad/ps], Re f, [Im f]. '#' comments.
SpectralAmplitude load_tabulated_spectrum(const std::string& path,
                                          double center_radps);

/// Coherence time tau_c [ps]: FWHM in tau of |integral f(w)f*(-w)e^{-2iw tau} dw|,
/// evaluated on a default grid for the given spectrum.
double coherence_time_ps(const SpectralAmplitude& f);

/// Uniform symmetric detuning grid on [-halfwidth, +halfwidth]. The points are
/// mirror-exact: for every grid point w, -w is also a grid point bit-for-bit,
/// which is what keeps the omega <-> -omega pairing (and hence realness of the
/// coincidence rate) at machine precision.
class FrequencyGrid {
 public:
  static FrequencyGrid make(double halfwidth_radps, std::size_t count);

  /// Grid sized for a spectrum and a scan: halfwidth = halfwidth_factor x RMS
  /// bandwidth, and enough points that the trapezoid sum's alias period
  /// pi/step exceeds the largest |tau1| in play with margin. `min_count`
  /// keeps a floor for narrow scans.
  static FrequencyGrid recommended_for(const SpectralAmplitude& f,
                                       double max_abs_tau1_ps,
                                       std::size_t min_count = 8192,
                                       double halfwidth_factor = 5.0);

  const std::vector<double>& detunings() const noexcept { return points_; }
  double halfwidth_radps() const noexcept { return halfwidth_; }
  double step_radps() const noexcept { return step_; }
  std::size_t count() const noexcept { return points_.size(); }

  /// Trapezoid quadrature weight [rad/ps] for point k.
  double weight(std::size_t k) const {
    const bool edge = (k == 0 || k + 1 == points_.size());
    return edge ? 0.5 * step_ : step_;
  }

 private:
  std::vector<double> points_;
  double halfwidth_ = 0.0;
  double step_ = 0.0;
};

}  // namespace dsc

#endif
