#include "dsc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dsc/errors.hpp"
#include "dsc/units.hpp"

namespace dsc {

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

SpectralAmplitude SpectralAmplitude::gaussian(double center_radps,
                                              double fwhm_radps) {
  if (!(center_radps > 0.0))
    throw std::invalid_argument("spectrum center frequency must be > 0");
  if (!(fwhm_radps > 0.0))
    throw std::invalid_argument("gaussian fwhm_bandwidth must be > 0");
  SpectralAmplitude f;
  f.kind_ = Kind::Gaussian;
  f.center_radps_ = center_radps;
  f.fwhm_radps_ = fwhm_radps;
  return f;
}

SpectralAmplitude SpectralAmplitude::tabulated(
    double center_radps, std::vector<double> detunings_radps,
    std::vector<std::complex<double>> amplitudes) {
  if (!(center_radps > 0.0))
    throw std::invalid_argument("spectrum center frequency must be > 0");
  if (detunings_radps.size() != amplitudes.size())
    throw std::invalid_argument("tabulated spectrum: column length mismatch");
  if (detunings_radps.size() < 8)
    throw std::invalid_argument("tabulated spectrum needs at least 8 samples");
  for (std::size_t i = 1; i < detunings_radps.size(); ++i) {
    if (!(detunings_radps[i] > detunings_radps[i - 1]))
      throw std::invalid_argument(
          "tabulated spectrum detunings must be strictly increasing");
  }
  double norm = 0.0;
  for (std::size_t i = 1; i < detunings_radps.size(); ++i) {
    const double dw = detunings_radps[i] - detunings_radps[i - 1];
    norm += 0.5 * dw * (std::norm(amplitudes[i]) + std::norm(amplitudes[i - 1]));
  }
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw std::invalid_argument("tabulated spectrum is not normalizable");
  SpectralAmplitude f;
  f.kind_ = Kind::Tabulated;
  f.center_radps_ = center_radps;
  f.detunings_ = std::move(detunings_radps);
  f.amplitudes_ = std::move(amplitudes);
  return f;
}

std::complex<double> SpectralAmplitude::value(double w) const {
  if (kind_ == Kind::Gaussian) {
    const double x = w / fwhm_radps_;
    return std::exp(-2.0 * kLn2 * x * x);
  }
  if (w < detunings_.front() || w > detunings_.back())
    throw std::out_of_range("tabulated spectrum evaluated outside its range");
  const auto it = std::lower_bound(detunings_.begin(), detunings_.end(), w);
  if (it == detunings_.begin()) return amplitudes_.front();
  const std::size_t hi = static_cast<std::size_t>(it - detunings_.begin());
  const std::size_t lo = hi - 1;
  const double t = (w - detunings_[lo]) / (detunings_[hi] - detunings_[lo]);
  return amplitudes_[lo] + t * (amplitudes_[hi] - amplitudes_[lo]);
}

double SpectralAmplitude::rms_bandwidth_radps() const {
  if (kind_ == Kind::Gaussian) {
    // |f|^2 = exp(-4 ln2 w^2 / fwhm^2) -> sigma = fwhm / (2 sqrt(2 ln2))
    return fwhm_radps_ / (2.0 * std::sqrt(2.0 * kLn2));
  }
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 1; i < detunings_.size(); ++i) {
    const double dw = detunings_[i] - detunings_[i - 1];
    const double ia = std::norm(amplitudes_[i - 1]);
    const double ib = std::norm(amplitudes_[i]);
    const double wa = detunings_[i - 1];
    const double wb = detunings_[i];
    m0 += 0.5 * dw * (ia + ib);
    m1 += 0.5 * dw * (ia * wa + ib * wb);
    m2 += 0.5 * dw * (ia * wa * wa + ib * wb * wb);
  }
  const double mean = m1 / m0;
  const double var = m2 / m0 - mean * mean;
  return std::sqrt(std::max(var, 0.0));
}

double SpectralAmplitude::max_abs_detuning_radps() const {
  if (kind_ == Kind::Gaussian)
    return std::numeric_limits<double>::infinity();
  return std::min(-detunings_.front(), detunings_.back());
}

SpectralAmplitude make_gaussian(double center_wavelength_m,
                                double fwhm_wavelength_m) {
  if (!(fwhm_wavelength_m > 0.0) || !(fwhm_wavelength_m < center_wavelength_m))
    throw std::invalid_argument(
        "make_gaussian requires 0 < fwhm_wavelength < center_wavelength");
  const double w0 = units::radps_from_wavelength_m(center_wavelength_m);
  const double dw = units::two_pi * units::speed_of_light_m_per_s *
                    fwhm_wavelength_m /
                    (center_wavelength_m * center_wavelength_m) * 1.0e-12;
  return SpectralAmplitude::gaussian(w0, dw);
}

SpectralAmplitude load_tabulated_spectrum(const std::string& path,
                                          double center_radps) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spectrum file '" + path + "'");
  std::vector<double> w;
  std::vector<std::complex<double>> a;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double det, re, im = 0.0;
    if (!(ls >> det >> re)) continue;  // blank or comment-only line
    ls >> im;
    w.push_back(det);
    a.emplace_back(re, im);
  }
  return SpectralAmplitude::tabulated(center_radps, std::move(w), std::move(a));
}

double coherence_time_ps(const SpectralAmplitude& f) {
  // Envelope E(tau) = |integral f(w) f*(-w) e^{-2 i w tau} dw|; even in tau,
  // maximal at tau = 0 for the spectra in scope. FWHM found by marching out
  // from 0 and bisecting the half crossing.
  const FrequencyGrid grid = FrequencyGrid::recommended_for(f, 0.0, 4096);
  const auto& w = grid.detunings();
  std::vector<std::complex<double>> corr(w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    corr[k] = f.value(w[k]) * std::conj(f.value(-w[k]));

  const auto envelope = [&](double tau) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double ph = -2.0 * w[k] * tau;
      acc += grid.weight(k) * corr[k] * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return std::abs(acc);
  };

  const double peak = envelope(0.0);
  if (!(peak > 0.0))
    throw numerical_failure("coherence_time: vanishing correlation at tau = 0");
  const double half = 0.5 * peak;
  // March in steps tied to the spectral width until below half.
  const double step = 0.05 / f.rms_bandwidth_radps();
  double lo = 0.0, hi = step;
  while (envelope(hi) > half) {
    lo = hi;
    hi += step;
    if (hi > 1.0e7 * step)
      throw std::runtime_error("coherence_time: no half crossing found");
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (envelope(mid) > half ? lo : hi) = mid;
  }
  return 2.0 * 0.5 * (lo + hi);  // FWHM = twice the half-crossing of an even envelope
}

FrequencyGrid FrequencyGrid::make(double halfwidth_radps, std::size_t count) {
  if (count < 2) throw std::invalid_argument("grid count must be >= 2");
  if (!(halfwidth_radps > 0.0))
    throw std::invalid_argument("grid halfwidth must be > 0");
  FrequencyGrid g;
  g.halfwidth_ = halfwidth_radps;
  g.step_ = 2.0 * halfwidth_radps / static_cast<double>(count - 1);
  g.points_.resize(count);
  // Mirror construction: the negative half is the exact negation of the
  // positive half, so the {w} multiset equals {-w} bit-for-bit.
  for (std::size_t k = 0; k < count / 2; ++k) {
    const double v = halfwidth_radps - static_cast<double>(k) * g.step_;
    g.points_[count - 1 - k] = v;
    g.points_[k] = -v;
  }
  if (count % 2 == 1) g.points_[count / 2] = 0.0;
  return g;
}

FrequencyGrid FrequencyGrid::recommended_for(const SpectralAmplitude& f,
                                             double max_abs_tau1_ps,
                                             std::size_t min_count,
                                             double halfwidth_factor) {
  const double sigma = f.rms_bandwidth_radps();
  double halfwidth = halfwidth_factor * sigma;
  const double reach = f.max_abs_detuning_radps();
  if (halfwidth > reach) {
    if (reach < 5.0 * sigma)
      throw std::invalid_argument(
          "tabulated spectrum narrower than 5x its RMS bandwidth; grid "
          "coverage invariant unsatisfiable");
    halfwidth = reach;
  }
  // Alias guard: the uniform-grid trapezoid sum of e^{-2 i w tau} integrands
  // is the aliased transform with replica period pi/step; keep all replicas
  // beyond the scanned delays.
  const double alias_period_ps = 1.5 * std::abs(max_abs_tau1_ps) + 1.0;
  const double max_step = std::numbers::pi / alias_period_ps;
  std::size_t count =
      static_cast<std::size_t>(std::ceil(2.0 * halfwidth / max_step)) + 1;
  count = std::max(count, min_count);
  if (count % 2 == 0) ++count;  // include the zero-detuning point
  return make(halfwidth, count);
}

}  // namespace dsc
