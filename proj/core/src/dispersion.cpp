#include "dsc/dispersion.hpp"

#include <cmath>
#include <stdexcept>

#include "dsc/errors.hpp"
#include "dsc/units.hpp"

namespace dsc {

TaylorPhase::TaylorPhase(double reference_radps, std::vector<double> coefficients)
    : reference_(reference_radps), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty())
    throw std::invalid_argument("TaylorPhase needs at least one coefficient");
  for (double c : coeffs_)
    if (!std::isfinite(c))
      throw std::invalid_argument("TaylorPhase coefficients must be finite");
}

double TaylorPhase::phase(double omega_abs_radps) const {
  const double x = omega_abs_radps - reference_;
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

SlabPhase::SlabPhase(Material material, double thickness_mm)
    : material_(std::move(material)), thickness_mm_(thickness_mm) {
  if (!(thickness_mm_ >= 0.0))
    throw std::invalid_argument("slab thickness must be >= 0");
}

double SlabPhase::phase(double omega_abs_radps) const {
  if (thickness_mm_ == 0.0) return 0.0;
  const double lambda_um = units::wavelength_um_from_radps(omega_abs_radps);
  const double n = material_.refractive_index(lambda_um);
  return n * omega_abs_radps * thickness_mm_ / units::speed_of_light_mm_per_ps;
}

EvenOddSplit even_odd_split(const PhaseFunction& pf, double reference_radps,
                            double detuning_radps) {
  const double hi = pf.phase(reference_radps + detuning_radps);
  const double lo = pf.phase(reference_radps - detuning_radps);
  return {hi + lo, hi - lo};
}

namespace {

// Central-difference estimate of phi^(k) at w0 with step h, O(h^2) stencils.
double central_derivative(const PhaseFunction& pf, double w0, int k, double h) {
  const auto f = [&](double s) { return pf.phase(w0 + s * h); };
  switch (k) {
    case 0:
      return f(0);
    case 1:
      return (f(1) - f(-1)) / (2 * h);
    case 2:
      return (f(1) - 2 * f(0) + f(-1)) / (h * h);
    case 3:
      return (f(2) - 2 * f(1) + 2 * f(-1) - f(-2)) / (2 * h * h * h);
    case 4:
      return (f(2) - 4 * f(1) + 6 * f(0) - 4 * f(-1) + f(-2)) / (h * h * h * h);
    case 5:
      return (f(3) - 4 * f(2) + 5 * f(1) - 5 * f(-1) + 4 * f(-2) - f(-3)) /
             (2 * h * h * h * h * h);
    default:
      throw std::invalid_argument("fit_taylor order must be in [0, 5]");
  }
}

// Two-level Richardson extrapolation of an O(h^2) estimate.
double richardson(const PhaseFunction& pf, double w0, int k, double h) {
  const double d1 = central_derivative(pf, w0, k, h);
  const double d2 = central_derivative(pf, w0, k, 0.5 * h);
  const double d4 = central_derivative(pf, w0, k, 0.25 * h);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

}  // namespace

TaylorFit fit_taylor(const PhaseFunction& pf, double reference_radps, int order,
                     double residual_window_radps) {
  if (order < 0 || order > 5)
    throw std::invalid_argument("fit_taylor order must be in [0, 5]");
  if (!(residual_window_radps > 0.0))
    throw std::invalid_argument("fit_taylor residual window must be > 0");

  const double h = 1.0e-4 * reference_radps;
  std::vector<double> coeffs(static_cast<std::size_t>(order) + 1);
  double factorial = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 1) factorial *= k;
    const double dk = richardson(pf, reference_radps, k, h);
    if (!std::isfinite(dk))
      throw numerical_failure("fit_taylor: non-finite derivative estimate at order " +
                              std::to_string(k));
    coeffs[static_cast<std::size_t>(k)] = dk / factorial;
  }

  TaylorPhase taylor(reference_radps, coeffs);
  double max_residual = 0.0;
  const int samples = 201;
  for (int i = 0; i < samples; ++i) {
    const double w = reference_radps +
                     residual_window_radps * (2.0 * i / (samples - 1) - 1.0);
    const double r = std::abs(pf.phase(w) - taylor.phase(w));
    max_residual = std::max(max_residual, r);
  }
  return {std::move(taylor), max_residual, residual_window_radps};
}

}  // namespace dsc
