#ifndef DSC_DISPERSION_HPP
#define DSC_DISPERSION_HPP

#include <memory>
#include <utility>
#include <vector>

#include "dsc/materials.hpp"

namespace dsc {

/// Spectral phase phi(omega_abs) of a dispersive element. Deterministic and
/// finite on its declared domain; implementations are immutable.
class PhaseFunction {
 public:
  virtual ~PhaseFunction() = default;
  virtual double phase(double omega_abs_radps) const = 0;
};

using SamplePtr = std::shared_ptr<const PhaseFunction>;

/// phi(w) = sum_k c_k (w - Omega0)^k. Coefficients are the expansion
/// coefficients themselves (c_k = phi^(k)(Omega0)/k!): c0 [rad], c1 [ps],
/// c2 [ps^2], ...
class TaylorPhase : public PhaseFunction {
 public:
  TaylorPhase(double reference_radps, std::vector<double> coefficients);

  double phase(double omega_abs_radps) const override;

  double reference_radps() const noexcept { return reference_; }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }

 private:
  double reference_;
  std::vector<double> coeffs_;
};

/// Slab of a Sellmeier material: phi(w) = n(w) * w * L / c. Lossless,
/// phase-only. Evaluation outside the Sellmeier validity range throws
/// std::out_of_range naming the material and its bounds.
class SlabPhase : public PhaseFunction {
 public:
  SlabPhase(Material material, double thickness_mm);

  double phase(double omega_abs_radps) const override;

  const Material& material() const noexcept { return material_; }
  double thickness_mm() const noexcept { return thickness_mm_; }

 private:
  Material material_;
  double thickness_mm_;
};

/// even_sum = phi(W0+w) + phi(W0-w)  (even Taylor orders only, plus 2 c0);
/// odd_diff = phi(W0+w) - phi(W0-w)  (odd orders only). These are the two
/// combinations the coincidence rate depends on.
struct EvenOddSplit {
  double even_sum_rad;
  double odd_diff_rad;
};
EvenOddSplit even_odd_split(const PhaseFunction& pf, double reference_radps,
                            double detuning_radps);

struct TaylorFit {
  TaylorPhase taylor;
  double max_residual_rad;   // max |phi - taylor| over the fit window
  double window_radps;
};

/// Estimate c_k = phi^(k)(Omega0)/k! for k = 0..order by central finite
/// differences with two-level Richardson extrapolation, step h = 1e-4 Omega0.
/// The residual is reported over +-residual_window_radps (pass ~3x the RMS
/// bandwidth of the spectrum in play).
TaylorFit fit_taylor(const PhaseFunction& pf, double reference_radps, int order,
                     double residual_window_radps);

}  // namespace dsc

#endif
