#include "dsc/interferogram.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <thread>

#include "dsc/errors.hpp"

namespace dsc {

AnalyticEngine::AnalyticEngine(SetupConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.placement != Placement::MzArm)
    throw unsupported_configuration(
        "the analytic rate is derived for the sample inside the MZ arm; use "
        "the mode-operator oracle for other placements");
  if (!std::isfinite(cfg_.tau2_ps))
    throw std::invalid_argument("tau2 must be finite");

  const auto& grid = cfg_.grid;
  const std::size_t n = grid.count();
  if (n < 2) throw std::invalid_argument("grid is empty");
  const double w0 = cfg_.spectrum.center_radps();
  const double tau2 = cfg_.tau2_ps;

  omega_ = grid.detunings();
  weight_.resize(n);
  f2_.resize(n);
  corr_re_.resize(n);
  corr_im_.resize(n);
  phi_alpha_.resize(n);
  phi_beta_.resize(n);
  even_sum_.resize(n);
  odd_diff_.resize(n);

  for (std::size_t k = 0; k < n; ++k) {
    const double w = omega_[k];
    weight_[k] = grid.weight(k);
    const std::complex<double> fw = cfg_.spectrum.value(w);
    const std::complex<double> fmw = cfg_.spectrum.value(-w);
    f2_[k] = std::norm(fw);
    const std::complex<double> corr = fw * std::conj(fmw);
    corr_re_[k] = corr.real();
    corr_im_[k] = corr.imag();
    double es = 0.0, od = 0.0;
    if (cfg_.sample) {
      const EvenOddSplit split = even_odd_split(*cfg_.sample, w0, w);
      es = split.even_sum_rad;
      od = split.odd_diff_rad;
    }
    even_sum_[k] = es;
    odd_diff_[k] = od;
    phi_alpha_[k] = 2.0 * std::cos(2.0 * w * tau2 + od);
    phi_beta_[k] = 2.0 * std::cos(2.0 * w0 * tau2 + es);
  }

  // B: every tau1-independent term of the rate integrand.
  double b = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    b += weight_[k] * (4.0 - phi_alpha_[k] - phi_beta_[k]) * f2_[k];
  baseline_raw_ = b;

  if (cfg_.normalization == Normalization::BaselineOne) {
    if (!(std::abs(baseline_raw_) > 0.0))
      throw numerical_failure("baseline_one normalization: B vanished");
    scale_ = 1.0 / baseline_raw_;
  }
}

double AnalyticEngine::rate_at(double tau1_ps, double* imag_residual) const {
  if (!std::isfinite(tau1_ps))
    throw std::invalid_argument("tau1 must be finite");
  // Quadrature of the rate integrand in its product form:
  //   (Phi0 - Phi_alpha - Phi_beta) * (|f(w)|^2 + f(w)f*(-w) e^{-2 i w tau1})
  // with Phi0 = 4. The decomposition path sums the expanded terms instead, so
  // the B + R0 - R_even - R_odd identity is a genuine two-route check.
  double acc_re = 0.0;
  double acc_im = 0.0;
  const std::size_t n = omega_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double ph = -2.0 * omega_[k] * tau1_ps;
    const double c = std::cos(ph);
    const double s = std::sin(ph);
    const double bracket = 4.0 - phi_alpha_[k] - phi_beta_[k];
    const double re = f2_[k] + corr_re_[k] * c - corr_im_[k] * s;
    const double im = corr_re_[k] * s + corr_im_[k] * c;
    acc_re += weight_[k] * bracket * re;
    acc_im += weight_[k] * bracket * im;
  }
  if (imag_residual) *imag_residual = std::abs(acc_im);
  return acc_re * scale_;
}

Decomposition AnalyticEngine::decompose_at(double tau1_ps,
                                           double* imag_residual) const {
  if (!std::isfinite(tau1_ps))
    throw std::invalid_argument("tau1 must be finite");
  // R0     = 4 * integral corr e^{-2 i w tau1}
  // R_even =     integral corr e^{-2 i w tau1} Phi_beta
  // R_odd  =     integral corr e^{-2 i w tau1} Phi_alpha
  double r0_re = 0.0, r0_im = 0.0;
  double re_re = 0.0, re_im = 0.0;
  double ro_re = 0.0, ro_im = 0.0;
  const std::size_t n = omega_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double ph = -2.0 * omega_[k] * tau1_ps;
    const double c = std::cos(ph);
    const double s = std::sin(ph);
    const double ere = weight_[k] * (corr_re_[k] * c - corr_im_[k] * s);
    const double eim = weight_[k] * (corr_re_[k] * s + corr_im_[k] * c);
    r0_re += 4.0 * ere;
    r0_im += 4.0 * eim;
    re_re += phi_beta_[k] * ere;
    re_im += phi_beta_[k] * eim;
    ro_re += phi_alpha_[k] * ere;
    ro_im += phi_alpha_[k] * eim;
  }
  if (imag_residual)
    *imag_residual =
        std::max({std::abs(r0_im), std::abs(re_im), std::abs(ro_im)});
  return {baseline_raw_ * scale_, r0_re * scale_, re_re * scale_,
          ro_re * scale_};
}

double AnalyticEngine::even_term_envelope_at(double tau1_ps) const {
  // | integral corr e^{-2 i w tau1} e^{i even_sum} |, one chirp branch of
  // R_even; its magnitude is the pedestal envelope.
  double acc_re = 0.0, acc_im = 0.0;
  for (std::size_t k = 0; k < omega_.size(); ++k) {
    const double ph = -2.0 * omega_[k] * tau1_ps + even_sum_[k];
    const double re = corr_re_[k] * std::cos(ph) - corr_im_[k] * std::sin(ph);
    const double im = corr_re_[k] * std::sin(ph) + corr_im_[k] * std::cos(ph);
    acc_re += weight_[k] * re;
    acc_im += weight_[k] * im;
  }
  return std::hypot(acc_re, acc_im) * std::abs(scale_);
}

double AnalyticEngine::odd_term_envelope_at(double tau1_ps, int side) const {
  // side = +1: | integral corr e^{-2 i w (tau1 - tau2)} e^{+i odd_diff} |
  // side = -1: | integral corr e^{-2 i w (tau1 + tau2)} e^{-i odd_diff} |
  const double sgn = side >= 0 ? 1.0 : -1.0;
  const double shift = tau1_ps - sgn * cfg_.tau2_ps;
  double acc_re = 0.0, acc_im = 0.0;
  for (std::size_t k = 0; k < omega_.size(); ++k) {
    const double ph = -2.0 * omega_[k] * shift + sgn * odd_diff_[k];
    const double re = corr_re_[k] * std::cos(ph) - corr_im_[k] * std::sin(ph);
    const double im = corr_re_[k] * std::sin(ph) + corr_im_[k] * std::cos(ph);
    acc_re += weight_[k] * re;
    acc_im += weight_[k] * im;
  }
  return std::hypot(acc_re, acc_im) * std::abs(scale_);
}

Interferogram AnalyticEngine::scan(double tau1_min_ps, double tau1_max_ps,
                                   std::size_t steps, unsigned threads) const {
  if (steps < 2) throw std::invalid_argument("scan needs steps >= 2");
  if (!(tau1_min_ps < tau1_max_ps))
    throw std::invalid_argument("scan needs tau1_min < tau1_max");

  Interferogram ig;
  ig.config = cfg_;
  ig.baseline_raw = baseline_raw_;
  ig.baseline = baseline_raw_ * scale_;
  ig.normalization_scale = scale_;
  ig.units_label = cfg_.normalization == Normalization::BaselineOne
                       ? "baseline-normalized"
                       : "arbitrary units";
  ig.tau1_ps.resize(steps);
  ig.rc.resize(steps);
  ig.r0.resize(steps);
  ig.r_even.resize(steps);
  ig.r_odd.resize(steps);

  const double span = tau1_max_ps - tau1_min_ps;
  for (std::size_t i = 0; i < steps; ++i)
    ig.tau1_ps[i] =
        tau1_min_ps + span * static_cast<double>(i) / static_cast<double>(steps - 1);

  // Samples are independent; workers pull chunks and write by index, so the
  // result is identical for any thread count.
  unsigned nthreads = threads ? threads : std::thread::hardware_concurrency();
  nthreads = std::max(1u, std::min<unsigned>(nthreads, 64));
  if (static_cast<std::size_t>(nthreads) * 8 > steps) nthreads = 1;

  std::vector<double> residual_by_thread(nthreads, 0.0);
  const auto worker = [&](unsigned tid, std::size_t begin, std::size_t end) {
    double worst = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      double resid_parts = 0.0;
      double resid_rate = 0.0;
      const Decomposition d = decompose_at(ig.tau1_ps[i], &resid_parts);
      ig.rc[i] = rate_at(ig.tau1_ps[i], &resid_rate);
      ig.r0[i] = d.r0;
      ig.r_even[i] = d.r_even;
      ig.r_odd[i] = d.r_odd;
      worst = std::max({worst, resid_parts, resid_rate});
    }
    residual_by_thread[tid] = worst;
  };

  if (nthreads == 1) {
    worker(0, 0, steps);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (steps + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
      const std::size_t begin = std::min<std::size_t>(t * chunk, steps);
      const std::size_t end = std::min<std::size_t>(begin + chunk, steps);
      pool.emplace_back(worker, t, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  ig.max_imag_residual =
      *std::max_element(residual_by_thread.begin(), residual_by_thread.end());

  const double tau_c = coherence_time_ps(cfg_.spectrum);
  if (std::abs(cfg_.tau2_ps) < 3.0 * tau_c)
    ig.warnings.push_back(
        "tau2 is within a few coherence times of zero: side dips and central "
        "peak overlap, feature location may merge them");
  return ig;
}

FrequencyGrid recommended_grid(const SpectralAmplitude& spectrum,
                               const PhaseFunction* sample, double tau2_ps,
                               double max_abs_tau1_ps, std::size_t min_count,
                               double halfwidth_factor) {
  double reach = std::abs(max_abs_tau1_ps) + std::abs(tau2_ps);
  if (sample) {
    const FrequencyGrid probe =
        FrequencyGrid::recommended_for(spectrum, 0.0, 64, halfwidth_factor);
    const double w_max = probe.halfwidth_radps();
    const double w0 = spectrum.center_radps();
    const double delta = w_max * 1.0e-3;
    double slope = 0.0;
    for (double frac : {0.2, 0.4, 0.6, 0.8, 0.985}) {
      const double w = frac * w_max;
      const EvenOddSplit hi = even_odd_split(*sample, w0, w + delta);
      const EvenOddSplit lo = even_odd_split(*sample, w0, w - delta);
      slope = std::max(slope,
                       std::abs(hi.odd_diff_rad - lo.odd_diff_rad) / (2 * delta));
      slope = std::max(slope,
                       std::abs(hi.even_sum_rad - lo.even_sum_rad) / (2 * delta));
    }
    reach += 0.5 * slope;  // phase slope /2: effective delay of e^{+-i phi} terms
  }
  return FrequencyGrid::recommended_for(spectrum, reach, min_count,
                                        halfwidth_factor);
}

double coincidence_rate(const SetupConfig& cfg, double tau1_ps) {
  return AnalyticEngine(cfg).rate_at(tau1_ps);
}

Decomposition decompose(const SetupConfig& cfg, double tau1_ps) {
  return AnalyticEngine(cfg).decompose_at(tau1_ps);
}

Interferogram scan(const SetupConfig& cfg, double tau1_min_ps,
                   double tau1_max_ps, std::size_t steps, unsigned threads) {
  return AnalyticEngine(cfg).scan(tau1_min_ps, tau1_max_ps, steps, threads);
}

Regime classify_regime(double tau1_ps, double tau2_ps, double tau_c_ps) {
  if (!(tau_c_ps > 0.0)) throw std::invalid_argument("tau_c must be > 0");
  // Boundary ties go to the interference regimes.
  if (std::abs(tau1_ps) <= tau_c_ps) return Regime::CentralPeak;
  const double side = std::min(std::abs(tau1_ps - tau2_ps),
                               std::abs(tau1_ps + tau2_ps));
  if (side <= tau_c_ps) return Regime::HomSideDip;
  return Regime::NoInterference;
}

namespace {

// Half-extremum width of |d| around index ext, linear interpolation at the
// crossings; returns 0 if a crossing never happens inside the scan.
double half_width(const std::vector<double>& tau, const std::vector<double>& d,
                  std::size_t ext) {
  const double half = std::abs(d[ext]) / 2.0;
  double left = tau.front(), right = tau.back();
  bool found_left = false, found_right = false;
  for (std::size_t i = ext; i-- > 0;) {
    if (std::abs(d[i]) <= half) {
      const double t =
          (std::abs(d[i + 1]) - half) / (std::abs(d[i + 1]) - std::abs(d[i]));
      left = tau[i + 1] + t * (tau[i] - tau[i + 1]);
      found_left = true;
      break;
    }
  }
  for (std::size_t i = ext + 1; i < d.size(); ++i) {
    if (std::abs(d[i]) <= half) {
      const double t =
          (std::abs(d[i - 1]) - half) / (std::abs(d[i - 1]) - std::abs(d[i]));
      right = tau[i - 1] + t * (tau[i] - tau[i - 1]);
      found_right = true;
      break;
    }
  }
  if (!found_left || !found_right) return 0.0;
  return right - left;
}

double parabolic_center(const std::vector<double>& tau,
                        const std::vector<double>& d, std::size_t ext) {
  if (ext == 0 || ext + 1 == d.size()) return tau[ext];
  const double y0 = d[ext - 1], y1 = d[ext], y2 = d[ext + 1];
  const double denom = y0 - 2.0 * y1 + y2;
  if (denom == 0.0) return tau[ext];
  const double offset = 0.5 * (y0 - y2) / denom;
  const double step = tau[ext + 1] - tau[ext];
  if (std::abs(offset) > 1.0) return tau[ext];
  return tau[ext] + offset * step;
}

}  // namespace

std::vector<Feature> locate_features(const Interferogram& ig, double tau_c_ps) {
  std::vector<Feature> out;
  const std::size_t n = ig.size();
  if (n < 3) return out;

  const double baseline = ig.baseline;
  std::vector<double> d(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = ig.rc[i] - baseline;
    scale = std::max(scale, std::abs(d[i]));
  }
  if (!(scale > 1.0e-12 * std::max(1.0, std::abs(baseline)))) return out;

  // Candidate extrema, then clusters: one feature per fringe packet. The gap
  // has to swallow dispersion fringes (sub-ps) without merging the central
  // feature into a side dip ps away.
  const double thr = 0.05 * scale;
  std::vector<std::size_t> cand;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const bool peak = d[i] >= d[i - 1] && d[i] >= d[i + 1];
    const bool dip = d[i] <= d[i - 1] && d[i] <= d[i + 1];
    if ((peak || dip) && std::abs(d[i]) >= thr) cand.push_back(i);
  }
  if (cand.empty()) return out;

  const double step = ig.tau1_ps[1] - ig.tau1_ps[0];
  const double gap = std::max({1.0, 8.0 * tau_c_ps, 3.0 * step});

  std::vector<std::pair<std::size_t, std::size_t>> clusters;  // [first, last]
  std::size_t first = cand.front(), last = cand.front();
  for (std::size_t idx : cand) {
    if (ig.tau1_ps[idx] - ig.tau1_ps[last] > gap) {
      clusters.emplace_back(first, last);
      first = idx;
    }
    last = idx;
  }
  clusters.emplace_back(first, last);

  const double central_window = std::max(20.0 * tau_c_ps, 5.0 * step);
  for (const auto& [lo, hi] : clusters) {
    std::size_t ext = lo;
    for (std::size_t i = lo; i <= hi; ++i)
      if (std::abs(d[i]) > std::abs(d[ext])) ext = i;
    Feature fe;
    fe.center_ps = parabolic_center(ig.tau1_ps, d, ext);
    fe.width_ps = half_width(ig.tau1_ps, d, ext);
    fe.depth_or_height = d[ext];
    fe.type = std::abs(fe.center_ps) <= central_window ? Regime::CentralPeak
                                                       : Regime::HomSideDip;
    out.push_back(fe);
  }
  return out;
}

}  // namespace dsc
