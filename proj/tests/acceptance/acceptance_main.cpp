// Acceptance suite: one criterion per function, each printing [PASS]/[FAIL]
// with the measured numbers. Run with no arguments for all criteria or with a
// single criterion number. Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "dsc/dispersion.hpp"
#include "dsc/interferogram.hpp"
#include "dsc/materials.hpp"
#include "dsc/oracle.hpp"
#include "dsc/spectrum.hpp"

using namespace dsc;

namespace {

struct Criterion {
  int failures = 0;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      std::printf("    FAILED: %s\n", what.c_str());
    }
  }
};

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

SamplePtr znse_slab() {
  static MaterialsDb db =
      MaterialsDb::load(std::string(DSC_SOURCE_DIR) + "/data/materials.json");
  return std::make_shared<SlabPhase>(db.find("znse"), 3.0);
}

SetupConfig fig2_config(SamplePtr sample, double tau_reach) {
  SetupConfig cfg;
  cfg.spectrum = make_gaussian(800e-9, 100e-9);  // 100 nm intensity FWHM
  cfg.sample = std::move(sample);
  cfg.tau2_ps = 26.0;
  cfg.placement = Placement::MzArm;
  cfg.normalization = Normalization::BaselineOne;
  cfg.grid = recommended_grid(cfg.spectrum, cfg.sample.get(), cfg.tau2_ps,
                              tau_reach);
  return cfg;
}

double curve_fwhm(const std::vector<double>& t, const std::vector<double>& v) {
  double best = 0.0;
  std::size_t ib = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > best) best = v[i], ib = i;
  std::size_t l = ib, r = ib;
  while (l > 0 && v[l] > best / 2) --l;
  while (r + 1 < v.size() && v[r] > best / 2) ++r;
  const auto cross = [&](std::size_t a, std::size_t b) {
    const double f = (best / 2 - v[a]) / (v[b] - v[a]);
    return t[a] + f * (t[b] - t[a]);
  };
  return cross(r - 1 >= ib ? r - 1 : ib, r) - cross(l + 1 <= ib ? l + 1 : ib, l);
}

// ---------------------------------------------------------------------------
// 1. Analytic vs first-principles oracle over 20 random configurations.
bool criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  std::mt19937 rng(20260811);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double lambda0_nm = 700.0 + 200.0 * u01(rng);
    const double dlambda_nm = 20.0 + 100.0 * u01(rng);
    const double tau2 = 5.0 + 35.0 * u01(rng);
    const double c1 = -10.0 + 20.0 * u01(rng);
    const double c2 = -1.0 + 2.0 * u01(rng);
    const double c3 = -0.1 + 0.2 * u01(rng);

    SetupConfig cfg;
    cfg.spectrum = make_gaussian(lambda0_nm * 1e-9, dlambda_nm * 1e-9);
    cfg.sample = std::make_shared<TaylorPhase>(
        cfg.spectrum.center_radps(), std::vector<double>{0.4, c1, c2, c3});
    cfg.tau2_ps = tau2;

    const double tau_c = 4.0 * std::numbers::ln2 / cfg.spectrum.fwhm_radps();
    const double ad = std::max(std::abs(tau2 + c1), 6.0 * tau_c);
    std::vector<double> pts{0.0};
    for (double s : {1.0, -1.0}) {
      pts.push_back(s * 0.3 * tau_c);          // central peak regime
      pts.push_back(s * tau2);                 // HOM side-dip regime
      pts.push_back(s * 0.5 * tau2);           // no-interference regime
      pts.push_back(s * ad);
      pts.push_back(s * (ad - 2.0 * tau_c));
      pts.push_back(s * (ad + 2.0 * tau_c));
      pts.push_back(s * 0.25 * ad);
      pts.push_back(s * 0.75 * ad);
      pts.push_back(s * 0.9 * ad);
      pts.push_back(s * (1.15 * ad + 5.0 * tau_c));
    }

    double reach = 0.0;
    for (double p : pts) reach = std::max(reach, std::abs(p));
    cfg.grid = FrequencyGrid::recommended_for(cfg.spectrum, reach);

    const AnalyticEngine eng(cfg);
    const TwoPhotonState state{cfg.spectrum};
    const double baseline = oracle_baseline(
        build_paper_network(0.0, tau2, Placement::MzArm, cfg.sample), state,
        cfg.grid);

    double scale = 0.0;
    std::vector<double> analytic(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      analytic[i] = eng.rate_at(pts[i]);
      scale = std::max(scale, std::abs(analytic[i]));
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const ModeNetwork net =
          build_paper_network(pts[i], tau2, Placement::MzArm, cfg.sample);
      const double oracle = coincidence_oracle(net, state, cfg.grid) / baseline;
      worst = std::max(worst, std::abs(analytic[i] - oracle) / scale);
    }
  }
  const double dt = elapsed_s(t0);
  c.require(worst <= 1e-6, "max relative deviation " + std::to_string(worst));
  c.require(dt < 60.0, "runtime " + std::to_string(dt) + " s exceeds 60 s");
  std::printf("    20 configs x 21 points: max rel deviation %.3g, %.1f s\n",
              worst, dt);
  return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 2. Realness for asymmetric tabulated spectra.
bool criterion2() {
  Criterion c;
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int j = 0; j < 5; ++j) {
    const double s = 60.0 + 60.0 * u01(rng);
    const double skew = 0.25 + 0.5 * u01(rng);
    const double chirp1 = 0.004 * (u01(rng) - 0.5);
    const double chirp2 = 2e-5 * (u01(rng) - 0.5);
    std::vector<double> det;
    std::vector<std::complex<double>> amp;
    for (int i = 0; i <= 1200; ++i) {
      const double w = -6.2 * s + 12.4 * s * i / 1200.0;
      const double mag =
          std::exp(-w * w / (2.0 * s * s)) * (1.0 + skew * std::tanh(w / s));
      det.push_back(w);
      amp.push_back(std::polar(mag, chirp1 * w + chirp2 * w * w));
    }
    SetupConfig cfg;
    cfg.spectrum = SpectralAmplitude::tabulated(2354.564459, det, amp);
    cfg.sample = std::make_shared<TaylorPhase>(
        2354.564459, std::vector<double>{0.5, 2.0, 0.01, 2e-4});
    cfg.tau2_ps = 6.0;
    cfg.grid = FrequencyGrid::recommended_for(cfg.spectrum, 13.0);

    const Interferogram ig = AnalyticEngine(cfg).scan(-13.0, 13.0, 81);
    const double max_rc_raw = max_abs(ig.rc) * ig.baseline_raw;
    c.require(ig.max_imag_residual <= 1e-9 * max_rc_raw,
              "imag residual " + std::to_string(ig.max_imag_residual));
    std::printf("    spectrum %d: |Im|/max|Rc| = %.3g\n", j + 1,
                ig.max_imag_residual / max_rc_raw);
  }
  return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 3. Odd-order and even-order cancellation in R_even / R_odd.
bool criterion3() {
  Criterion c;
  const SpectralAmplitude f = make_gaussian(800e-9, 100e-9);
  const auto sample = [&](std::vector<double> coeffs) {
    return std::make_shared<TaylorPhase>(f.center_radps(), std::move(coeffs));
  };
  SetupConfig cfg;
  cfg.spectrum = f;
  cfg.tau2_ps = 18.0;
  // raw units: under baseline_one the normalizer B itself depends on the
  // even-order coefficients and would mask the comparison
  cfg.normalization = Normalization::Raw;
  cfg.grid = FrequencyGrid::recommended_for(f, 28.0);

  SetupConfig full = cfg, evens = cfg, odds = cfg;
  full.sample = sample({0.8, 5.0, 0.35, 0.03});
  evens.sample = sample({0.8, 0.0, 0.35, 0.0});
  odds.sample = sample({0.0, 5.0, 0.0, 0.03});

  const Interferogram ig_full = scan(full, -28.0, 28.0, 141);
  const Interferogram ig_evens = scan(evens, -28.0, 28.0, 141);
  const Interferogram ig_odds = scan(odds, -28.0, 28.0, 141);

  double worst_even = 0.0, worst_odd = 0.0;
  const double se = max_abs(ig_full.r_even), so = max_abs(ig_full.r_odd);
  for (std::size_t i = 0; i < ig_full.size(); ++i) {
    worst_even = std::max(
        worst_even, std::abs(ig_full.r_even[i] - ig_evens.r_even[i]) / se);
    worst_odd = std::max(
        worst_odd, std::abs(ig_full.r_odd[i] - ig_odds.r_odd[i]) / so);
  }
  c.require(worst_even <= 1e-9,
            "R_even changed by " + std::to_string(worst_even));
  c.require(worst_odd <= 1e-9, "R_odd changed by " + std::to_string(worst_odd));
  std::printf("    zeroing c1,c3: R_even rel change %.3g; zeroing c0,c2: "
              "R_odd rel change %.3g\n",
              worst_even, worst_odd);
  return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 4. Decomposition identity Rc = B + R0 - R_even - R_odd.
bool criterion4() {
  Criterion c;
  const SpectralAmplitude f = make_gaussian(800e-9, 100e-9);
  double worst = 0.0;
  for (int variant = 0; variant < 2; ++variant) {
    SetupConfig cfg;
    cfg.spectrum = f;
    cfg.tau2_ps = variant == 0 ? 18.0 : 26.0;
    cfg.sample = variant == 0
                     ? std::make_shared<TaylorPhase>(
                           f.center_radps(),
                           std::vector<double>{0.8, 5.0, 0.35, 0.03})
                     : znse_slab();
    const double reach = variant == 0 ? 28.0 : 56.0;
    cfg.grid = FrequencyGrid::recommended_for(f, reach);
    const Interferogram ig = scan(cfg, -reach, reach, 101);
    const double scale = max_abs(ig.rc);
    for (std::size_t i = 0; i < ig.size(); ++i) {
      const double sum = ig.baseline + ig.r0[i] - ig.r_even[i] - ig.r_odd[i];
      worst = std::max(worst, std::abs(ig.rc[i] - sum) / scale);
    }
  }
  c.require(worst <= 1e-10, "identity residual " + std::to_string(worst));
  std::printf("    max |Rc - (B + R0 - Reven - Rodd)| / max|Rc| = %.3g\n",
              worst);
  return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 5. The Fig. 2 scenario: ZnSe 3 mm, tau2 = 26 ps, 100 nm intensity FWHM.
bool criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  const SetupConfig with_sample = fig2_config(znse_slab(), 58.0);
  SetupConfig no_sample = with_sample;
  no_sample.sample = nullptr;

  const AnalyticEngine eng(with_sample);
  const AnalyticEngine eng0(no_sample);

  const double sigma = with_sample.spectrum.rms_bandwidth_radps();
  const TaylorFit fit =
      fit_taylor(*with_sample.sample, with_sample.spectrum.center_radps(), 3,
                 3.0 * sigma);
  const double c1 = fit.taylor.coefficients()[1];
  const double dip_target = 26.0 + c1;
  std::printf("    fitted group delay c1 = %.6f ps -> dips expected at "
              "+-%.6f ps\n",
              c1, dip_target);

  // (a) the R0 peak ignores the sample: position and width unchanged.
  // Compare in raw units: the sample shifts the normalizer B, not R0.
  {
    const int n = 301;
    std::vector<double> t(n), ra(n), rb(n);
    for (int i = 0; i < n; ++i) {
      t[i] = -0.03 + 0.06 * i / (n - 1.0);
      ra[i] = eng.decompose_at(t[i]).r0 * eng.baseline_raw();
      rb[i] = eng0.decompose_at(t[i]).r0 * eng0.baseline_raw();
    }
    double worst = 0.0;
    const double scale = max_abs(ra);
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(ra[i] - rb[i]) / scale);
    const double wa = curve_fwhm(t, ra), wb = curve_fwhm(t, rb);
    c.require(worst <= 1e-12, "R0 depends on the sample: " + std::to_string(worst));
    c.require(std::abs(wa - wb) <= 0.01 * wb,
              "R0 FWHM changed: " + std::to_string(wa) + " vs " +
                  std::to_string(wb));
    std::printf("    (a) R0 rel change %.3g, FWHM %.4f fs vs %.4f fs\n", worst,
                wa * 1e3, wb * 1e3);
  }

  // (b) the pedestal (R_even envelope) is broadened by even-order dispersion
  {
    const int n = 1201;
    std::vector<double> t(n), env(n);
    for (int i = 0; i < n; ++i) {
      t[i] = -3.0 + 6.0 * i / (n - 1.0);
      env[i] = eng.even_term_envelope_at(t[i]);
    }
    const double w_znse = curve_fwhm(t, env);
    const int m = 501;
    std::vector<double> t0v(m), env0(m);
    for (int i = 0; i < m; ++i) {
      t0v[i] = -0.05 + 0.10 * i / (m - 1.0);
      env0[i] = eng0.even_term_envelope_at(t0v[i]);
    }
    const double w_plain = curve_fwhm(t0v, env0);
    c.require(w_znse > w_plain,
              "pedestal not broadened: " + std::to_string(w_znse) + " vs " +
                  std::to_string(w_plain));
    std::printf("    (b) pedestal FWHM %.4f ps vs dispersionless %.4f ps "
                "(x%.0f)\n",
                w_znse, w_plain, w_znse / w_plain);
  }

  // (c) side dips at +-(tau2 + c1) within two scan steps
  const Interferogram ig = eng.scan(-58.0, 58.0, 11601);  // 10 fs steps
  const double step = ig.tau1_ps[1] - ig.tau1_ps[0];
  double dip_plus = 0.0, dip_minus = 0.0;
  {
    const double tau_c = coherence_time_ps(with_sample.spectrum);
    const auto feats = locate_features(ig, tau_c);
    int central = 0, side = 0;
    for (const auto& fe : feats)
      fe.type == Regime::CentralPeak ? ++central : ++side;
    c.require(central == 1 && side == 2,
              "expected 1 central + 2 side features, got " +
                  std::to_string(central) + "+" + std::to_string(side));
    for (const auto& fe : feats) {
      if (fe.type != Regime::HomSideDip) continue;
      (fe.center_ps > 0 ? dip_plus : dip_minus) = fe.center_ps;
      const double err = std::abs(std::abs(fe.center_ps) - dip_target);
      c.require(err <= 2.0 * step,
                "dip at " + std::to_string(fe.center_ps) + " vs target " +
                    std::to_string(dip_target));
      std::printf("    (c) side dip at %+.4f ps (|err| = %.1f fs, tol %.0f fs), "
                  "depth %.4f\n",
                  fe.center_ps, err * 1e3, 2e3 * step, -fe.depth_or_height);
    }
  }

  // (d) fringes near the dips are asymmetric; dispersionless they are not
  {
    const auto asym = [&](const AnalyticEngine& e, double center) {
      double num = 0.0, den = 0.0;
      for (double d = step; d <= 0.35; d += step) {
        const double p = e.rate_at(center + d);
        const double m = e.rate_at(center - d);
        num += std::abs(p - m);
        den += std::abs(p - 1.0) + std::abs(m - 1.0);
      }
      return num / den;
    };
    const double a_znse = asym(eng, dip_plus);
    // dispersionless reference: smooth dip at +tau2
    double min_v = 1e300, min_t = 0.0;
    for (double t = 25.0; t <= 27.0; t += step) {
      const double v = eng0.rate_at(t);
      if (v < min_v) min_v = v, min_t = t;
    }
    const double a_plain = asym(eng0, min_t);
    c.require(a_znse > 10.0 * a_plain + 0.05,
              "asymmetry " + std::to_string(a_znse) + " vs dispersionless " +
                  std::to_string(a_plain));
    std::printf("    (d) fringe asymmetry %.4f vs dispersionless %.2g\n",
                a_znse, a_plain);
  }

  const double dt = elapsed_s(t0);
  c.require(dt < 120.0, "runtime " + std::to_string(dt) + " s exceeds 120 s");
  std::printf("    runtime %.1f s\n", dt);
  return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 6. 25% side-dip visibility with phi = 0 and tau2 >> tau_c.
bool criterion6() {
  Criterion c;
  SetupConfig cfg = fig2_config(nullptr, 40.0);
  // The plateau carries a -2 cos(2 W0 tau2) background term from the
  // monochromatic pump; the quoted 25% presumes it at its mean, so pin tau2
  // to the quadrature point nearest 26 ps (a sub-cycle, ~0.3 fs shift).
  const double w0 = cfg.spectrum.center_radps();
  const double m =
      std::round((2.0 * w0 * 26.0 - std::numbers::pi / 2) / std::numbers::pi);
  cfg.tau2_ps = (std::numbers::pi / 2 + m * std::numbers::pi) / (2.0 * w0);
  std::printf("    tau2 = %.9f ps (quadrature point nearest 26 ps)\n",
              cfg.tau2_ps);

  const AnalyticEngine eng(cfg);
  const double plateau = eng.rate_at(0.57 * cfg.tau2_ps);
  double dip = 1e300;
  for (double t = cfg.tau2_ps - 0.05; t <= cfg.tau2_ps + 0.05; t += 0.001)
    dip = std::min(dip, eng.rate_at(t));
  const double depth = plateau - dip;
  c.require(std::abs(depth - 0.25) <= 0.01,
            "analytic depth " + std::to_string(depth));

  const TwoPhotonState state{cfg.spectrum};
  const double baseline = oracle_baseline(
      build_paper_network(0.0, cfg.tau2_ps, Placement::MzArm, nullptr), state,
      cfg.grid);
  const double o_dip =
      coincidence_oracle(build_paper_network(cfg.tau2_ps, cfg.tau2_ps,
                                             Placement::MzArm, nullptr),
                         state, cfg.grid) /
      baseline;
  const double o_plateau =
      coincidence_oracle(build_paper_network(0.57 * cfg.tau2_ps, cfg.tau2_ps,
                                             Placement::MzArm, nullptr),
                         state, cfg.grid) /
      baseline;
  const double o_depth = o_plateau - o_dip;
  c.require(std::abs(o_depth - 0.25) <= 0.01,
            "oracle depth " + std::to_string(o_depth));
  std::printf("    depth: analytic %.6f, oracle %.6f (target 0.25 +- 0.01)\n",
              depth, o_depth);
  return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 7. Placement claims: BETWEEN is inert; a HOM-arm even-order sample does not
//    broaden the HOM dip.
bool criterion7() {
  Criterion c;
  const SpectralAmplitude f = make_gaussian(800e-9, 100e-9);
  const TwoPhotonState state{f};

  {
    const FrequencyGrid grid = FrequencyGrid::recommended_for(f, 13.0);
    double worst = 0.0;
    for (int i = 0; i < 15; ++i) {
      const double t1 = -12.0 + 24.0 * i / 14.0;
      const double with = coincidence_oracle(
          build_paper_network(t1, 9.0, Placement::Between, znse_slab()), state,
          grid);
      const double without = coincidence_oracle(
          build_paper_network(t1, 9.0, Placement::MzArm, nullptr), state, grid);
      worst = std::max(worst, std::abs(with - without) / std::abs(without));
    }
    c.require(worst <= 1e-9, "BETWEEN changed the rate by " + std::to_string(worst));
    std::printf("    BETWEEN placement: max pointwise rel change %.3g\n", worst);
  }

  {
    const FrequencyGrid grid = FrequencyGrid::recommended_for(f, 0.2, 4096);
    const SamplePtr pure_c2 = std::make_shared<TaylorPhase>(
        f.center_radps(), std::vector<double>{0.0, 0.0, 0.01});
    const double level =
        oracle_baseline(build_hom_network(0.0, nullptr), state, grid);
    const int n = 401;
    std::vector<double> t(n), plain(n), disp(n);  // dip depth curves
    for (int i = 0; i < n; ++i) {
      t[i] = -0.05 + 0.10 * i / (n - 1.0);
      plain[i] = level - coincidence_oracle(build_hom_network(t[i], nullptr),
                                            state, grid);
      disp[i] = level - coincidence_oracle(build_hom_network(t[i], pure_c2),
                                           state, grid);
    }
    const double w_plain = curve_fwhm(t, plain);
    const double w_disp = curve_fwhm(t, disp);
    c.require(std::abs(w_disp - w_plain) <= 0.01 * w_plain,
              "HOM dip FWHM " + std::to_string(w_disp) + " vs " +
                  std::to_string(w_plain));
    std::printf("    HOM dip FWHM: %.4f fs with pure c2 vs %.4f fs without\n",
                w_disp * 1e3, w_plain * 1e3);
  }
  return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 8. Quadrature convergence on the Fig. 2 scenario.
bool criterion8() {
  Criterion c;
  const SetupConfig cfg = fig2_config(znse_slab(), 58.0);
  SetupConfig dense = cfg;
  dense.grid =
      FrequencyGrid::make(cfg.grid.halfwidth_radps(), 2 * cfg.grid.count() - 1);
  const AnalyticEngine a(cfg), b(dense);
  double worst = 0.0;
  for (int i = 0; i < 21; ++i) {
    const double t = -58.0 + 116.0 * i / 20.0;
    const double va = a.rate_at(t), vb = b.rate_at(t);
    worst = std::max(worst, std::abs(va - vb) / std::max(1.0, std::abs(va)));
  }
  c.require(worst <= 1e-6, "doubling N moved Rc by " + std::to_string(worst));
  std::printf("    N = %zu -> %zu: max rel change %.3g\n", cfg.grid.count(),
              dense.grid.count(), worst);
  return c.failures == 0;
}

struct Entry {
  int number;
  const char* title;
  bool (*fn)();
};

const Entry kCriteria[] = {
    {1, "analytic/oracle equivalence over 20 random configurations", criterion1},
    {2, "realness for asymmetric tabulated spectra", criterion2},
    {3, "odd-order and even-order dispersion cancellation", criterion3},
    {4, "decomposition identity", criterion4},
    {5, "Fig. 2 scenario (ZnSe 3 mm, tau2 = 26 ps)", criterion5},
    {6, "25% visibility at the side dips", criterion6},
    {7, "placement claims (between / HOM arm)", criterion7},
    {8, "quadrature convergence gate", criterion8},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const Entry& e : kCriteria) {
    if (only != 0 && e.number != only) continue;
    std::printf("criterion %d: %s\n", e.number, e.title);
    bool ok = false;
    try {
      ok = e.fn();
    } catch (const std::exception& ex) {
      std::printf("    EXCEPTION: %s\n", ex.what());
    }
    std::printf("[%s] criterion %d\n", ok ? "PASS" : "FAIL", e.number);
    if (!ok) ++failures;
  }
  return failures;
}
