#include "dsc/runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <thread>
#include <vector>

#include "dsc/csv_io.hpp"
#include "dsc/errors.hpp"
#include "dsc/oracle.hpp"
#include "dsc/svg_plot.hpp"
#include "dsc/units.hpp"

namespace dsc {

namespace {

namespace fs = std::filesystem;

SpectralAmplitude build_spectrum(const RunConfig& rc) {
  const double lambda0_m = rc.center_wavelength_nm * 1.0e-9;
  if (rc.spectrum_kind == "gaussian")
    return make_gaussian(lambda0_m, rc.fwhm_wavelength_nm * 1.0e-9);
  const double w0 = units::radps_from_wavelength_m(lambda0_m);
  try {
    return load_tabulated_spectrum(rc.spectrum_file, w0);
  } catch (const std::exception& e) {
    throw config_error("spectrum.file", e.what());
  }
}

SamplePtr build_sample(const RunConfig& rc, const std::string& materials_path) {
  if (rc.sample_kind == "none") return nullptr;
  if (rc.sample_kind == "taylor") {
    const double w0 =
        units::radps_from_wavelength_m(rc.center_wavelength_nm * 1.0e-9);
    return std::make_shared<TaylorPhase>(w0, rc.taylor_coefficients);
  }
  const MaterialsDb db = MaterialsDb::load(materials_path);
  const Material& m = db.find(rc.material_id);
  return std::make_shared<SlabPhase>(m, rc.thickness_mm);
}

std::vector<double> oracle_scan(const SetupConfig& cfg,
                                const std::vector<double>& tau1,
                                unsigned threads) {
  const TwoPhotonState state{cfg.spectrum};
  std::vector<double> rc(tau1.size());
  const ModeNetwork ref =
      build_paper_network(0.0, cfg.tau2_ps, cfg.placement, cfg.sample);
  const double baseline = oracle_baseline(ref, state, cfg.grid);
  const double scale =
      cfg.normalization == Normalization::BaselineOne ? 1.0 / baseline : 1.0;

  unsigned nthreads = threads ? threads : std::thread::hardware_concurrency();
  nthreads = std::max(1u, std::min<unsigned>(nthreads, 64));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tau1.size()) return;
      const ModeNetwork net =
          build_paper_network(tau1[i], cfg.tau2_ps, cfg.placement, cfg.sample);
      rc[i] = coincidence_oracle(net, state, cfg.grid) * scale;
    }
  };
  if (nthreads == 1 || tau1.size() < 4) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rc;
}

void print_features(std::ostream& out, const Interferogram& ig) {
  const double tau_c = coherence_time_ps(ig.config.spectrum);
  const auto features = locate_features(ig, tau_c);
  out << "tau_c = " << tau_c << " ps; " << features.size()
      << " feature(s):\n";
  char buf[160];
  std::snprintf(buf, sizeof(buf), "  %-14s %14s %12s %14s\n", "type",
                "center [ps]", "width [ps]", "depth/height");
  out << buf;
  for (const auto& f : features) {
    const char* type = f.type == Regime::CentralPeak ? "central_peak"
                                                     : "hom_side_dip";
    std::snprintf(buf, sizeof(buf), "  %-14s %14.6g %12.6g %14.6g\n", type,
                  f.center_ps, f.width_ps, f.depth_or_height);
    out << buf;
  }
}

}  // namespace

int run(const std::string& config_path, const RunOverrides& overrides,
        std::ostream& out, std::ostream& err) {
  RunConfig rc;
  try {
    rc = load_run_config(config_path);
    if (overrides.engine) rc.engine = parse_engine(*overrides.engine);
    if (overrides.plot) rc.plot = *overrides.plot;
    if (overrides.materials_file) rc.materials_file = *overrides.materials_file;
    if (rc.engine != Engine::Oracle && rc.placement != Placement::MzArm)
      throw config_error("engine",
                         "analytic engine requires placement mz_arm");
    if (rc.sample_kind == "slab" && rc.materials_file.empty())
      throw config_error("materials_file", "required for slab samples");
  } catch (const config_error& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  }

  const fs::path out_dir(overrides.output_dir ? *overrides.output_dir : ".");
  try {
    fs::create_directories(out_dir);
  } catch (const std::exception& e) {
    err << "config error: output directory not writable: " << e.what() << '\n';
    return 2;
  }

  try {
    SetupConfig cfg;
    try {
      cfg.spectrum = build_spectrum(rc);
    } catch (const config_error& e) {
      err << "config error: " << e.what() << '\n';
      return 2;
    }
    try {
      cfg.sample = build_sample(rc, rc.materials_file);
    } catch (const material_not_found& e) {
      err << "materials error: " << e.what() << '\n';
      return 3;
    } catch (const std::runtime_error& e) {
      err << "materials error: " << e.what() << '\n';
      return 3;
    }
    cfg.tau2_ps = rc.tau2_ps;
    cfg.placement = rc.placement;
    cfg.normalization = rc.normalization;

    const double tau_reach =
        std::max(std::abs(rc.tau1_min_ps), std::abs(rc.tau1_max_ps));
    if (rc.grid_count == 0) {
      cfg.grid = recommended_grid(cfg.spectrum, cfg.sample.get(), cfg.tau2_ps,
                                  tau_reach, 8192, rc.grid_halfwidth_factor);
    } else {
      const double sigma = cfg.spectrum.rms_bandwidth_radps();
      cfg.grid =
          FrequencyGrid::make(rc.grid_halfwidth_factor * sigma, rc.grid_count);
    }

    const bool want_analytic = rc.engine != Engine::Oracle;
    const bool want_oracle = rc.engine != Engine::Analytic;
    const fs::path csv_path = out_dir / rc.csv_name;

    if (want_analytic) {
      const AnalyticEngine engine(cfg);
      Interferogram ig =
          engine.scan(rc.tau1_min_ps, rc.tau1_max_ps, rc.steps, rc.threads);
      for (const auto& w : ig.warnings) err << "warning: " << w << '\n';

      std::vector<double> oracle_rc;
      if (want_oracle)
        oracle_rc = oracle_scan(cfg, ig.tau1_ps, rc.threads);
      emit_csv(ig, csv_path.string(), want_oracle ? &oracle_rc : nullptr);
      out << "wrote " << csv_path.string() << " (" << ig.size() << " samples, "
          << ig.units_label << ")\n";

      if (rc.plot) {
        const fs::path svg_path = out_dir / rc.svg_name;
        emit_plot(ig, svg_path.string());
        out << "wrote " << svg_path.string() << '\n';
      }
      print_features(out, ig);

      if (want_oracle) {
        double worst = 0.0;
        double scale = 0.0;
        for (double v : ig.rc) scale = std::max(scale, std::abs(v));
        for (std::size_t i = 0; i < ig.size(); ++i)
          worst = std::max(worst, std::abs(ig.rc[i] - oracle_rc[i]) / scale);
        out << "max relative analytic/oracle discrepancy: " << worst << '\n';
      }
    } else {
      std::vector<double> tau1(rc.steps);
      const double span = rc.tau1_max_ps - rc.tau1_min_ps;
      for (std::size_t i = 0; i < rc.steps; ++i)
        tau1[i] = rc.tau1_min_ps +
                  span * static_cast<double>(i) / static_cast<double>(rc.steps - 1);
      const std::vector<double> oracle_rc = oracle_scan(cfg, tau1, rc.threads);
      emit_oracle_csv(tau1, oracle_rc, csv_path.string());
      out << "wrote " << csv_path.string() << " (" << tau1.size()
          << " samples, oracle engine)\n";
    }
    return 0;
  } catch (const numerical_failure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int materials_list(const std::string& materials_path, std::ostream& out,
                   std::ostream& err) {
  try {
    const MaterialsDb db = MaterialsDb::load(materials_path);
    out << db.entries().size() << " material(s) in " << db.path() << ":\n";
    for (const auto& m : db.entries()) {
      out << "  " << m.id << ": " << m.sellmeier_b.size()
          << "-term Sellmeier, valid " << m.lambda_min_um << "-"
          << m.lambda_max_um << " um\n    source: " << m.source << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    err << "materials error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace dsc
