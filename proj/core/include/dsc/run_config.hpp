#ifndef DSC_RUN_CONFIG_HPP
#define DSC_RUN_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "dsc/interferogram.hpp"

namespace dsc {

enum class Engine { Analytic, Oracle, Both };

/// Parsed, validated run configuration. Every physical key in the file
/// carries its unit in the name (tau2_ps, thickness_mm, ...); see the README
/// for the schema. Validation happens entirely before any computation.
struct RunConfig {
  // spectrum
  std::string spectrum_kind;  // "gaussian" | "tabulated"
  double center_wavelength_nm = 800.0;
  double fwhm_wavelength_nm = 100.0;
  std::string spectrum_file;  // tabulated only

  // sample
  std::string sample_kind;  // "none" | "taylor" | "slab"
  std::vector<double> taylor_coefficients;
  std::string material_id;
  double thickness_mm = 0.0;

  double tau2_ps = 0.0;
  Placement placement = Placement::MzArm;
  Normalization normalization = Normalization::BaselineOne;

  std::size_t grid_count = 0;  // 0 = auto
  double grid_halfwidth_factor = 5.0;

  double tau1_min_ps = 0.0;
  double tau1_max_ps = 0.0;
  std::size_t steps = 0;

  Engine engine = Engine::Analytic;
  unsigned threads = 0;  // 0 = hardware
  std::string materials_file;
  std::string csv_name = "interferogram.csv";
  std::string svg_name = "interferogram.svg";
  bool plot = false;
};

/// Throws config_error (naming the offending field) on any invariant
/// violation; never partially computes.
RunConfig load_run_config(const std::string& path);

Engine parse_engine(const std::string& name);

}  // namespace dsc

#endif
