#include "dsc/run_config.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"

#include "dsc/errors.hpp"

namespace dsc {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number())
    throw config_error(field, "missing or not a number");
  return j[field].get<double>();
}

double number_or(const json& j, const std::string& field, double fallback) {
  if (!j.contains(field)) return fallback;
  if (!j[field].is_number()) throw config_error(field, "not a number");
  return j[field].get<double>();
}

std::string require_string(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_string())
    throw config_error(field, "missing or not a string");
  return j[field].get<std::string>();
}

Placement parse_placement(const std::string& s) {
  if (s == "mz_arm") return Placement::MzArm;
  if (s == "hom_arm") return Placement::HomArm;
  if (s == "between") return Placement::Between;
  throw config_error("placement",
                     "'" + s + "' is not one of mz_arm|hom_arm|between");
}

}  // namespace

Engine parse_engine(const std::string& s) {
  if (s == "analytic") return Engine::Analytic;
  if (s == "oracle") return Engine::Oracle;
  if (s == "both") return Engine::Both;
  throw config_error("engine", "'" + s + "' is not one of analytic|oracle|both");
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("(file)", "cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw config_error("(file)", std::string("config is not valid JSON: ") + e.what());
  }

  RunConfig rc;

  if (!j.contains("spectrum") || !j["spectrum"].is_object())
    throw config_error("spectrum", "missing object");
  const json& sp = j["spectrum"];
  rc.spectrum_kind = require_string(sp, "kind");
  if (rc.spectrum_kind == "gaussian") {
    rc.center_wavelength_nm = require_number(sp, "center_wavelength_nm");
    rc.fwhm_wavelength_nm = require_number(sp, "fwhm_wavelength_nm");
    if (!(rc.center_wavelength_nm > 0.0))
      throw config_error("spectrum.center_wavelength_nm", "must be > 0");
    if (!(rc.fwhm_wavelength_nm > 0.0) ||
        !(rc.fwhm_wavelength_nm < rc.center_wavelength_nm))
      throw config_error("spectrum.fwhm_wavelength_nm",
                         "must satisfy 0 < fwhm < center wavelength");
  } else if (rc.spectrum_kind == "tabulated") {
    rc.spectrum_file = require_string(sp, "file");
    rc.center_wavelength_nm = require_number(sp, "center_wavelength_nm");
    if (!(rc.center_wavelength_nm > 0.0))
      throw config_error("spectrum.center_wavelength_nm", "must be > 0");
  } else {
    throw config_error("spectrum.kind", "'" + rc.spectrum_kind +
                                            "' is not one of gaussian|tabulated");
  }

  if (!j.contains("sample") || !j["sample"].is_object())
    throw config_error("sample", "missing object (use kind \"none\" for phi = 0)");
  const json& sa = j["sample"];
  rc.sample_kind = require_string(sa, "kind");
  if (rc.sample_kind == "taylor") {
    static const char* keys[] = {"c0_rad", "c1_ps",  "c2_ps2",
                                 "c3_ps3", "c4_ps4", "c5_ps5"};
    rc.taylor_coefficients.assign(6, 0.0);
    std::size_t highest = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      if (sa.contains(keys[k])) {
        rc.taylor_coefficients[k] = require_number(sa, keys[k]);
        highest = k;
      }
    }
    rc.taylor_coefficients.resize(highest + 1);
    for (double c : rc.taylor_coefficients)
      if (!std::isfinite(c))
        throw config_error("sample.c*", "coefficients must be finite");
  } else if (rc.sample_kind == "slab") {
    rc.material_id = require_string(sa, "material");
    rc.thickness_mm = require_number(sa, "thickness_mm");
    if (!(rc.thickness_mm > 0.0))
      throw config_error("sample.thickness_mm", "must be > 0");
  } else if (rc.sample_kind != "none") {
    throw config_error("sample.kind",
                       "'" + rc.sample_kind + "' is not one of none|taylor|slab");
  }

  rc.tau2_ps = require_number(j, "tau2_ps");
  if (!std::isfinite(rc.tau2_ps))
    throw config_error("tau2_ps", "must be finite");

  rc.placement = parse_placement(
      j.contains("placement") ? require_string(j, "placement") : "mz_arm");

  const std::string norm =
      j.contains("normalization") ? require_string(j, "normalization")
                                  : "baseline_one";
  if (norm == "baseline_one")
    rc.normalization = Normalization::BaselineOne;
  else if (norm == "raw")
    rc.normalization = Normalization::Raw;
  else
    throw config_error("normalization",
                       "'" + norm + "' is not one of baseline_one|raw");

  if (j.contains("grid")) {
    const json& g = j["grid"];
    const double count = number_or(g, "count", 0.0);
    if (count < 0.0 || count != std::floor(count))
      throw config_error("grid.count", "must be a non-negative integer");
    rc.grid_count = static_cast<std::size_t>(count);
    rc.grid_halfwidth_factor = number_or(g, "halfwidth_factor", 5.0);
    if (!(rc.grid_halfwidth_factor >= 5.0))
      throw config_error("grid.halfwidth_factor",
                         "must be >= 5 (grid coverage invariant)");
  }

  if (!j.contains("scan") || !j["scan"].is_object())
    throw config_error("scan", "missing object");
  const json& sc = j["scan"];
  rc.tau1_min_ps = require_number(sc, "tau1_min_ps");
  rc.tau1_max_ps = require_number(sc, "tau1_max_ps");
  const double steps = require_number(sc, "steps");
  if (!(rc.tau1_min_ps < rc.tau1_max_ps))
    throw config_error("scan.tau1_min_ps", "must be < scan.tau1_max_ps");
  if (steps < 2.0 || steps != std::floor(steps))
    throw config_error("scan.steps", "must be an integer >= 2");
  rc.steps = static_cast<std::size_t>(steps);

  rc.engine = parse_engine(
      j.contains("engine") ? require_string(j, "engine") : "analytic");
  if (rc.engine != Engine::Oracle && rc.placement != Placement::MzArm)
    throw config_error("engine",
                       "analytic engine requires placement mz_arm; use engine "
                       "\"oracle\" for hom_arm/between placements");

  const double threads = number_or(j, "threads", 0.0);
  if (threads < 0.0 || threads != std::floor(threads))
    throw config_error("threads", "must be a non-negative integer");
  rc.threads = static_cast<unsigned>(threads);

  if (j.contains("materials_file"))
    rc.materials_file = require_string(j, "materials_file");
  if (rc.sample_kind == "slab" && rc.materials_file.empty())
    throw config_error("materials_file",
                       "required when sample.kind is \"slab\" (or pass --materials)");

  if (j.contains("output")) {
    const json& o = j["output"];
    if (o.contains("csv")) rc.csv_name = require_string(o, "csv");
    if (o.contains("svg")) rc.svg_name = require_string(o, "svg");
    if (o.contains("plot")) {
      if (!o["plot"].is_boolean()) throw config_error("output.plot", "must be a boolean");
      rc.plot = o["plot"].get<bool>();
    }
  }
  return rc;
}

}  // namespace dsc
