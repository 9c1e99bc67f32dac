#include "dsc/materials.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "dsc/errors.hpp"

namespace dsc {

namespace {

std::string normalize_id(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

double Material::refractive_index(double lambda_um) const {
  if (lambda_um < lambda_min_um || lambda_um > lambda_max_um)
    throw std::out_of_range("material '" + id + "': wavelength " +
                            std::to_string(lambda_um) +
                            " um outside Sellmeier validity range [" +
                            std::to_string(lambda_min_um) + ", " +
                            std::to_string(lambda_max_um) + "] um");
  const double l2 = lambda_um * lambda_um;
  double n2 = 1.0;
  for (std::size_t i = 0; i < sellmeier_b.size(); ++i)
    n2 += sellmeier_b[i] * l2 / (l2 - sellmeier_c_um2[i]);
  if (!(n2 >= 1.0) || !std::isfinite(n2))
    throw numerical_failure("material '" + id + "': n^2 = " +
                            std::to_string(n2) + " at " +
                            std::to_string(lambda_um) + " um");
  return std::sqrt(n2);
}

MaterialsDb MaterialsDb::load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open materials file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("materials file '" + path + "': " + e.what());
  }

  MaterialsDb db;
  db.path_ = path;
  if (!j.contains("materials") || !j["materials"].is_object())
    throw std::runtime_error("materials file '" + path +
                             "' lacks a top-level \"materials\" object");
  for (const auto& [key, entry] : j["materials"].items()) {
    Material m;
    m.id = key;
    m.sellmeier_b = entry.at("sellmeier_b").get<std::vector<double>>();
    m.sellmeier_c_um2 = entry.at("sellmeier_c_um2").get<std::vector<double>>();
    m.lambda_min_um = entry.at("validity_um").at(0).get<double>();
    m.lambda_max_um = entry.at("validity_um").at(1).get<double>();
    m.source = entry.value("source", "");
    if (m.sellmeier_b.size() != m.sellmeier_c_um2.size() || m.sellmeier_b.empty())
      throw std::runtime_error("materials file '" + path + "': entry '" + key +
                               "' has mismatched Sellmeier arrays");
    if (!(m.lambda_min_um > 0.0) || !(m.lambda_max_um > m.lambda_min_um))
      throw std::runtime_error("materials file '" + path + "': entry '" + key +
                               "' has an invalid validity range");
    db.entries_.push_back(std::move(m));
  }
  std::sort(db.entries_.begin(), db.entries_.end(),
            [](const Material& a, const Material& b) { return a.id < b.id; });
  return db;
}

const Material& MaterialsDb::find(const std::string& id) const {
  const std::string want = normalize_id(id);
  for (const auto& m : entries_)
    if (normalize_id(m.id) == want) return m;
  throw material_not_found(id, path_);
}

}  // namespace dsc
