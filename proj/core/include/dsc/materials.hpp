#ifndef DSC_MATERIALS_HPP
#define DSC_MATERIALS_HPP

#include <string>
#include <vector>

namespace dsc {

/// One Sellmeier entry: n^2(lambda) = 1 + sum_i B_i lambda^2 / (lambda^2 - C_i),
/// lambda in um, C_i in um^2. Literature-sourced numbers live in the materials
/// data file, never in code; `source` carries the citation string verbatim.
struct Material {
  std::string id;
  std::vector<double> sellmeier_b;
  std::vector<double> sellmeier_c_um2;
  double lambda_min_um = 0.0;
  double lambda_max_um = 0.0;
  std::string source;

  double refractive_index(double lambda_um) const;
};

class MaterialsDb {
 public:
  static MaterialsDb load(const std::string& path);

  /// Case-insensitive id lookup, whitespace in the query ignored
  /// ("zn se" == "ZnSe"). Throws material_not_found.
  const Material& find(const std::string& id) const;

  const std::vector<Material>& entries() const noexcept { return entries_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::vector<Material> entries_;
  std::string path_;
};

}  // namespace dsc

#endif
