#ifndef DSC_ERRORS_HPP
#define DSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dsc {

// Configuration rejected before any computation; `field` names the offender.
class config_error : public std::invalid_argument {
 public:
  config_error(std::string field, const std::string& what)
      : std::invalid_argument("config field '" + field + "': " + what),
        field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class material_not_found : public std::runtime_error {
 public:
  material_not_found(std::string id, std::string path)
      : std::runtime_error("material '" + id + "' not found in materials file '" +
                           path + "'"),
        id_(std::move(id)),
        path_(std::move(path)) {}
  const std::string& id() const noexcept { return id_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::string id_;
  std::string path_;
};

// Non-finite intermediate values, failed derivative estimates and the like.
class numerical_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested operation exists but not for this configuration (e.g. the
// analytic engine on a non-MZ-arm sample placement).
class unsupported_configuration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dsc

#endif
