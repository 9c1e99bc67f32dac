#ifndef DSC_RUNNER_HPP
#define DSC_RUNNER_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "dsc/run_config.hpp"

namespace dsc {

/// Command-line overrides for a config-file run.
struct RunOverrides {
  std::optional<std::string> engine;
  std::optional<std::string> output_dir;
  std::optional<bool> plot;
  std::optional<std::string> materials_file;
};

/// Exit codes: 0 success, 2 config validation failure, 3 materials lookup
/// failure, 4 numerical failure in a lower module, 1 anything else.
int run(const std::string& config_path, const RunOverrides& overrides,
        std::ostream& out, std::ostream& err);

int materials_list(const std::string& materials_path, std::ostream& out,
                   std::ostream& err);

}  // namespace dsc

#endif
