#ifndef DSC_CSV_IO_HPP
#define DSC_CSV_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "dsc/interferogram.hpp"

namespace dsc {

/// Header `tau1_ps,Rc,B,R0,Reven,Rodd[,Rc_oracle]`, one row per sample,
/// scientific notation with 12 significant digits. Byte-deterministic for
/// identical inputs.
void emit_csv(const Interferogram& ig, const std::string& path,
              const std::vector<double>* oracle_rc = nullptr);

/// Oracle-only runs have no decomposition; header `tau1_ps,Rc_oracle`.
void emit_oracle_csv(const std::vector<double>& tau1_ps,
                     const std::vector<double>& oracle_rc,
                     const std::string& path);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::optional<std::size_t> column(const std::string& name) const;
};

CsvTable parse_csv(const std::string& path);

}  // namespace dsc

#endif
