#include "dsc/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dsc {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", v);  // 12 significant digits
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // '\n' endings on every platform
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

}  // namespace

void emit_csv(const Interferogram& ig, const std::string& path,
              const std::vector<double>* oracle_rc) {
  if (ig.size() == 0) throw std::invalid_argument("emit_csv: empty interferogram");
  if (oracle_rc && oracle_rc->size() != ig.size())
    throw std::invalid_argument("emit_csv: oracle column length mismatch");
  std::ofstream out = open_out(path);
  out << "tau1_ps,Rc,B,R0,Reven,Rodd";
  if (oracle_rc) out << ",Rc_oracle";
  out << '\n';
  for (std::size_t i = 0; i < ig.size(); ++i) {
    out << sci(ig.tau1_ps[i]) << ',' << sci(ig.rc[i]) << ',' << sci(ig.baseline)
        << ',' << sci(ig.r0[i]) << ',' << sci(ig.r_even[i]) << ','
        << sci(ig.r_odd[i]);
    if (oracle_rc) out << ',' << sci((*oracle_rc)[i]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void emit_oracle_csv(const std::vector<double>& tau1_ps,
                     const std::vector<double>& oracle_rc,
                     const std::string& path) {
  if (tau1_ps.empty() || tau1_ps.size() != oracle_rc.size())
    throw std::invalid_argument("emit_oracle_csv: bad column lengths");
  std::ofstream out = open_out(path);
  out << "tau1_ps,Rc_oracle\n";
  for (std::size_t i = 0; i < tau1_ps.size(); ++i)
    out << sci(tau1_ps[i]) << ',' << sci(oracle_rc[i]) << '\n';
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::optional<std::size_t> CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  return std::nullopt;
}

CsvTable parse_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  CsvTable t;
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("'" + path + "' is empty");
  std::istringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) t.columns.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != t.columns.size())
      throw std::runtime_error("'" + path + "': ragged row");
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace dsc
