#ifndef DSC_SVG_PLOT_HPP
#define DSC_SVG_PLOT_HPP

#include <string>

#include "dsc/interferogram.hpp"

namespace dsc {

/// Standalone SVG: tau1 [ps] vs normalized coincidence rate, with an inset
/// panel auto-zoomed on one side-dip window (falls back to the right half of
/// the scan when no side feature exists). Output is a pure function of the
/// interferogram.
void emit_plot(const Interferogram& ig, const std::string& path);

/// Window the inset uses; exposed so tests can pin it down.
struct InsetWindow {
  double center_ps;
  double halfwidth_ps;
};
InsetWindow inset_window(const Interferogram& ig);

}  // namespace dsc

#endif
