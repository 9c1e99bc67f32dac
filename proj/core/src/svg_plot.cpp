#include "dsc/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dsc {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Frame {
  double x0, y0, w, h;      // pixel rect
  double tmin, tmax;        // data x range
  double vmin, vmax;        // data y range

  double px(double t) const { return x0 + (t - tmin) / (tmax - tmin) * w; }
  double py(double v) const { return y0 + h - (v - vmin) / (vmax - vmin) * h; }
};

void polyline(std::ofstream& out, const Frame& fr,
              const std::vector<double>& t, const std::vector<double>& v,
              std::size_t lo, std::size_t hi, const char* color) {
  out << "  <polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"1\" points=\"";
  for (std::size_t i = lo; i < hi; ++i) {
    if (i > lo) out << ' ';
    out << num(fr.px(t[i])) << ',' << num(fr.py(v[i]));
  }
  out << "\"/>\n";
}

void axes(std::ofstream& out, const Frame& fr, const char* xlabel,
          const char* ylabel) {
  out << "  <rect x=\"" << num(fr.x0) << "\" y=\"" << num(fr.y0) << "\" width=\""
      << num(fr.w) << "\" height=\"" << num(fr.h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double t = fr.tmin + (fr.tmax - fr.tmin) * i / 4.0;
    const double v = fr.vmin + (fr.vmax - fr.vmin) * i / 4.0;
    out << "  <text x=\"" << num(fr.px(t)) << "\" y=\"" << num(fr.y0 + fr.h + 14)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << num(t) << "</text>\n";
    out << "  <text x=\"" << num(fr.x0 - 4) << "\" y=\"" << num(fr.py(v) + 3)
        << "\" font-size=\"10\" text-anchor=\"end\">" << num(v) << "</text>\n";
  }
  out << "  <text x=\"" << num(fr.x0 + fr.w / 2) << "\" y=\""
      << num(fr.y0 + fr.h + 30) << "\" font-size=\"12\" text-anchor=\"middle\">"
      << xlabel << "</text>\n";
  out << "  <text x=\"" << num(fr.x0 - 44) << "\" y=\"" << num(fr.y0 + fr.h / 2)
      << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 "
      << num(fr.x0 - 44) << ' ' << num(fr.y0 + fr.h / 2) << ")\">" << ylabel
      << "</text>\n";
}

void value_range(const std::vector<double>& v, std::size_t lo, std::size_t hi,
                 double* vmin, double* vmax) {
  *vmin = v[lo];
  *vmax = v[lo];
  for (std::size_t i = lo; i < hi; ++i) {
    *vmin = std::min(*vmin, v[i]);
    *vmax = std::max(*vmax, v[i]);
  }
  const double pad = 0.05 * std::max(*vmax - *vmin, 1.0e-12);
  *vmin -= pad;
  *vmax += pad;
}

}  // namespace

InsetWindow inset_window(const Interferogram& ig) {
  const double tau_c = coherence_time_ps(ig.config.spectrum);
  const auto features = locate_features(ig, tau_c);
  const Feature* side = nullptr;
  for (const auto& f : features) {
    if (f.type != Regime::HomSideDip) continue;
    if (!side || f.center_ps > side->center_ps) side = &f;
  }
  if (side) {
    const double half =
        std::max({4.0 * std::abs(side->width_ps), 20.0 * tau_c, 40.0 * (ig.tau1_ps[1] - ig.tau1_ps[0])});
    return {side->center_ps, half};
  }
  const double mid = 0.75 * ig.tau1_ps.back() + 0.25 * ig.tau1_ps.front();
  return {mid, 0.125 * (ig.tau1_ps.back() - ig.tau1_ps.front())};
}

void emit_plot(const Interferogram& ig, const std::string& path) {
  if (ig.size() < 2) throw std::invalid_argument("emit_plot: empty interferogram");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");

  const double W = 900, H = 560;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n"
      << "  <rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

  Frame main{70, 30, W - 100, H - 90, ig.tau1_ps.front(), ig.tau1_ps.back(), 0, 0};
  value_range(ig.rc, 0, ig.size(), &main.vmin, &main.vmax);
  axes(out, main, "tau1 [ps]", "coincidence rate");
  polyline(out, main, ig.tau1_ps, ig.rc, 0, ig.size(), "#1f77b4");

  // Inset: zoom on one side-dip window, mirroring the usual presentation.
  const InsetWindow win = inset_window(ig);
  std::size_t lo = 0, hi = ig.size();
  while (lo < ig.size() && ig.tau1_ps[lo] < win.center_ps - win.halfwidth_ps) ++lo;
  while (hi > 0 && ig.tau1_ps[hi - 1] > win.center_ps + win.halfwidth_ps) --hi;
  if (hi <= lo + 2) {
    lo = ig.size() / 2;
    hi = ig.size();
  }
  Frame inset{W - 330, 50, 270, 170, ig.tau1_ps[lo], ig.tau1_ps[hi - 1], 0, 0};
  value_range(ig.rc, lo, hi, &inset.vmin, &inset.vmax);
  out << "  <rect x=\"" << num(inset.x0 - 6) << "\" y=\"" << num(inset.y0 - 6)
      << "\" width=\"" << num(inset.w + 12) << "\" height=\"" << num(inset.h + 12)
      << "\" fill=\"white\" stroke=\"none\"/>\n";
  axes(out, inset, "tau1 [ps]", "");
  polyline(out, inset, ig.tau1_ps, ig.rc, lo, hi, "#d62728");

  out << "</svg>\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace dsc
