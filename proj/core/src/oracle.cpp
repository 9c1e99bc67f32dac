#include "dsc/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace dsc {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

using Row = std::array<std::complex<double>, 3>;

int port_line(const ModeNetwork& net, OutputPort p) {
  switch (p) {
    case OutputPort::D1:
      return net.detector1_line;
    case OutputPort::D2:
      return net.detector2_line;
    case OutputPort::Unused:
      return net.unused_line;
  }
  return -1;
}

// Every line's operator as a row over the input basis, after all elements.
std::vector<Row> propagate(const ModeNetwork& net, double omega_abs) {
  std::vector<Row> rows(static_cast<std::size_t>(net.line_count),
                        Row{{{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}});
  for (std::size_t c = 0; c < net.input_lines.size(); ++c)
    rows[static_cast<std::size_t>(net.input_lines[c])][c] = 1.0;

  for (const auto& el : net.elements) {
    auto& a = rows[static_cast<std::size_t>(el.line_a)];
    switch (el.kind) {
      case NetworkElement::Kind::BeamSplitter: {
        auto& b = rows[static_cast<std::size_t>(el.line_b)];
        for (std::size_t c = 0; c < 3; ++c) {
          const std::complex<double> av = a[c];
          const std::complex<double> bv = b[c];
          a[c] = kInvSqrt2 * (av + std::complex<double>(0.0, 1.0) * bv);
          b[c] = kInvSqrt2 * (std::complex<double>(0.0, 1.0) * av + bv);
        }
        break;
      }
      case NetworkElement::Kind::Delay: {
        const double ph = -omega_abs * el.tau_ps;
        const std::complex<double> factor(std::cos(ph), std::sin(ph));
        for (auto& v : a) v *= factor;
        break;
      }
      case NetworkElement::Kind::Phase: {
        const double ph = el.phase ? el.phase->phase(omega_abs) : 0.0;
        const std::complex<double> factor(std::cos(ph), std::sin(ph));
        for (auto& v : a) v *= factor;
        break;
      }
    }
  }
  return rows;
}

}  // namespace

std::array<Row, 3> ModeNetwork::transfer(double omega_abs_radps) const {
  const std::vector<Row> rows = propagate(*this, omega_abs_radps);
  std::array<Row, 3> out{};
  out[0] = rows[static_cast<std::size_t>(detector1_line)];
  out[1] = rows[static_cast<std::size_t>(detector2_line)];
  if (unused_line >= 0) out[2] = rows[static_cast<std::size_t>(unused_line)];
  return out;
}

double ModeNetwork::unitarity_defect(double omega_abs_radps) const {
  const auto m = transfer(omega_abs_radps);
  const std::size_t dim = input_lines.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t r = 0; r < dim; ++r)
        acc += std::conj(m[r][i]) * m[r][j];
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

ModeNetwork build_paper_network(double tau1_ps, double tau2_ps,
                                Placement placement, SamplePtr sample) {
  // Lines: 0 = input arm 1 (variable delay), 1 = input arm 2, 2 = the MZ's
  // vacuum port. After BS1 line 0 carries the MZ-bound port, line 1 the
  // unused HOM output; after BS2 line 0 is the tau2 arm, line 2 the sample
  // arm; after BS3 lines 0/2 are the detectors.
  ModeNetwork net;
  net.line_count = 3;
  net.input_lines = {0, 1, 2};
  net.elements.push_back(
      {NetworkElement::Kind::Delay, 0, 0, tau1_ps, nullptr});
  if (placement == Placement::HomArm && sample)
    net.elements.push_back({NetworkElement::Kind::Phase, 1, 0, 0.0, sample});
  net.elements.push_back(
      {NetworkElement::Kind::BeamSplitter, 0, 1, 0.0, nullptr});
  if (placement == Placement::Between && sample)
    net.elements.push_back({NetworkElement::Kind::Phase, 0, 0, 0.0, sample});
  net.elements.push_back(
      {NetworkElement::Kind::BeamSplitter, 0, 2, 0.0, nullptr});
  net.elements.push_back(
      {NetworkElement::Kind::Delay, 0, 0, tau2_ps, nullptr});
  if (placement == Placement::MzArm && sample)
    net.elements.push_back({NetworkElement::Kind::Phase, 2, 0, 0.0, sample});
  net.elements.push_back(
      {NetworkElement::Kind::BeamSplitter, 0, 2, 0.0, nullptr});
  net.detector1_line = 0;
  net.detector2_line = 2;
  net.unused_line = 1;
  return net;
}

ModeNetwork build_hom_network(double tau1_ps, SamplePtr sample) {
  ModeNetwork net;
  net.line_count = 2;
  net.input_lines = {0, 1};
  net.elements.push_back(
      {NetworkElement::Kind::Delay, 0, 0, tau1_ps, nullptr});
  if (sample)
    net.elements.push_back({NetworkElement::Kind::Phase, 1, 0, 0.0, sample});
  net.elements.push_back(
      {NetworkElement::Kind::BeamSplitter, 0, 1, 0.0, nullptr});
  net.detector1_line = 0;
  net.detector2_line = 1;
  return net;
}

ModeNetwork build_wire_network() {
  ModeNetwork net;
  net.line_count = 2;
  net.input_lines = {0, 1};
  net.detector1_line = 0;
  net.detector2_line = 1;
  return net;
}

TwoPhotonAmplitude two_photon_amplitude(const ModeNetwork& net,
                                        const TwoPhotonState& state,
                                        const FrequencyGrid& grid,
                                        OutputPort x, OutputPort y) {
  const int lx = port_line(net, x);
  const int ly = port_line(net, y);
  if (lx < 0 || ly < 0)
    throw std::invalid_argument("requested output port absent from network");

  const double w0 = state.spectrum.center_radps();
  if (grid.halfwidth_radps() > state.spectrum.max_abs_detuning_radps())
    throw std::invalid_argument(
        "frequency grid extends beyond the spectrum's tabulated range");

  const auto& w = grid.detunings();
  const std::size_t n = w.size();

  // One propagation per grid point: the matrix at Omega0 + w_k doubles as the
  // idler matrix of the mirror point, since the grid is mirror-exact.
  std::vector<Row> mx(n), my(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::vector<Row> rows = propagate(net, w0 + w[k]);
    mx[k] = rows[static_cast<std::size_t>(lx)];
    my[k] = rows[static_cast<std::size_t>(ly)];
  }

  TwoPhotonAmplitude amp;
  amp.detunings_radps = w;
  amp.amplitude.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t mirror = n - 1 - k;  // index of -w_k
    const std::complex<double> f_pos = state.spectrum.value(w[k]);
    const std::complex<double> f_neg = state.spectrum.value(-w[k]);
    // Wick pairings of the anticorrelated pair onto the ordered outputs:
    // photon a1 at frequency W0+w to x and a2 at W0-w to y, plus the swap.
    amp.amplitude[k] =
        mx[k][0] * my[mirror][1] * f_pos + mx[k][1] * my[mirror][0] * f_neg;
  }
  return amp;
}

double coincidence_oracle(const ModeNetwork& net, const TwoPhotonState& state,
                          const FrequencyGrid& grid) {
  return pair_rate(net, state, grid, OutputPort::D1, OutputPort::D2);
}

double pair_rate(const ModeNetwork& net, const TwoPhotonState& state,
                 const FrequencyGrid& grid, OutputPort x, OutputPort y) {
  const TwoPhotonAmplitude amp = two_photon_amplitude(net, state, grid, x, y);
  double acc = 0.0;
  for (std::size_t k = 0; k < amp.amplitude.size(); ++k)
    acc += grid.weight(k) * std::norm(amp.amplitude[k]);
  return acc;
}

double oracle_baseline(const ModeNetwork& net, const TwoPhotonState& state,
                       const FrequencyGrid& grid) {
  const int lx = port_line(net, OutputPort::D1);
  const int ly = port_line(net, OutputPort::D2);
  const double w0 = state.spectrum.center_radps();
  const auto& w = grid.detunings();
  const std::size_t n = w.size();

  std::vector<Row> mx(n), my(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::vector<Row> rows = propagate(net, w0 + w[k]);
    mx[k] = rows[static_cast<std::size_t>(lx)];
    my[k] = rows[static_cast<std::size_t>(ly)];
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t mirror = n - 1 - k;
    const double f2_pos = std::norm(state.spectrum.value(w[k]));
    const double f2_neg = std::norm(state.spectrum.value(-w[k]));
    acc += grid.weight(k) *
           (std::norm(mx[k][0] * my[mirror][1]) * f2_pos +
            std::norm(mx[k][1] * my[mirror][0]) * f2_neg);
  }
  return acc;
}

}  // namespace dsc
