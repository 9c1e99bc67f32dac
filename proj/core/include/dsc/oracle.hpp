#ifndef DSC_ORACLE_HPP
#define DSC_ORACLE_HPP

#include <array>
#include <complex>
#include <vector>

#include "dsc/interferogram.hpp"

namespace dsc {

/// First-principles verifier: propagates mode operators through an explicit
/// element network frequency by frequency and evaluates the two-photon
/// detection amplitude directly, independently of the analytic rate formula.
///
/// Element conventions (fixed so golden files are reproducible):
///   beam splitter   (a, b) -> ((a + i b)/sqrt2, (i a + b)/sqrt2)
///   delay tau       a(w) -> e^{-i w tau} a(w)
///   phase element   a(w) -> e^{+i phi(w)} a(w)
struct NetworkElement {
  enum class Kind { BeamSplitter, Delay, Phase };
  Kind kind;
  int line_a = 0;
  int line_b = 0;        // beam splitter only
  double tau_ps = 0.0;   // delay only
  SamplePtr phase;       // phase element only
};

struct ModeNetwork {
  int line_count = 0;
  std::vector<NetworkElement> elements;
  std::vector<int> input_lines;  // operator basis, in order (a1, a2[, vacuum])
  int detector1_line = -1;
  int detector2_line = -1;
  int unused_line = -1;          // absorbed port; -1 when the network has none

  int output_count() const { return unused_line >= 0 ? 3 : 2; }

  /// Transfer rows (D1, D2[, unused]) over the input basis at an absolute
  /// frequency. M[r][c] = <output r | input c>.
  std::array<std::array<std::complex<double>, 3>, 3> transfer(
      double omega_abs_radps) const;

  /// max |(M^dagger M - I)_{ij}| at the given frequency; ~1e-16 for any
  /// all-lossless network.
  double unitarity_defect(double omega_abs_radps) const;
};

ModeNetwork build_paper_network(double tau1_ps, double tau2_ps,
                                Placement placement, SamplePtr sample);

/// Bare HOM stage: one 50/50 splitter, detectors on both outputs, optional
/// sample on the undelayed input arm.
ModeNetwork build_hom_network(double tau1_ps, SamplePtr sample = nullptr);

/// Wires only: input i straight to detector i.
ModeNetwork build_wire_network();

struct TwoPhotonState {
  SpectralAmplitude spectrum;  // f(omega), pair created on input ports 0 and 1
};

/// Detection amplitude on the energy-anticorrelation manifold
/// omega_1 + omega_2 = 2 Omega0 of the 2-D frequency grid, sampled over the
/// detuning grid: A[k] = <0| b_x(W0 + w_k) b_y(W0 - w_k) |Psi>.
struct TwoPhotonAmplitude {
  std::vector<double> detunings_radps;
  std::vector<std::complex<double>> amplitude;
};

enum class OutputPort { D1, D2, Unused };

TwoPhotonAmplitude two_photon_amplitude(const ModeNetwork& net,
                                        const TwoPhotonState& state,
                                        const FrequencyGrid& grid,
                                        OutputPort x = OutputPort::D1,
                                        OutputPort y = OutputPort::D2);

/// R_c = sum over the manifold of |A_{D1,D2}|^2 x quadrature weight.
double coincidence_oracle(const ModeNetwork& net, const TwoPhotonState& state,
                          const FrequencyGrid& grid);

/// Rate into an arbitrary ordered output pair (bunched and unused-port events
/// included); summing over all ordered pairs of a lossless network is
/// tau1-independent.
double pair_rate(const ModeNetwork& net, const TwoPhotonState& state,
                 const FrequencyGrid& grid, OutputPort x, OutputPort y);

/// tau1-independent part of the coincidence rate: the sum of the two
/// pairing-path modulus-squared terms, with the interference cross term
/// dropped. Dividing coincidence_oracle by this is the oracle-side
/// baseline_one normalization.
double oracle_baseline(const ModeNetwork& net, const TwoPhotonState& state,
                       const FrequencyGrid& grid);

}  // namespace dsc

#endif
