#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <memory>
#include <random>

#include "dsc/dispersion.hpp"
#include "dsc/errors.hpp"
#include "dsc/spectrum.hpp"
#include "dsc/units.hpp"

using namespace dsc;

namespace {

const double kW0 = make_gaussian(800e-9, 100e-9).center_radps();

Material vacuum_material() {
  Material m;
  m.id = "vacuum_test";
  m.sellmeier_b = {0.0};
  m.sellmeier_c_um2 = {0.0};
  m.lambda_min_um = 0.05;
  m.lambda_max_um = 100.0;
  return m;
}

const MaterialsDb& materials() {
  static MaterialsDb db =
      MaterialsDb::load(std::string(DSC_SOURCE_DIR) + "/data/materials.json");
  return db;
}

// Test-local derivative oracle, independent of fit_taylor's stencils: plain
// central differences on a different step pair, one Richardson level.
double deriv_oracle(const PhaseFunction& pf, double w0, int k, double h) {
  const auto d = [&](double hh) {
    switch (k) {
      case 1:
        return (pf.phase(w0 + hh) - pf.phase(w0 - hh)) / (2 * hh);
      case 2:
        return (pf.phase(w0 + hh) - 2 * pf.phase(w0) + pf.phase(w0 - hh)) /
               (hh * hh);
      case 3:
        return (pf.phase(w0 + 2 * hh) - 2 * pf.phase(w0 + hh) +
                2 * pf.phase(w0 - hh) - pf.phase(w0 - 2 * hh)) /
               (2 * hh * hh * hh);
      default:
        return pf.phase(w0);
    }
  };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

}  // namespace

TEST_CASE("taylor_phase evaluates the expansion directly") {
  SUBCASE("zero polynomial") {
    const TaylorPhase tp(kW0, {0.0, 0.0, 0.0});
    for (double w : {-300.0, 0.0, 123.0}) CHECK(tp.phase(kW0 + w) == 0.0);
  }
  SUBCASE("linear term: c1 = 1 ps at detuning 2 rad/ps") {
    const TaylorPhase tp(kW0, {0.0, 1.0});
    CHECK(tp.phase(kW0 + 2.0) == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("quadratic term: c2 = 0.5 ps^2 at detuning 2 rad/ps") {
    const TaylorPhase tp(kW0, {0.0, 0.0, 0.5});
    CHECK(tp.phase(kW0 + 2.0) == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("construction invariants") {
    CHECK_THROWS_AS(TaylorPhase(kW0, {}), std::invalid_argument);
    CHECK_THROWS_AS(TaylorPhase(kW0, {0.0, std::nan("")}), std::invalid_argument);
  }
}

TEST_CASE("slab_phase basics") {
  SUBCASE("zero thickness") {
    const SlabPhase slab(materials().find("znse"), 0.0);
    for (double w : {kW0, kW0 + 200.0}) CHECK(slab.phase(w) == 0.0);
  }
  SUBCASE("vacuum model: phi = w L / c") {
    const SlabPhase slab(vacuum_material(), 3.0);
    const double expected = kW0 * 3.0 / units::speed_of_light_mm_per_ps;
    CHECK(slab.phase(kW0) == doctest::Approx(expected).epsilon(1e-14));
  }
  SUBCASE("ZnSe golden values, 3 mm at 800 nm") {
    const Material& znse = materials().find("znse");
    CHECK(znse.refractive_index(0.8) == doctest::Approx(2.523731697).epsilon(1e-9));
    CHECK(znse.refractive_index(0.633) == doctest::Approx(2.5906).epsilon(1e-4));
    const SlabPhase slab(znse, 3.0);
    CHECK(slab.phase(kW0) == doctest::Approx(59464.0271957).epsilon(1e-11));
  }
  SUBCASE("out-of-validity names the material and bounds") {
    const SlabPhase slab(materials().find("znse"), 3.0);
    const double w_uv = units::angular_wavenumber_um_radps / 0.3;  // 300 nm
    try {
      slab.phase(w_uv);
      FAIL("expected out_of_range");
    } catch (const std::out_of_range& e) {
      const std::string msg = e.what();
      CHECK(msg.find("znse") != std::string::npos);
      CHECK(msg.find("0.55") != std::string::npos);
    }
  }
}

TEST_CASE("materials database lookups") {
  CHECK(materials().entries().size() == 3);
  CHECK(materials().find("zn se").id == "znse");  // id style per CLI contract
  CHECK(materials().find("ZnSe").id == "znse");
  CHECK_THROWS_AS(materials().find("unobtainium"), material_not_found);
  try {
    materials().find("unobtainium");
  } catch (const material_not_found& e) {
    CHECK(std::string(e.what()).find("unobtainium") != std::string::npos);
    CHECK(std::string(e.what()).find("materials.json") != std::string::npos);
  }
  for (const auto& m : materials().entries()) {
    for (int i = 0; i <= 20; ++i) {
      const double l = m.lambda_min_um +
                       (m.lambda_max_um - m.lambda_min_um) * i / 20.0;
      CHECK(m.refractive_index(l) >= 1.0);
    }
    CHECK_FALSE(m.source.empty());
  }
}

TEST_CASE("fit_taylor round-trips polynomials to 1e-6 relative") {
  // Stencil roundoff at the pinned step h = 1e-4 W0 floors the k = 5 estimate
  // near 1e-7 absolute, so the relative claim applies to coefficients above
  // that floor; the abs term below encodes it.
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> draw(-1.0, 1.0);
  const double scale[6] = {3.0, 8.0, 0.5, 0.05, 0.2, 0.5};
  for (int trial = 0; trial < 8; ++trial) {
    const int order = 3 + (trial % 3);  // 3, 4, 5
    std::vector<double> coeffs(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) coeffs[k] = scale[k] * draw(rng);
    const TaylorPhase truth(kW0, coeffs);
    const TaylorFit fit = fit_taylor(truth, kW0, order, 300.0);
    for (int k = 0; k <= order; ++k) {
      const double got = fit.taylor.coefficients()[k];
      const double tol = std::max(1e-6 * std::abs(coeffs[k]), 5e-7 * scale[k]);
      CHECK(std::abs(got - coeffs[k]) <= tol);
    }
  }
}

TEST_CASE("fit_taylor on a vacuum slab recovers the linear phase") {
  const SlabPhase slab(vacuum_material(), 3.0);
  const TaylorFit fit = fit_taylor(slab, kW0, 3, 300.0);
  const double l_over_c = 3.0 / units::speed_of_light_mm_per_ps;
  CHECK(fit.taylor.coefficients()[0] ==
        doctest::Approx(kW0 * l_over_c).epsilon(1e-10));
  CHECK(fit.taylor.coefficients()[1] == doctest::Approx(l_over_c).epsilon(1e-8));
  // physical zeros, measured at the roundoff floor of |phi| ~ 2.4e4 rad
  CHECK(std::abs(fit.taylor.coefficients()[2]) < 1e-7);
  CHECK(std::abs(fit.taylor.coefficients()[3]) < 1e-7);
}

TEST_CASE("fit_taylor ZnSe golden coefficients") {
  const SlabPhase slab(materials().find("znse"), 3.0);
  const double window = 3.0 * make_gaussian(800e-9, 100e-9).rms_bandwidth_radps();
  const TaylorFit fit = fit_taylor(slab, kW0, 3, window);
  const auto& c = fit.taylor.coefficients();
  CHECK(c[0] == doctest::Approx(59464.0271957).epsilon(1e-11));
  CHECK(c[1] == doctest::Approx(27.2913439922).epsilon(1e-9));   // group delay
  CHECK(c[2] == doctest::Approx(1.54472951857e-3).epsilon(1e-6));
  CHECK(c[3] == doctest::Approx(4.58605232983e-7).epsilon(1e-3));

  // independent stencil agrees
  CHECK(deriv_oracle(slab, kW0, 1, 0.4) == doctest::Approx(c[1]).epsilon(1e-7));
  CHECK(deriv_oracle(slab, kW0, 2, 0.4) ==
        doctest::Approx(2.0 * c[2]).epsilon(1e-4));

  // residual bound holds where it was measured
  CHECK(fit.max_residual_rad < 3.0);  // measured 2.755 over +-3 sigma
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> draw(-window, window);
  for (int i = 0; i < 50; ++i) {
    const double w = kW0 + draw(rng);
    CHECK(std::abs(slab.phase(w) - fit.taylor.phase(w)) <=
          fit.max_residual_rad * (1.0 + 1e-12));
  }
}

TEST_CASE("fit_taylor error paths") {
  const TaylorPhase tp(kW0, {1.0});
  CHECK_THROWS_AS(fit_taylor(tp, kW0, 6, 100.0), std::invalid_argument);
  CHECK_THROWS_AS(fit_taylor(tp, kW0, -1, 100.0), std::invalid_argument);
  struct Bad : PhaseFunction {
    double phase(double) const override { return std::nan(""); }
  } bad;
  CHECK_THROWS_AS(fit_taylor(bad, kW0, 2, 100.0), numerical_failure);
}

TEST_CASE("even/odd split parity is exact by construction") {
  const SlabPhase slab(materials().find("znse"), 3.0);
  const TaylorPhase poly(kW0, {0.7, -2.0, 0.3, 0.004});
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> draw(0.0, 350.0);
  for (const PhaseFunction* pf :
       {static_cast<const PhaseFunction*>(&slab),
        static_cast<const PhaseFunction*>(&poly)}) {
    for (int i = 0; i < 100; ++i) {
      const double w = draw(rng);
      const EvenOddSplit a = even_odd_split(*pf, kW0, w);
      const EvenOddSplit b = even_odd_split(*pf, kW0, -w);
      CHECK(a.even_sum_rad == b.even_sum_rad);
      CHECK(a.odd_diff_rad == -b.odd_diff_rad);
    }
  }
}

TEST_CASE("even/odd split isolates parities of pure Taylor terms") {
  SUBCASE("pure c2: odd part vanishes") {
    const TaylorPhase tp(kW0, {0.0, 0.0, 0.5});
    for (double w : {10.0, 55.5, 200.0})
      CHECK(even_odd_split(tp, kW0, w).odd_diff_rad == 0.0);
  }
  SUBCASE("pure c1: even part vanishes, odd part is 2 c1 w") {
    const TaylorPhase tp(kW0, {0.0, 1.5});
    for (double w : {10.0, 55.5, 200.0}) {
      const EvenOddSplit s = even_odd_split(tp, kW0, w);
      CHECK(s.even_sum_rad == 0.0);
      CHECK(s.odd_diff_rad == doctest::Approx(3.0 * w).epsilon(1e-13));
    }
  }
}

TEST_CASE("even/odd split of the ZnSe slab at 0.1 rad/fs (golden)") {
  const SlabPhase slab(materials().find("znse"), 3.0);
  const EvenOddSplit s = even_odd_split(slab, kW0, 100.0);
  CHECK(s.even_sum_rad == doctest::Approx(118958.973296).epsilon(1e-11));
  CHECK(s.odd_diff_rad == doctest::Approx(5459.16270346).epsilon(1e-11));
}

TEST_CASE("taylor fit of the slab matches slab_phase within its residual") {
  const SlabPhase slab(materials().find("znse"), 3.0);
  const TaylorFit fit = fit_taylor(slab, kW0, 3, 250.0);
  for (int i = 0; i <= 100; ++i) {
    const double w = kW0 + 250.0 * (2.0 * i / 100.0 - 1.0);
    CHECK(std::abs(slab.phase(w) - fit.taylor.phase(w)) <=
          fit.max_residual_rad * (1.0 + 1e-12));
  }
}
