#ifndef DSC_UNITS_HPP
#define DSC_UNITS_HPP

#include <numbers>

// Internal unit system: delays in ps, angular frequencies/detunings in rad/ps,
// wavelengths in um (materials) or m (public constructors), lengths in mm.
// Keeps every exponent O(1); conversions happen at construction boundaries.
namespace dsc::units {

inline constexpr double speed_of_light_m_per_s = 299792458.0;
inline constexpr double speed_of_light_um_per_ps = 299.792458;
inline constexpr double speed_of_light_mm_per_ps = 0.299792458;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// 2*pi*c in um*rad/ps; omega[rad/ps] = this / lambda[um]
inline constexpr double angular_wavenumber_um_radps =
    two_pi * speed_of_light_um_per_ps;

inline constexpr double radps_from_wavelength_m(double lambda_m) {
  return angular_wavenumber_um_radps / (lambda_m * 1.0e6);
}

inline constexpr double wavelength_um_from_radps(double omega_radps) {
  return angular_wavenumber_um_radps / omega_radps;
}

inline constexpr double ps_from_s(double t_s) { return t_s * 1.0e12; }
inline constexpr double s_from_ps(double t_ps) { return t_ps * 1.0e-12; }

}  // namespace dsc::units

#endif
