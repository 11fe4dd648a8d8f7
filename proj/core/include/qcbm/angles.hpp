#pragma once

#include <cmath>
#include <numbers>

namespace qcbm {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduces an angle to its principal value in [0, 2pi).
inline double principal_angle(double theta) {
    double r = std::fmod(theta, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0; // fmod can round up to 2pi
    return r;
}

/// Signed length of the minor arc from `from` to `to` on the unit circle:
/// the unique d in (-pi, pi] with from + d = to (mod 2pi). A separation of
/// exactly pi resolves to +pi.
inline double angular_displacement(double from, double to) {
    double d = principal_angle(to - from);
    return d <= std::numbers::pi ? d : d - two_pi;
}

} // namespace qcbm
