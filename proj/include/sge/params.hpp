#pragma once

#include <stdexcept>
#include <string>

namespace sge {

/// Which magnet (if any) acts on the beam between the slits and the screen.
enum class MagnetMode { none, eraser, whichway };

/// Physical constants and timings of one run, in natural units (hbar = m = 1
/// by default; every quantity is a dimensionless multiple).
///
///   sigma  - initial z packet width (slit packets are exp(-(z -+ z0)^2/4 sigma^2))
///   omega  - initial x packet width
///   z0     - half the slit separation; slits sit at z = +-z0
///   beta   - eraser-magnet field gradient (force per spin unit along x)
///   b0     - which-way-magnet field gradient (only used in whichway mode)
///   t_i    - time from the slits to the magnet entry
///   t_e    - time spent inside the magnet
///   t      - total time from the slits to the screen
///
/// Defaults are a desk-scale set chosen so that the z packets overlap
/// strongly at the screen (t*hbar/m/sigma^2 = 20 >> z0) while the magnet
/// kick separates the x lobes cleanly: lobe centers +-(beta*t_e^2/2m +
/// beta*t_e*(t-t_i-t_e)/m) = +-34 against an evolved x width of
/// sqrt(omega^2 + t^2 hbar^2/m^2 omega^2) = 6.4.
struct PhysParams {
    double mass = 1.0;
    double hbar = 1.0;
    double sigma = 1.0;
    double omega = 4.0;
    double z0 = 4.0;
    double beta = 1.0;
    double t_i = 2.0;
    double t_e = 2.0;
    double t = 20.0;
    double b0 = 1.0;
};

/// Checks every PhysParams invariant and returns the params unchanged.
/// The first violated invariant is reported by name. `t >= t_i + t_e` is
/// required only when a magnet is active.
inline PhysParams validate_params(const PhysParams& p, MagnetMode mode = MagnetMode::none) {
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (!(p.mass > 0.0)) fail("mass must be positive");
    if (!(p.hbar > 0.0)) fail("hbar must be positive");
    if (!(p.sigma > 0.0)) fail("sigma must be positive");
    if (!(p.omega > 0.0)) fail("omega must be positive");
    if (!(p.z0 >= 0.0)) fail("z0 must be nonnegative");
    if (!(p.t >= 0.0)) fail("t must be nonnegative");
    if (!(p.beta >= 0.0)) fail("beta must be nonnegative");
    if (!(p.b0 >= 0.0)) fail("b0 must be nonnegative");
    if (!(p.t_i >= 0.0)) fail("t_i must be nonnegative");
    if (!(p.t_e >= 0.0)) fail("t_e must be nonnegative");
    if (mode != MagnetMode::none && !(p.t >= p.t_i + p.t_e)) fail("t < t_i + t_e");
    return p;
}

}  // namespace sge
