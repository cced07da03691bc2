#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "sge/params.hpp"

namespace sge {

using cplx = std::complex<double>;

/// One 1D Gaussian packet
///
///     psi(u) = amp * exp(-(u - center)^2 / (4 cwidth)) * exp(i kphase u / hbar)
///
/// cwidth is the complex width parameter: real sigma^2 initially, picking up
/// an imaginary part -i t hbar / m under free flight (the library's width
/// convention; see free_evolved).  Re(cwidth) > 0 keeps the packet
/// normalizable.
struct ComplexGaussian {
    double center = 0.0;
    cplx cwidth = {1.0, 0.0};
    double kphase = 0.0;
    cplx amp = {1.0, 0.0};
};

inline cplx gaussian_eval(const ComplexGaussian& g, double u, double hbar = 1.0) {
    const double d = u - g.center;
    return g.amp * std::exp(-d * d / (4.0 * g.cwidth) + cplx(0.0, g.kphase * u / hbar));
}

/// Standard deviation of |psi|^2: for width parameter w the density is
/// a Gaussian of variance |w|^2 / Re(w).
inline double prob_width(const ComplexGaussian& g) {
    return std::sqrt(std::norm(g.cwidth) / g.cwidth.real());
}

/// Amplitude that makes the packet unit-norm: (2 pi v)^(-1/4) with
/// v = |w|^2/Re(w) the probability variance.
inline cplx unit_norm_amp(cplx cwidth) {
    const double v = std::norm(cwidth) / cwidth.real();
    return cplx(std::pow(2.0 * std::numbers::pi * v, -0.25), 0.0);
}

/// Free flight for dt under the model kinematics:
///   cwidth -> cwidth - i dt hbar / m         (width map)
///   center -> center + kphase dt / m         (carrier drift)
///   amp    -> amp * sqrt(cwidth_old / cwidth_new)   (keeps the norm)
/// Branch-global phases that cannot reach any density are not tracked.
inline ComplexGaussian free_evolved(const ComplexGaussian& g, const PhysParams& p, double dt) {
    if (dt < 0.0) throw std::invalid_argument("free_evolved: dt must be nonnegative");
    ComplexGaussian out = g;
    const cplx w_old = g.cwidth;
    out.cwidth = w_old - cplx(0.0, dt * p.hbar / p.mass);
    out.center = g.center + g.kphase * dt / p.mass;
    out.amp = g.amp * std::sqrt(w_old / out.cwidth);
    return out;
}

}  // namespace sge
