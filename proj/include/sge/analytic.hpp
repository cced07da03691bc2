#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "sge/grid.hpp"
#include "sge/params.hpp"
#include "sge/state.hpp"

namespace sge {

// ---------------------------------------------------------------------------
// Derived kinematic quantities of the model.
//
// Width convention: a packet exp(-u^2/4 sigma^2) carries the complex width
// parameter w(t) = sigma^2 - i t hbar/m, so the position density has
// variance sigma^2 + t^2 hbar^2 / m^2 sigma^2.  The numerical propagator
// (oracle module) uses the matching dispersion; both layers describe the
// same kinematics.
// ---------------------------------------------------------------------------

/// tau = t hbar / m, the spread parameter at time t.
inline double spread_tau(const PhysParams& p, double t) { return t * p.hbar / p.mass; }

/// Density variance of a z packet at time t: sigma^2 + tau^2/sigma^2.
inline double z_variance(const PhysParams& p, double t) {
    const double tau = spread_tau(p, t);
    return p.sigma * p.sigma + tau * tau / (p.sigma * p.sigma);
}

/// Density variance of the x packet at time t: omega^2 + tau^2/omega^2.
inline double x_variance(const PhysParams& p, double t) {
    const double tau = spread_tau(p, t);
    return p.omega * p.omega + tau * tau / (p.omega * p.omega);
}

/// Magnet displacement at the magnet exit: coupling * t_e^2 / 2m.
inline double magnet_shift(const PhysParams& p, double coupling) {
    return coupling * p.t_e * p.t_e / (2.0 * p.mass);
}

/// Lobe center on the screen: magnet shift plus the drift of the momentum
/// kick coupling*t_e over the remaining flight time.
inline double lobe_center(const PhysParams& p, double coupling, bool with_drift = true) {
    double c = magnet_shift(p, coupling);
    if (with_drift) c += coupling * p.t_e * (p.t - p.t_i - p.t_e) / p.mass;
    return c;
}

/// Wavenumber of the erased-pattern fringes in z: Lambda = z0 tau / (sigma^2 s_t^2),
/// the relative-phase rate of the two slit packets at time t.
inline double fringe_wavenumber(const PhysParams& p, double t) {
    const double tau = spread_tau(p, t);
    const double D = p.sigma * p.sigma * p.sigma * p.sigma + tau * tau;
    return p.z0 * tau / D;
}

/// Closed-form fringe period 2 pi / Lambda = 2 pi m sigma^2 (sigma^2 +
/// t^2 hbar^2/m^2 sigma^2) / (z0 t hbar).
inline double fringe_period_formula(const PhysParams& p, double t) {
    return 2.0 * std::numbers::pi / fringe_wavenumber(p, t);
}

/// Oscillation envelope of the cross term: exp(-(z^2 + z0^2) / 2 s_t^2).
inline double fringe_envelope(const PhysParams& p, double t, double z) {
    return std::exp(-(z * z + p.z0 * p.z0) / (2.0 * z_variance(p, t)));
}

/// Cross term f(z) of the erased pattern: envelope times cos(Lambda z).
inline double fringe_cross_term(const PhysParams& p, double t, double z) {
    return fringe_envelope(p, t, z) * std::cos(fringe_wavenumber(p, t) * z);
}

// ---------------------------------------------------------------------------
// State construction and evolution
// ---------------------------------------------------------------------------

/// Entangled double-slit state right behind the slits:
///
///   Psi = A e^{-x^2/4 omega^2} ( |z;+> e^{-(z-z0)^2/4 sigma^2}
///                              + |z;-> e^{-(z+z0)^2/4 sigma^2} ),
///   A = 1/sqrt(4 pi sigma omega).
///
/// Stored as two unit-norm branches with coefficients 1/sqrt(2). Exact
/// normalization relies on negligible overlap of the slit packets; for
/// z0 < 3 sigma a warning is recorded.
inline SpinorState initial_state(const PhysParams& p, std::vector<std::string>* warnings = nullptr) {
    validate_params(p);
    if (p.z0 < 3.0 * p.sigma && warnings)
        warnings->push_back("initial_state: z0 < 3 sigma, slit packets overlap and the "
                            "analytic normalization degrades");

    ComplexGaussian xg;
    xg.cwidth = {p.omega * p.omega, 0.0};
    xg.amp = unit_norm_amp(xg.cwidth);

    ComplexGaussian upper, lower;
    upper.center = +p.z0;
    lower.center = -p.z0;
    upper.cwidth = lower.cwidth = {p.sigma * p.sigma, 0.0};
    upper.amp = lower.amp = unit_norm_amp(upper.cwidth);

    const cplx c = {1.0 / std::sqrt(2.0), 0.0};
    SpinorState s;
    s.basis = SpinBasis::z;
    s.branches = {
        {+1, c, xg, {{+1.0, upper}}},
        {-1, c, xg, {{+1.0, lower}}},
    };
    return s;
}

/// Free evolution of every packet in the state by dt.
inline SpinorState free_evolve(const SpinorState& s, const PhysParams& p, double dt) {
    if (dt < 0.0) throw std::invalid_argument("free_evolve: dt must be nonnegative");
    SpinorState out = s;
    for (auto& b : out.branches) {
        b.xpacket = free_evolved(b.xpacket, p, dt);
        for (auto& part : b.zparts) part.g = free_evolved(part.g, p, dt);
    }
    return out;
}

/// Rewrites a two-branch z-basis state in the x spin basis:
///
///   |z;+>psi_+ + |z;->psi_-  =  |x;+>(psi_+ + psi_-)/sqrt2 + |x;->(psi_+ - psi_-)/sqrt2
///
/// The x packets of both input branches must coincide (they do for every
/// state this module produces). Applying the rewrite twice returns the
/// original state.
inline SpinorState basis_rewrite_sx(const SpinorState& s) {
    if (s.basis != SpinBasis::z) throw std::invalid_argument("basis_rewrite_sx: state already in x basis");
    if (s.branches.size() != 2) throw std::invalid_argument("basis_rewrite_sx: need exactly two branches");
    const Branch* plus = nullptr;
    const Branch* minus = nullptr;
    for (const auto& b : s.branches) (b.spin_sign == +1 ? plus : minus) = &b;
    if (!plus || !minus) throw std::invalid_argument("basis_rewrite_sx: need one branch per spin sign");
    const cplx rel = minus->coeff / plus->coeff;
    if (std::abs(rel.imag()) > 1e-14 * std::abs(rel.real()))
        throw std::invalid_argument("basis_rewrite_sx: complex branch ratio unsupported");
    if (plus->xpacket.center != minus->xpacket.center || plus->xpacket.cwidth != minus->xpacket.cwidth ||
        plus->xpacket.kphase != minus->xpacket.kphase || plus->xpacket.amp != minus->xpacket.amp)
        throw std::invalid_argument("basis_rewrite_sx: branches with distinct x packets unsupported");

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    auto combine = [&](int sign_out, double lower_sign) {
        Branch b;
        b.spin_sign = sign_out;
        b.coeff = plus->coeff * inv_sqrt2;
        b.xpacket = plus->xpacket;
        b.zparts = plus->zparts;
        // the minus branch's relative weight folds into its zpart signs
        for (const auto& part : minus->zparts)
            b.zparts.push_back({lower_sign * part.sign * rel.real(), part.g});
        return b;
    };
    SpinorState out;
    out.basis = SpinBasis::x;
    out.branches = {combine(+1, +1.0), combine(-1, -1.0)};
    return out;
}

/// Inverse of basis_rewrite_sx (x basis back to z basis).
inline SpinorState basis_rewrite_sz(const SpinorState& s) {
    if (s.basis != SpinBasis::x) throw std::invalid_argument("basis_rewrite_sz: state not in x basis");
    if (s.branches.size() != 2) throw std::invalid_argument("basis_rewrite_sz: need exactly two branches");
    SpinorState flipped = s;
    flipped.basis = SpinBasis::z;  // same algebra, relabeled axes
    SpinorState out = basis_rewrite_sx(flipped);
    out.basis = SpinBasis::z;
    return out;
}

namespace detail {

/// Shared closed form for both magnet variants: branches diagonal in
/// `basis` acquire opposite x shifts and momentum kicks +-coupling*t_e,
/// with free z spreading throughout.
inline SpinorState magnet_state(const PhysParams& p, double coupling, SpinBasis basis,
                                bool with_drift) {
    const cplx wz = {p.sigma * p.sigma, 0.0};
    const cplx wx = {p.omega * p.omega, 0.0};
    const cplx i_tau = cplx(0.0, spread_tau(p, p.t));
    const cplx wz_t = wz - i_tau;
    const cplx wx_t = wx - i_tau;
    const double shift = lobe_center(p, coupling, with_drift);
    const double kick = coupling * p.t_e;

    ComplexGaussian upper, lower;
    upper.center = +p.z0;
    lower.center = -p.z0;
    upper.cwidth = lower.cwidth = wz_t;
    upper.amp = lower.amp = unit_norm_amp(wz) * std::sqrt(wz / wz_t);

    auto xpacket = [&](double sign) {
        ComplexGaussian g;
        g.center = sign * shift;
        g.cwidth = wx_t;
        g.kphase = sign * kick;
        g.amp = unit_norm_amp(wx) * std::sqrt(wx / wx_t);
        return g;
    };

    SpinorState out;
    out.basis = basis;
    if (basis == SpinBasis::x) {
        // erased state: each x branch holds the symmetric/antisymmetric slit pair
        out.branches = {
            {+1, {0.5, 0.0}, xpacket(+1.0), {{+1.0, upper}, {+1.0, lower}}},
            {-1, {0.5, 0.0}, xpacket(-1.0), {{+1.0, upper}, {-1.0, lower}}},
        };
    } else {
        // which-way state: the slit packets stay tied to their spin labels
        const cplx c = {1.0 / std::sqrt(2.0), 0.0};
        out.branches = {
            {+1, c, xpacket(+1.0), {{+1.0, upper}}},
            {-1, c, xpacket(-1.0), {{+1.0, lower}}},
        };
    }
    return out;
}

}  // namespace detail

/// State at the screen with the eraser magnet on.  x-basis branches sit at
/// +-lobe_center(p, beta) carrying momentum kicks +-beta t_e; the z structure
/// is the symmetric/antisymmetric slit combination spread to time t.  With
/// `with_drift` false the post-magnet drift is dropped and the lobes stay at
/// the magnet-exit shift +-beta t_e^2/2m (literal-formula regression mode).
inline SpinorState eraser_evolve(const PhysParams& p, bool with_drift = true) {
    validate_params(p, MagnetMode::eraser);
    return detail::magnet_state(p, p.beta, SpinBasis::x, with_drift);
}

/// State at the screen with the which-way magnet on: same x kinematics as
/// the eraser (coupling b0) but diagonal in the z spin basis, so each lobe
/// carries a single slit packet and no fringes.
inline SpinorState whichway_state(const PhysParams& p, bool with_drift = true) {
    validate_params(p, MagnetMode::whichway);
    return detail::magnet_state(p, p.b0, SpinBasis::z, with_drift);
}

// ---------------------------------------------------------------------------
// Screen densities, directly from the closed-form expressions (independent
// of the SpinorState evaluation path).
// ---------------------------------------------------------------------------

/// No-magnet screen density: separable x Gaussian times the two spread slit
/// humps, no cross term (the spin labels are orthogonal).
inline DensityField density_no_eraser(const PhysParams& p, const GridSpec& g) {
    validate_params(p);
    DensityField d = make_field(g);
    const double sz2 = z_variance(p, p.t);
    const double sx2 = x_variance(p, p.t);
    const double norm = 1.0 / (4.0 * std::numbers::pi * std::sqrt(sx2 * sz2));
    for (int j = 0; j < g.nz; ++j) {
        const double z = g.z(j);
        const double pz = std::exp(-(z - p.z0) * (z - p.z0) / (2.0 * sz2)) +
                          std::exp(-(z + p.z0) * (z + p.z0) / (2.0 * sz2));
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i);
            d.at(i, j) = norm * std::exp(-x * x / (2.0 * sx2)) * pz;
        }
    }
    return d;
}

/// Erased-pattern screen density:
///
///   rho = N [ g_+(x) {P_+ + P_- + 2 f} + g_-(x) {P_+ + P_- - 2 f} ]
///
/// with g_+- centered at +-lobe_center, P_+-(z) the spread slit humps and
/// f(z) the envelope-times-cosine cross term (fringe_cross_term).
inline DensityField density_eraser(const PhysParams& p, const GridSpec& g, bool with_drift = true) {
    validate_params(p, MagnetMode::eraser);
    DensityField d = make_field(g);
    const double sz2 = z_variance(p, p.t);
    const double sx2 = x_variance(p, p.t);
    const double c = lobe_center(p, p.beta, with_drift);
    const double norm = 1.0 / (8.0 * std::numbers::pi * std::sqrt(sx2 * sz2));
    for (int j = 0; j < g.nz; ++j) {
        const double z = g.z(j);
        const double pp = std::exp(-(z - p.z0) * (z - p.z0) / (2.0 * sz2));
        const double pm = std::exp(-(z + p.z0) * (z + p.z0) / (2.0 * sz2));
        const double f = fringe_cross_term(p, p.t, z);
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i);
            const double gp = std::exp(-(x - c) * (x - c) / (2.0 * sx2));
            const double gm = std::exp(-(x + c) * (x + c) / (2.0 * sx2));
            d.at(i, j) = norm * (gp * (pp + pm + 2.0 * f) + gm * (pp + pm - 2.0 * f));
        }
    }
    return d;
}

/// Which-way screen density: two lobes, each a single spread slit hump.
inline DensityField whichway_evolve(const PhysParams& p, const GridSpec& g, bool with_drift = true) {
    validate_params(p, MagnetMode::whichway);
    DensityField d = make_field(g);
    const double sz2 = z_variance(p, p.t);
    const double sx2 = x_variance(p, p.t);
    const double c = lobe_center(p, p.b0, with_drift);
    const double norm = 1.0 / (4.0 * std::numbers::pi * std::sqrt(sx2 * sz2));
    for (int j = 0; j < g.nz; ++j) {
        const double z = g.z(j);
        const double pp = std::exp(-(z - p.z0) * (z - p.z0) / (2.0 * sz2));
        const double pm = std::exp(-(z + p.z0) * (z + p.z0) / (2.0 * sz2));
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i);
            const double gp = std::exp(-(x - c) * (x - c) / (2.0 * sx2));
            const double gm = std::exp(-(x + c) * (x + c) / (2.0 * sx2));
            d.at(i, j) = norm * (gp * pp + gm * pm);
        }
    }
    return d;
}

}  // namespace sge
