#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "sge/gaussian.hpp"
#include "sge/grid.hpp"

namespace sge {

enum class SpinBasis { z, x };

/// Signed member of a branch's z superposition.
struct ZPart {
    double sign = 1.0;  // +1 or -1
    ComplexGaussian g;
};

/// One spin component: coeff * xpacket(x) * sum_j sign_j zpart_j(z),
/// attached to the +1 or -1 eigenstate of the declared spin axis.
struct Branch {
    int spin_sign = +1;
    cplx coeff = {1.0, 0.0};
    ComplexGaussian xpacket;
    std::vector<ZPart> zparts;
};

/// Analytic two-component state. Branches with distinct spin signs are
/// orthogonal, so the position density is the sum of per-branch |.|^2.
/// Immutable by convention: evolution operations return new states.
struct SpinorState {
    SpinBasis basis = SpinBasis::z;
    std::vector<Branch> branches;
};

inline const SpinorState& check_state(const SpinorState& s) {
    bool seen_plus = false, seen_minus = false;
    for (const auto& b : s.branches) {
        if (b.spin_sign == +1) {
            if (seen_plus) throw std::invalid_argument("state: duplicate +1 branch");
            seen_plus = true;
        } else if (b.spin_sign == -1) {
            if (seen_minus) throw std::invalid_argument("state: duplicate -1 branch");
            seen_minus = true;
        } else {
            throw std::invalid_argument("state: spin sign must be +1 or -1");
        }
    }
    return s;
}

/// Complex amplitude of one branch at a point.
inline cplx branch_amplitude(const Branch& b, double x, double z, double hbar = 1.0) {
    cplx zsum = 0.0;
    for (const auto& part : b.zparts) zsum += part.sign * gaussian_eval(part.g, z, hbar);
    return b.coeff * gaussian_eval(b.xpacket, x, hbar) * zsum;
}

/// Total position density at a point.
inline double state_density(const SpinorState& s, double x, double z, double hbar = 1.0) {
    double rho = 0.0;
    for (const auto& b : s.branches) rho += std::norm(branch_amplitude(b, x, z, hbar));
    return rho;
}

/// |Psi|^2 sampled on a grid. Branch amplitudes are separable, so the x and
/// z factors are evaluated once per row/column.
inline DensityField evaluate_state(const SpinorState& s, const GridSpec& g, double hbar = 1.0) {
    DensityField d = make_field(g);
    std::vector<cplx> xf(g.nx), zf(g.nz);
    for (const auto& b : s.branches) {
        for (int i = 0; i < g.nx; ++i) xf[i] = b.coeff * gaussian_eval(b.xpacket, g.x(i), hbar);
        for (int j = 0; j < g.nz; ++j) {
            cplx zsum = 0.0;
            for (const auto& part : b.zparts) zsum += part.sign * gaussian_eval(part.g, g.z(j), hbar);
            zf[j] = zsum;
        }
        for (int j = 0; j < g.nz; ++j)
            for (int i = 0; i < g.nx; ++i) d.at(i, j) += std::norm(xf[i] * zf[j]);
    }
    return d;
}

/// Grid-quadrature norm of the state over the given box.
inline double state_norm(const SpinorState& s, const GridSpec& g, double hbar = 1.0) {
    return integrate(evaluate_state(s, g, hbar));
}

}  // namespace sge
