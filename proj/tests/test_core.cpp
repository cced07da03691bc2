#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "sge/analytic.hpp"
#include "sge/gaussian.hpp"
#include "sge/grid.hpp"
#include "sge/params.hpp"
#include "sge/state.hpp"

using namespace sge;
using Catch::Approx;

TEST_CASE("validate_params accepts a consistent set", "[core]") {
    PhysParams p;
    p.sigma = 1; p.omega = 1; p.z0 = 4; p.beta = 0.5;
    p.t_i = 1; p.t_e = 1; p.t = 10;
    REQUIRE_NOTHROW(validate_params(p, MagnetMode::eraser));
    // idempotent: validating the returned value changes nothing
    const PhysParams q = validate_params(p);
    REQUIRE(validate_params(q).sigma == q.sigma);
    REQUIRE(validate_params(q).t == q.t);
}

TEST_CASE("validate_params reports the violated invariant by name", "[core]") {
    PhysParams p;
    p.sigma = 0.0;
    REQUIRE_THROWS_WITH(validate_params(p), "sigma must be positive");

    PhysParams q;
    q.t = 1; q.t_i = 1; q.t_e = 1;
    REQUIRE_THROWS_WITH(validate_params(q, MagnetMode::eraser), "t < t_i + t_e");
    // without an active magnet the same timings are fine
    REQUIRE_NOTHROW(validate_params(q, MagnetMode::none));

    PhysParams r;
    r.beta = -0.1;
    REQUIRE_THROWS_WITH(validate_params(r), "beta must be nonnegative");
}

TEST_CASE("gaussian_eval at the peak and one width out", "[core]") {
    ComplexGaussian g;  // center 0, cwidth 1, kphase 0, amp 1
    REQUIRE(gaussian_eval(g, 0.0) == cplx{1.0, 0.0});
    const cplx v = gaussian_eval(g, 2.0);  // exponent -4/4 = -1
    REQUIRE(v.real() == Approx(std::exp(-1.0)).epsilon(1e-14));
    REQUIRE(v.imag() == Approx(0.0).margin(1e-16));
}

TEST_CASE("gaussian_eval with a complex width parameter", "[core]") {
    // cwidth = 1 - i (a sigma^2 = 1 packet after t = 1 of free flight at
    // hbar = m = 1); at u = 2 the exponent is -4/(4(1-i)) = -(1+i)/2.
    ComplexGaussian g;
    g.cwidth = {1.0, -1.0};
    const cplx expect = std::exp(cplx(-0.5, -0.5));
    const cplx v = gaussian_eval(g, 2.0);
    REQUIRE(std::abs(v - expect) < 1e-15);
    REQUIRE(std::abs(v) == Approx(std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("gaussian magnitude is symmetric about the center", "[core]") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uc(-5.0, 5.0), uw(0.2, 4.0), uk(-3.0, 3.0), ud(0.0, 8.0);
    for (int trial = 0; trial < 200; ++trial) {
        ComplexGaussian g;
        g.center = uc(rng);
        g.cwidth = {uw(rng), uc(rng)};
        g.kphase = uk(rng);
        const double d = ud(rng);
        const double lhs = std::abs(gaussian_eval(g, g.center + d));
        const double rhs = std::abs(gaussian_eval(g, g.center - d));
        REQUIRE(lhs == Approx(rhs).epsilon(1e-12).margin(1e-300));
    }
}

TEST_CASE("free_evolved maps the width and keeps the norm factor", "[core]") {
    PhysParams p;
    ComplexGaussian g;
    g.cwidth = {p.sigma * p.sigma, 0.0};
    g.amp = unit_norm_amp(g.cwidth);
    auto h = free_evolved(g, p, 3.0);
    REQUIRE(h.cwidth == cplx{1.0, -3.0});
    REQUIRE(prob_width(h) == Approx(std::sqrt(1.0 + 9.0)).epsilon(1e-14));
    // kphase packets drift at kphase/m
    g.kphase = 2.0;
    auto k = free_evolved(g, p, 5.0);
    REQUIRE(k.center == Approx(10.0).epsilon(1e-14));
}

TEST_CASE("grid invariants and trapezoid integration", "[core]") {
    GridSpec g;
    g.x_min = -1; g.x_max = 1; g.nx = 3;
    g.z_min = 0; g.z_max = 2; g.nz = 5;
    REQUIRE(g.dx() == Approx(1.0));
    REQUIRE(g.dz() == Approx(0.5));
    GridSpec bad = g;
    bad.nx = 1;
    REQUIRE_THROWS(validate_grid(bad));
    bad = g;
    bad.x_max = -2;
    REQUIRE_THROWS(validate_grid(bad));

    // integral of a constant over the box equals the box area
    DensityField d = make_field(g);
    for (auto& v : d.values) v = 3.0;
    REQUIRE(integrate(d) == Approx(3.0 * 2.0 * 2.0).epsilon(1e-14));
}

TEST_CASE("density field of the initial state is nonnegative and unit mass", "[core]") {
    PhysParams p;
    auto s = initial_state(p);
    GridSpec g;
    g.x_min = -30; g.x_max = 30; g.nx = 301;
    g.z_min = -12; g.z_max = 12; g.nz = 301;
    auto d = evaluate_state(s, g, p.hbar);
    for (double v : d.values) REQUIRE(v >= 0.0);
    REQUIRE(integrate(d) == Approx(1.0).margin(1e-9));
}

TEST_CASE("state norm is one for every state this library produces", "[core]") {
    PhysParams p;
    GridSpec g;
    g.x_min = -120; g.x_max = 120; g.nx = 601;
    g.z_min = -150; g.z_max = 150; g.nz = 601;

    REQUIRE(state_norm(initial_state(p), g, p.hbar) == Approx(1.0).margin(1e-9));
    REQUIRE(state_norm(free_evolve(initial_state(p), p, p.t), g, p.hbar) == Approx(1.0).margin(1e-9));
    REQUIRE(state_norm(basis_rewrite_sx(initial_state(p)), g, p.hbar) == Approx(1.0).margin(1e-9));
    REQUIRE(state_norm(eraser_evolve(p), g, p.hbar) == Approx(1.0).margin(1e-9));
    REQUIRE(state_norm(whichway_state(p), g, p.hbar) == Approx(1.0).margin(1e-9));
}

TEST_CASE("duplicate spin branches are rejected", "[core]") {
    PhysParams p;
    auto s = initial_state(p);
    s.branches[1].spin_sign = +1;
    REQUIRE_THROWS(check_state(s));
}
