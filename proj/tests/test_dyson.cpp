// test_dyson.cpp — Dyson map parameters: ODE, closed forms, Ermakov-Pinney and the Hermitian counterpart

#include "tdpt/dyson.hpp"
#include "tdpt/errors.hpp"
#include "tdpt/numerics.hpp"

#include <doctest.h>

#include <cmath>

using namespace tdpt;

namespace {

const auto lam = TimeProfile::sinusoid(0.5, 0.3, 1.0, 0.0, 10.0);
const auto drive = TimeProfile::sinusoid(1.0, 0.2, 2.0, 0.0, 10.0);
const EPConstants ep(1.0, 0.4);

DysonParams closed(double t, double q1 = 0.0) {
    const auto g = gamma_closed_form(lam, ep, t);
    return {q1, q1, g.g3, g.g4};
}

DysonRates closed_rates(double t) {
    const auto r = gamma_closed_form_rates(lam, ep, t);
    return {0.0, 0.0, r.g3, r.g4};
}

} // namespace

TEST_CASE("constants") {
    CHECK_THROWS_AS(EPConstants(0.0, 1.0), ConstraintViolation);
    CHECK_THROWS_AS(EPConstants(0.0, -1.2), ConstraintViolation);
    CHECK(ep.kappa() == doctest::Approx(0.4 / std::sqrt(1 - 0.16)));
    const auto c = fit_constants(0.7, -0.3);
    const auto zero = TimeProfile::constant(0.0, 1.0);
    const auto g = gamma_closed_form(zero, c, 0.0);
    CHECK(g.g3 == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(g.g4 == doctest::Approx(-0.3).epsilon(1e-14));
}

TEST_CASE("ODE trivial cases") {
    const auto grid = num::linspace(0.0, 5.0, 11);
    const auto still = solve_gamma_ode(TimeProfile::constant(0.0, 5.0), 0.3, -0.2, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(still.g3[i] == doctest::Approx(0.3));
        CHECK(still.g4[i] == doctest::Approx(-0.2));
    }
    // g40 = 0 keeps g4 = 0 and g3 = g30 - Lambda
    const auto flat = solve_gamma_ode(lam, 0.4, 0.0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(std::abs(flat.g4[i]) < 1e-14);
        CHECK(std::abs(flat.g3[i] - (0.4 - lam.cumulative(grid[i]))) < 1e-8);
    }
}

TEST_CASE("ODE against the closed form and its conserved quantity") {
    const auto grid = num::linspace(0.0, 10.0, 200);
    const auto g0 = gamma_closed_form(lam, ep, 0.0);
    const auto ode = solve_gamma_ode(lam, g0.g3, g0.g4, grid);
    const auto cf = closed_form_trajectory(lam, ep, grid);
    double worst = 0.0, drift = 0.0;
    const double k0 = std::sinh(g0.g4) * std::cosh(g0.g3);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        worst = std::max({worst, std::abs(ode.g3[i] - cf.g3[i]), std::abs(ode.g4[i] - cf.g4[i])});
        drift = std::max(drift, std::abs(std::sinh(ode.g4[i]) * std::cosh(ode.g3[i]) - k0));
    }
    CHECK(worst < 1e-6);
    CHECK(drift < 1e-8);
    CHECK(ode.method == GammaMethod::ode);
    CHECK(cf.method == GammaMethod::closed_form);
}

TEST_CASE("closed forms") {
    // q3 = 0: g4 = 0, g3 = q2 - Lambda
    const EPConstants flat(0.8, 0.0);
    for (double t : {0.0, 2.0, 7.5}) {
        const auto g = gamma_closed_form(lam, flat, t);
        CHECK(g.g4 == 0.0);
        CHECK(g.g3 == doctest::Approx(0.8 - lam.cumulative(t)).epsilon(1e-14));
    }
    // t = 0, q2 = 0: g3 = 0, g4 = arctanh(q3)
    const auto g = gamma_closed_form(lam, EPConstants(0.0, 0.4), 0.0);
    CHECK(std::abs(g.g3) < 1e-15);
    CHECK(g.g4 == doctest::Approx(std::atanh(0.4)).epsilon(1e-14));
    // alternative transcendental forms agree
    for (double t : num::linspace(0.0, 10.0, 41)) {
        const auto c = gamma_closed_form(lam, ep, t);
        CHECK(std::abs(gamma3_tanh_form(lam, ep, t) - c.g3) < 1e-12);
        CHECK(std::abs(gamma4_coth_form(lam, ep, t) - c.g4) < 1e-12);
    }
    CHECK_THROWS_AS(gamma4_coth_form(lam, flat, 1.0), SingularPoint);
}

TEST_CASE("closed form satisfies the constraint equations") {
    const num::Interval dom{0.0, 10.0};
    for (double t : num::linspace(0.0, 10.0, 37)) {
        const auto g = gamma_closed_form(lam, ep, t);
        const auto r = gamma_closed_form_rates(lam, ep, t);
        const double l = lam(t);
        CHECK(std::abs(r.g3 + l * std::cosh(g.g4)) < 1e-12);
        CHECK(std::abs(r.g4 - l * std::tanh(g.g3) * std::sinh(g.g4)) < 1e-12);
        // analytic rates against finite differences
        const double d3 = num::derivative([&](double s) { return gamma_closed_form(lam, ep, s).g3; }, t, 1e-3, dom);
        const double d4 = num::derivative([&](double s) { return gamma_closed_form(lam, ep, s).g4; }, t, 1e-3, dom);
        CHECK(std::abs(d3 - r.g3) < 1e-8);
        CHECK(std::abs(d4 - r.g4) < 1e-8);
    }
}

TEST_CASE("dissipative Ermakov-Pinney equation") {
    // q3 = 0: chi = cosh(q2 - Lambda) with kappa = 0
    const EPConstants flat(0.8, 0.0);
    auto c0 = [&](double t) { return std::cosh(0.8 - lam.cumulative(t)); };
    for (double t : {0.5, 3.0, 9.0}) CHECK(ep_dissipative_residual(c0, lam, 0.0, t) < 1e-8);
    // closed form, analytic and finite-difference derivatives
    auto chi = [&](double t) { return chi_closed_form(lam, ep, t).chi; };
    for (double t : num::linspace(0.0, 10.0, 50)) {
        CHECK(ep_dissipative_residual(ep, lam, t) < 1e-8);
        CHECK(ep_dissipative_residual(chi, lam, ep.kappa(), t) < 1e-7);
        // chi is cosh g3 of the closed form
        CHECK(chi(t) == doctest::Approx(std::cosh(gamma_closed_form(lam, ep, t).g3)).epsilon(1e-13));
    }
    // negative control: another function fails clearly
    auto wrong = [&](double t) { return 1.0 + 0.1 * t; };
    CHECK(ep_dissipative_residual(wrong, lam, ep.kappa(), 2.0) > 1e-3);
    // along an ODE trajectory
    const auto grid = num::linspace(0.0, 10.0, 30);
    const auto ode = solve_gamma_ode(lam, 0.6, 0.35, grid);
    const double kappa = std::sinh(0.35) * std::cosh(0.6);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(ep_dissipative_residual_state(ode.g3[i], ode.g4[i], lam, kappa, grid[i]) < 1e-7);
    // singular where lambda vanishes
    const auto vanishing = TimeProfile::sinusoid(0.0, 1.0, 1.0, 0.0, 10.0);
    CHECK_THROWS_AS(ep_dissipative_residual(c0, vanishing, 0.0, 0.0), SingularPoint);
    CHECK_THROWS_AS(ep_dissipative_residual(flat, vanishing, 0.0), SingularPoint);
}

TEST_CASE("Hermitian counterpart and energy operator") {
    const auto h0 = hermitian_counterpart(1.3, 0.0, 0.4, 0.2);
    CHECK(h0[0] == cplx(1.3));
    CHECK(h0[1] == cplx(1.3));
    const auto h1 = hermitian_counterpart(1.3, 0.5, 0.4, 0.0);
    CHECK(std::abs(h1[0] - 1.3) < 1e-15);
    for (double t : {0.0, 3.1, 8.8}) {
        const DysonParams p = closed(t);
        const auto H = non_hermitian_hamiltonian(drive(t), lam(t));
        const auto h = hermitian_counterpart(drive(t), lam(t), p.g3, p.g4);
        const auto viaConj = conjugate(p, H) + time_term(p, closed_rates(t));
        CHECK((h - viaConj).norm() < 1e-12);
        CHECK(h.max_imag() < 1e-12);
        CHECK(std::abs(h[2]) + std::abs(h[3]) < 1e-12);
        const auto Ht = energy_operator(drive(t), lam(t), p.g3, p.g4);
        CHECK((Ht - conjugate_inverse(p, h)).norm() < 1e-12);
    }
    CHECK(energy_operator(1.0, 0.0, 0.0, 0.0).is_hermitian());
}

TEST_CASE("Dyson residual") {
    const auto zero = TimeProfile::constant(0.0, 10.0);
    CHECK(dyson_residual(drive, zero, {0.0, 0.0, 0.3, 0.0}, {}, 1.0) < 1e-15);
    double worst = 0.0, worst_q1 = 0.0;
    for (double t : num::linspace(0.0, 10.0, 200)) {
        worst = std::max(worst, dyson_residual(drive, lam, closed(t), closed_rates(t), t));
        // q1 drops out
        worst_q1 = std::max(worst_q1, dyson_residual(drive, lam, closed(t, 0.7), closed_rates(t), t));
    }
    CHECK(worst < 1e-8);
    CHECK(worst_q1 < 1e-8);
    // perturbed g3 fails
    DysonParams p = closed(2.0);
    p.g3 += 0.1;
    CHECK(dyson_residual(drive, lam, p, closed_rates(2.0), 2.0) > 1e-3);
    // ODE parameters with rates from the right-hand side
    const auto grid = num::linspace(0.0, 10.0, 40);
    const auto ode = solve_gamma_ode(lam, -0.2, 0.5, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double l = lam(grid[i]);
        const DysonRates r{0.0, 0.0, -l * std::cosh(ode.g4[i]), l * std::tanh(ode.g3[i]) * std::sinh(ode.g4[i])};
        CHECK(dyson_residual(drive, lam, {0.0, 0.0, ode.g3[i], ode.g4[i]}, r, grid[i]) < 1e-8);
    }
}

TEST_CASE("integration failure is reported with the time reached") {
    const auto blowup = TimeProfile::exponential(0.0, 1.0, 400.0, 10.0);
    CHECK_THROWS_AS(solve_gamma_ode(blowup, 0.5, 0.5, num::linspace(0.0, 10.0, 5)), IntegrationFailure);
}
