// dyson.cpp — Direct and closed-form Dyson map parameters

#include "tdpt/dyson.hpp"

#include "tdpt/errors.hpp"
#include "tdpt/numerics.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <sstream>

namespace tdpt {

namespace odeint = boost::numeric::odeint;

EPConstants::EPConstants(double q2, double q3) : q2_(q2), q3_(q3) {
    if (!std::isfinite(q2) || !std::isfinite(q3))
        throw ConstraintViolation("EPConstants: q2 and q3 must be finite");
    if (!(std::abs(q3) < 1.0)) {
        std::ostringstream os;
        os << "EPConstants: |q3| < 1 required for a Hermitian h(t), got q3 = " << q3;
        throw ConstraintViolation(os.str());
    }
    kappa_ = q3 / std::sqrt(1.0 - q3 * q3);
}

GammaTrajectory solve_gamma_ode(const TimeProfile& lambda, double g30, double g40,
                                const std::vector<double>& grid, double abs_tol, double rel_tol) {
    if (!std::isfinite(g30) || !std::isfinite(g40))
        throw std::invalid_argument("solve_gamma_ode: initial values must be finite");
    if (grid.empty()) throw std::invalid_argument("solve_gamma_ode: empty time grid");

    using State = std::array<double, 2>;
    GammaTrajectory traj;
    traj.method = GammaMethod::ode;
    traj.times = grid;
    traj.g3.reserve(grid.size());
    traj.g4.reserve(grid.size());

    // guards against step sizes collapsing toward zero
    constexpr int max_steps_per_sample = 100000;
    double last_time = grid.front();
    auto rhs = [&](const State& x, State& dx, double t) {
        last_time = t;
        const double l = lambda.evaluate(t);
        dx[0] = -l * std::cosh(x[1]);
        dx[1] = l * std::tanh(x[0]) * std::sinh(x[1]);
        if (!std::isfinite(dx[0]) || !std::isfinite(dx[1]))
            throw IntegrationFailure("solve_gamma_ode: right-hand side overflowed", t);
    };
    auto observe = [&](const State& x, double) {
        traj.g3.push_back(x[0]);
        traj.g4.push_back(x[1]);
    };

    State x{g30, g40};
    if (grid.size() == 1) {
        observe(x, grid.front());
        return traj;
    }
    auto stepper = odeint::make_controlled(abs_tol, rel_tol, odeint::runge_kutta_dopri5<State>());
    const double dt0 = 1e-3 * (grid.back() >= grid.front() ? 1.0 : -1.0);
    try {
        odeint::integrate_times(stepper, rhs, x, grid.begin(), grid.end(), dt0, observe,
                                odeint::max_step_checker(max_steps_per_sample));
    } catch (const odeint::odeint_error& e) {
        throw IntegrationFailure(std::string("solve_gamma_ode: ") + e.what(), last_time);
    }
    for (std::size_t i = 0; i < traj.g3.size(); ++i) {
        if (!std::isfinite(traj.g3[i]) || !std::isfinite(traj.g4[i]))
            throw IntegrationFailure("solve_gamma_ode: non-finite state", traj.times[i]);
    }
    return traj;
}

EPConstants fit_constants(double g30, double g40) {
    const double kappa = std::sinh(g40) * std::cosh(g30);
    const double q3 = kappa / std::sqrt(1.0 + kappa * kappa);
    // sinh u = sqrt(1 - q3^2) sinh g3 at t = 0, where u = q2
    const double q2 = std::asinh(std::sqrt(1.0 - q3 * q3) * std::sinh(g30));
    return EPConstants(q2, q3);
}

namespace {

double u_of(const TimeProfile& lambda, const EPConstants& c, double t) {
    return c.q2() - lambda.cumulative(t);
}

} // namespace

GammaPair gamma_closed_form(const TimeProfile& lambda, const EPConstants& c, double t) {
    const double u = u_of(lambda, c, t);
    const double g3 = std::asinh(std::sinh(u) / std::sqrt(1.0 - c.q3() * c.q3()));
    const double g4 = std::asinh(c.kappa() / std::cosh(g3));
    return {g3, g4};
}

GammaPair gamma_closed_form_rates(const TimeProfile& lambda, const EPConstants& c, double t) {
    const double u = u_of(lambda, c, t);
    const double l = lambda.evaluate(t);
    const double q3 = c.q3();
    const double sech = 1.0 / std::cosh(u);
    const double den = 1.0 - q3 * q3 * sech * sech;
    return {-l / std::sqrt(den), l * q3 * std::tanh(u) * sech / den};
}

double gamma3_tanh_form(const TimeProfile& lambda, const EPConstants& c, double t) {
    const double u = u_of(lambda, c, t);
    const double sech = 1.0 / std::cosh(u);
    return std::atanh(std::tanh(u) / std::sqrt(1.0 - c.q3() * c.q3() * sech * sech));
}

double gamma4_coth_form(const TimeProfile& lambda, const EPConstants& c, double t) {
    if (c.q3() == 0.0) throw SingularPoint("gamma4_coth_form: undefined for q3 = 0", t);
    const double x = std::cosh(u_of(lambda, c, t)) / c.q3();
    return std::atanh(1.0 / x); // arccoth(x)
}

GammaTrajectory closed_form_trajectory(const TimeProfile& lambda, const EPConstants& c,
                                       const std::vector<double>& grid) {
    GammaTrajectory traj;
    traj.method = GammaMethod::closed_form;
    traj.times = grid;
    for (double t : grid) {
        const GammaPair g = gamma_closed_form(lambda, c, t);
        traj.g3.push_back(g.g3);
        traj.g4.push_back(g.g4);
    }
    return traj;
}

ChiJet chi_closed_form(const TimeProfile& lambda, const EPConstants& c, double t) {
    const double u = u_of(lambda, c, t);
    const double l = lambda.evaluate(t);
    const double dl = lambda.derivative(t);
    const double w = 1.0 - c.q3() * c.q3();
    const double ch = std::cosh(u);
    // g = chi^2,  dg/dt = -lambda sinh 2u / w
    const double g = (ch * ch - c.q3() * c.q3()) / w;
    const double dg = -l * std::sinh(2 * u) / w;
    const double ddg = (-dl * std::sinh(2 * u) + 2 * l * l * std::cosh(2 * u)) / w;
    ChiJet j;
    j.chi = std::sqrt(g);
    j.d1 = dg / (2 * j.chi);
    j.d2 = (ddg - 2 * j.d1 * j.d1) / (2 * j.chi);
    return j;
}

namespace {

void guard_lambda(double l, double t, double eps) {
    if (std::abs(l) <= eps)
        throw SingularPoint("Ermakov-Pinney residual: lambda vanishes", t);
}

double dep(double chi, double d1, double d2, double l, double dl, double kappa) {
    return std::abs(d2 - (dl / l) * d1 - l * l * chi - kappa * kappa * l * l / (chi * chi * chi));
}

} // namespace

double ep_dissipative_residual(const std::function<double(double)>& chi, const TimeProfile& lambda,
                               double kappa, double t, double h, double eps) {
    const double l = lambda.evaluate(t);
    guard_lambda(l, t, eps);
    const num::Interval dom{0.0, lambda.t_max()};
    const double d1 = num::derivative(chi, t, h, dom);
    const double d2 = num::second_derivative(chi, t, h, dom);
    return dep(chi(t), d1, d2, l, lambda.derivative(t), kappa);
}

double ep_dissipative_residual(const EPConstants& c, const TimeProfile& lambda, double t,
                               double eps) {
    const double l = lambda.evaluate(t);
    guard_lambda(l, t, eps);
    const ChiJet j = chi_closed_form(lambda, c, t);
    return dep(j.chi, j.d1, j.d2, l, lambda.derivative(t), c.kappa());
}

double ep_dissipative_residual_state(double g3, double g4, const TimeProfile& lambda, double kappa,
                                     double t, double eps) {
    const double l = lambda.evaluate(t);
    guard_lambda(l, t, eps);
    const double dl = lambda.derivative(t);
    const double c3 = std::cosh(g3), s3 = std::sinh(g3);
    const double c4 = std::cosh(g4), s4 = std::sinh(g4);
    const double d1 = -l * s3 * c4;
    const double d2 = -dl * s3 * c4 + l * l * c3 * c4 * c4 - l * l * s3 * s3 * s4 * s4 / c3;
    return dep(c3, d1, d2, l, dl, kappa);
}

AlgebraElement non_hermitian_hamiltonian(double a, double lambda) {
    return {a, a, cplx(0.0, lambda), 0.0};
}

AlgebraElement hermitian_counterpart(double a, double lambda, double g3, double g4) {
    const double b = 0.5 * lambda * std::sinh(g4) / std::cosh(g3);
    return {a + b, a - b, 0.0, 0.0};
}

AlgebraElement energy_operator(double a, double lambda, double g3, double g4) {
    const double s4 = std::sinh(g4);
    const double b = 0.25 * lambda * std::sinh(2 * g4);
    return {a + b, a - b, cplx(0.0, -lambda * s4 * s4), cplx(0.0, lambda * s4 * std::tanh(g3))};
}

double dyson_residual(const TimeProfile& a, const TimeProfile& lambda, const DysonParams& p,
                      const DysonRates& rates, double t) {
    const double av = a.evaluate(t);
    const double lv = lambda.evaluate(t);
    const AlgebraElement lhs =
        conjugate(p, non_hermitian_hamiltonian(av, lv)) + time_term(p, rates);
    return (lhs - hermitian_counterpart(av, lv, p.g3, p.g4)).norm();
}

} // namespace tdpt
