// energy.cpp — Driver frequencies and closed-form energies

#include "tdpt/energy.hpp"

#include <cmath>

namespace tdpt {

DysonParams Scenario::params(double t) const {
    const GammaPair g = gamma_closed_form(lambda, ep, t);
    return {q1, q1, g.g3, g.g4};
}

DysonRates Scenario::rates(double t) const {
    const GammaPair r = gamma_closed_form_rates(lambda, ep, t);
    return {0.0, 0.0, r.g3, r.g4};
}

FPair f_pm(const Scenario& s, double t) {
    const double q3 = s.ep.q3();
    const double u = s.ep.q2() - s.lambda.cumulative(t);
    const double d = q3 * std::sqrt(1.0 - q3 * q3) * s.lambda.evaluate(t) /
                     (1.0 + std::cosh(2 * u) - 2 * q3 * q3);
    const double av = s.a.evaluate(t);
    return {av + d, av - d};
}

FPair f_pm_cumulative(const Scenario& s, double t) {
    // integral of (f+ - f-) / 2 = [arctan(kappa tanh q2) - arctan(kappa tanh u)] / 2
    const double k = s.ep.kappa();
    const double u = s.ep.q2() - s.lambda.cumulative(t);
    const double half = 0.5 * (std::atan(k * std::tanh(s.ep.q2())) - std::atan(k * std::tanh(u)));
    const double A = s.a.cumulative(t);
    return {A + half, A - half};
}

Driver plus_driver(const Scenario& s) {
    return Driver{[s](double t) { return f_pm(s, t).plus; },
                  [s](double t) { return f_pm_cumulative(s, t).plus; }, s.t_max()};
}

Driver minus_driver(const Scenario& s) {
    return Driver{[s](double t) { return f_pm(s, t).minus; },
                  [s](double t) { return f_pm_cumulative(s, t).minus; }, s.t_max()};
}

AlgebraElement decoupled_hamiltonian(const Scenario& s, double t) {
    const FPair f = f_pm(s, t);
    return {f.plus, f.minus, 0.0, 0.0};
}

double energy_expectation(const Scenario& s, double t) {
    const FPair f = f_pm(s, t);
    return f.plus * (s.n + 0.5) * std::sqrt(1.0 + s.kappa_plus * s.kappa_plus) +
           f.minus * (s.m + 0.5) * std::sqrt(1.0 + s.kappa_minus * s.kappa_minus);
}

} // namespace tdpt
