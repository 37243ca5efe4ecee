// energy.hpp — Decoupled driver frequencies f+(t), f-(t) and real energy expectation values

#pragma once

#include "tdpt/algebra.hpp"
#include "tdpt/dyson.hpp"
#include "tdpt/profiles.hpp"

#include <algorithm>
#include <utility>

namespace tdpt {

struct Scenario {
    TimeProfile a = TimeProfile::constant(1.0);
    TimeProfile lambda = TimeProfile::constant(0.0);
    double q1 = 0.0;
    EPConstants ep{0.0, 0.0};
    double kappa_plus = 0.0;
    double kappa_minus = 0.0;
    int n = 0;
    int m = 0;

    double t_max() const { return std::min(a.t_max(), lambda.t_max()); }
    DysonParams params(double t) const;
    DysonRates rates(double t) const;
};

struct FPair {
    double plus = 0.0;
    double minus = 0.0;
};

// f(+/-) = a +/- q3 sqrt(1 - q3^2) lambda / (1 + cosh(2 q2 - 2 Lambda) - 2 q3^2)
FPair f_pm(const Scenario& s, double t);
// Integrals from 0 to t of f+ and f-.
FPair f_pm_cumulative(const Scenario& s, double t);

Driver plus_driver(const Scenario& s);
Driver minus_driver(const Scenario& s);

// h(t) = f+ K1 + f- K2
AlgebraElement decoupled_hamiltonian(const Scenario& s, double t);

// E = f+ (n + 1/2) sqrt(1 + k+^2) + f- (m + 1/2) sqrt(1 + k-^2)
double energy_expectation(const Scenario& s, double t);

} // namespace tdpt
