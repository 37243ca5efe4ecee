// dyson.hpp — Time-dependent Dyson map parameters, Ermakov-Pinney checks and the Hermitian counterpart

#pragma once

#include "tdpt/algebra.hpp"
#include "tdpt/profiles.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace tdpt {

// Integration constants of the closed-form Dyson parameters. |q3| < 1.
class EPConstants {
public:
    EPConstants(double q2, double q3);

    double q2() const noexcept { return q2_; }
    double q3() const noexcept { return q3_; }
    // Conserved value of sinh(g4) cosh(g3).
    double kappa() const noexcept { return kappa_; }

private:
    double q2_;
    double q3_;
    double kappa_;
};

enum class GammaMethod { ode, closed_form };

struct GammaTrajectory {
    std::vector<double> times;
    std::vector<double> g3;
    std::vector<double> g4;
    GammaMethod method = GammaMethod::ode;
};

struct GammaPair {
    double g3 = 0.0;
    double g4 = 0.0;
};

// Adaptive Dormand-Prince integration of
//   g3' = -lambda cosh g4,   g4' = lambda tanh g3 sinh g4
// sampled at the increasing times of `grid` (grid[0] is the initial time).
GammaTrajectory solve_gamma_ode(const TimeProfile& lambda, double g30, double g40,
                                const std::vector<double>& grid, double abs_tol = 1e-10,
                                double rel_tol = 1e-10);

// Constants (q2, q3) reproducing (g30, g40) at t = 0.
EPConstants fit_constants(double g30, double g40);

// Canonical closed form with u = q2 - Lambda(t):
//   g3 = arcsinh(sinh u / sqrt(1 - q3^2)),   g4 = arcsinh(kappa sech g3).
GammaPair gamma_closed_form(const TimeProfile& lambda, const EPConstants& c, double t);
// Analytic time derivatives of the closed form.
GammaPair gamma_closed_form_rates(const TimeProfile& lambda, const EPConstants& c, double t);
// Alternative transcendental forms kept as cross-checks:
//   g3 = arctanh[tanh u / sqrt(1 - q3^2 sech^2 u)],   g4 = arccoth[cosh u / q3].
double gamma3_tanh_form(const TimeProfile& lambda, const EPConstants& c, double t);
double gamma4_coth_form(const TimeProfile& lambda, const EPConstants& c, double t);

GammaTrajectory closed_form_trajectory(const TimeProfile& lambda, const EPConstants& c,
                                       const std::vector<double>& grid);

// chi = cosh g3 = sqrt[(cosh^2 u - q3^2) / (1 - q3^2)] and its first two derivatives.
struct ChiJet {
    double chi = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};
ChiJet chi_closed_form(const TimeProfile& lambda, const EPConstants& c, double t);

inline constexpr double lambda_epsilon = 1e-8;

// |chi'' - (lambda'/lambda) chi' - lambda^2 chi - kappa^2 lambda^2 / chi^3|.
// All variants throw SingularPoint where |lambda(t)| <= eps.
// Derivatives of an arbitrary chi by fourth-order finite differences of step h.
double ep_dissipative_residual(const std::function<double(double)>& chi, const TimeProfile& lambda,
                               double kappa, double t, double h = 5e-3,
                               double eps = lambda_epsilon);
// Analytic derivatives of the closed-form chi.
double ep_dissipative_residual(const EPConstants& c, const TimeProfile& lambda, double t,
                               double eps = lambda_epsilon);
// chi = cosh g3 taken from a point (g3, g4) of a trajectory; derivatives follow from the
// constraint equations.
double ep_dissipative_residual_state(double g3, double g4, const TimeProfile& lambda, double kappa,
                                     double t, double eps = lambda_epsilon);

// H = a (K1 + K2) + i lambda K3
AlgebraElement non_hermitian_hamiltonian(double a, double lambda);
// h = a (K1 + K2) + (lambda/2) (sinh g4 / cosh g3) (K1 - K2)
AlgebraElement hermitian_counterpart(double a, double lambda, double g3, double g4);
// H~ = eta^{-1} h eta
AlgebraElement energy_operator(double a, double lambda, double g3, double g4);

// ||eta H eta^{-1} + i eta' eta^{-1} - h|| in coefficient space.
double dyson_residual(const TimeProfile& a, const TimeProfile& lambda, const DysonParams& p,
                      const DysonRates& rates, double t);

} // namespace tdpt
