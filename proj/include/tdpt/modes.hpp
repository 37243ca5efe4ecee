// modes.hpp — Exact single-mode solutions of the driven oscillator a(t) K1 and 2D product states

#pragma once

#include "tdpt/energy.hpp"
#include "tdpt/profiles.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace tdpt {

using cplx = std::complex<double>;

inline constexpr int hermite_max_degree = 60;
inline constexpr double driver_epsilon = 1e-8;

// Physicist's Hermite polynomial H_n(x), n <= 60.
double hermite(int n, double x);
// Normalized Hermite function H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)).
double hermite_function(int n, double x);
// psi_0 .. psi_n at x.
std::vector<double> hermite_functions(int n, double x);

enum class Channel { plus, minus };

struct ModeSpec {
    int n = 0;
    Driver driver;
    double kappa_tilde = 0.0;
    Channel channel = Channel::plus;
};

// varkappa = sqrt(k cos(2 A(t)) + sqrt(1 + k^2)),  A = integral of the driver.
double ep_classical(double kappa_tilde, const Driver& driver, double t);
double ep_classical_rate(double kappa_tilde, const Driver& driver, double t);
// |k'' - (a'/a) k' + a^2 k - a^2 / k^3| with fourth-order finite differences.
double ep_classical_residual(const std::function<double(double)>& varkappa, const Driver& driver,
                             double t, double h = 5e-3, double eps = driver_epsilon);
// [a^2 (1 + k^4) + k^2 k'^2] / (a^2 k^2)
double ermakov_quantity(double a, double varkappa, double varkappa_dot);

// alpha_n(t) = -(n + 1/2) integral_0^t a / varkappa^2 ds (closed form).
double mode_phase(const ModeSpec& spec, double t);

// Normalized mode e^{i alpha_n} k^{-1/2} psi_n(x / k) exp(i k' x^2 / (2 a k)).
cplx pedrosa_mode(const ModeSpec& spec, double x, double t);

struct ModeJet {
    cplx value;
    cplx k1; // (K1 phi)(x) = (-phi'' + x^2 phi) / 2
};
ModeJet pedrosa_mode_jet(const ModeSpec& spec, double x, double t);

// Mode values on a set of abscissae.
std::vector<cplx> pedrosa_mode_grid(const ModeSpec& spec, const std::vector<double>& xs, double t);

// Half-width of an interval holding the mode to below double precision.
double mode_extent(const ModeSpec& spec);

// (n + 1/2) sqrt(1 + k^2)
double k1_expectation(const ModeSpec& spec);
// <phi|K1|phi> by adaptive quadrature.
cplx k1_matrix_element(const ModeSpec& spec, double t);
double k1_expectation_quadrature(const ModeSpec& spec, double t);
cplx mode_overlap(const ModeSpec& a, const ModeSpec& b, double t);

ModeSpec plus_mode(const Scenario& s);
ModeSpec minus_mode(const Scenario& s);
// phi+_n(x, t) phi-_m(y, t)
cplx product_state(const Scenario& s, double x, double y, double t);

// ||i dpsi/dt - a K1 psi|| / ||psi|| on a uniform grid with second-order stencils.
double tdse_residual_1d(const ModeSpec& spec, double t, double dx = 0.05, double dt = 1e-3);
// Same for the product state under h(t) = f+ K1 + f- K2.
double tdse_residual_2d(const Scenario& s, double t, double dx = 0.05, double dt = 1e-3);

// <Psi|h(t)|Psi> by tensor Gauss-Legendre quadrature.
cplx energy_expectation_quadrature(const Scenario& s, double t, int panels = 40, int order = 10);
// <Psi|Psi> with the same rule.
double product_norm_quadrature(const Scenario& s, double t, int panels = 40, int order = 10);

} // namespace tdpt
