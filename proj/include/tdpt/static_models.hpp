// static_models.hpp — Time-independent coupled oscillators: decoupling, spectra and broken-regime eigenstates

#pragma once

#include "tdpt/algebra.hpp"

#include <complex>
#include <variant>
#include <vector>

namespace tdpt {

// H = (px^2 + py^2)/(2m) + m (Wx^2 x^2 + Wy^2 y^2)/2 + i kappa x y
struct XYModel {
    double m = 1.0;
    double omega_x = 1.0;
    double omega_y = 1.0;
    double kappa = 0.0;
};

struct XYDecoupling {
    double theta = 0.0;
    double omega_x = 0.0;
    double omega_y = 0.0;
};

// Largest |kappa| for which the rotation decouples the model: m |Wy^2 - Wx^2| / 2.
double exceptional_bound(const XYModel& model);

// Throws ExceptionalPointError for |kappa| >= bound (unless kappa = 0).
XYDecoupling decouple_xy(const XYModel& model);

struct Level {
    int n = 0;
    int m = 0;
    double energy = 0.0;
};

// (n + 1/2) wx + (m + 1/2) wy for 0 <= n <= n_max, 0 <= m <= m_max, sorted by energy.
std::vector<Level> spectrum_xy(double omega_x, double omega_y, int n_max, int m_max);

// H_K = a K1 + b K2 + i lambda K3
struct KModel {
    double a = 1.0;
    double b = 1.0;
    double lambda = 0.0;
};

struct KDecoupling {
    double theta = 0.0;  // eta = exp(theta K4)
    AlgebraElement h;    // eta H_K eta^{-1}, real coefficients
};

struct BrokenRegime {
    double lambda = 0.0;
    double gap = 0.0; // |a - b|
};

std::variant<KDecoupling, BrokenRegime> decouple_K(const KModel& model);

AlgebraElement k_hamiltonian(const KModel& model);

// a (1 + n + m) + i (lambda / 2) (n - m)
std::complex<double> broken_spectrum(double a, double lambda, int n, int m);

inline constexpr int static_max_degree = 20;

// Eigenstate of H_K(b = a): psi_n((x + y)/sqrt 2) psi_m((x - y)/sqrt 2).
std::complex<double> static_eigenstate(int n, int m, double x, double y);
// Polynomial factor P with phi_{n,m} = P(x, y) exp(-(x^2 + y^2)/2).
double static_eigenstate_polynomial(int n, int m, double x, double y);

// Antilinear maps (x, y) -> (x, -y) and (x, y) -> (-x, y), each followed by conjugation.
std::complex<double> pt_plus(int n, int m, double x, double y);
std::complex<double> pt_minus(int n, int m, double x, double y);

} // namespace tdpt
