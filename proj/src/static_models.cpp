// static_models.cpp — Rotation decoupling and explicit eigenstates of the static models

#include "tdpt/static_models.hpp"

#include "tdpt/errors.hpp"
#include "tdpt/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace tdpt {

double exceptional_bound(const XYModel& md) {
    return md.m * std::abs(md.omega_y * md.omega_y - md.omega_x * md.omega_x) / 2.0;
}

XYDecoupling decouple_xy(const XYModel& md) {
    if (!(md.m > 0.0)) throw std::invalid_argument("decouple_xy: mass must be positive");
    if (md.kappa == 0.0) return {0.0, std::abs(md.omega_x), std::abs(md.omega_y)};
    const double bound = exceptional_bound(md);
    if (!(std::abs(md.kappa) < bound)) {
        std::ostringstream os;
        os << "decouple_xy: |kappa| = " << std::abs(md.kappa)
           << " at or beyond the exceptional point m|Wy^2 - Wx^2|/2 = " << bound;
        throw ExceptionalPointError(os.str(), bound);
    }
    const double wx2 = md.omega_x * md.omega_x, wy2 = md.omega_y * md.omega_y;
    const double theta = 0.5 * std::atanh(2 * md.kappa / (md.m * (wy2 - wx2)));
    const double ch = std::cosh(theta), sh = std::sinh(theta);
    const double c2 = std::cosh(2 * theta);
    const double ox2 = (wx2 * ch * ch + wy2 * sh * sh) / c2;
    const double oy2 = (wx2 * sh * sh + wy2 * ch * ch) / c2;
    return {theta, std::sqrt(ox2), std::sqrt(oy2)};
}

std::vector<Level> spectrum_xy(double wx, double wy, int n_max, int m_max) {
    if (!(wx > 0.0 && wy > 0.0))
        throw std::invalid_argument("spectrum_xy: frequencies must be positive");
    std::vector<Level> out;
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= m_max; ++m) out.push_back({n, m, (n + 0.5) * wx + (m + 0.5) * wy});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Level& l, const Level& r) { return l.energy < r.energy; });
    return out;
}

AlgebraElement k_hamiltonian(const KModel& md) {
    return {md.a, md.b, cplx(0.0, md.lambda), 0.0};
}

std::variant<KDecoupling, BrokenRegime> decouple_K(const KModel& md) {
    const double gap = std::abs(md.a - md.b);
    if (md.lambda == 0.0) return KDecoupling{0.0, {md.a, md.b, 0.0, 0.0}};
    if (!(std::abs(md.lambda) < gap)) return BrokenRegime{md.lambda, gap};
    const double theta = std::atanh(md.lambda / (md.b - md.a));
    // Continuity in lambda from h = a K1 + b K2 fixes the sign of the root.
    const double half = 0.5 * std::copysign(std::sqrt(gap * gap - md.lambda * md.lambda),
                                            md.a - md.b);
    const double mean = 0.5 * (md.a + md.b);
    return KDecoupling{theta, {mean + half, mean - half, 0.0, 0.0}};
}

std::complex<double> broken_spectrum(double a, double lambda, int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("broken_spectrum: n, m must be >= 0");
    return {a * (1.0 + n + m), 0.5 * lambda * (n - m)};
}

namespace {

void check_degree(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("static_eigenstate: n, m must be >= 0");
    if (n > static_max_degree || m > static_max_degree)
        throw UnsupportedDegree("static_eigenstate: degree exceeds " +
                                std::to_string(static_max_degree));
}

// Normalized Hermite polynomial H_k(x) / sqrt(2^k k! sqrt(pi)) by recurrence.
double normalized_hermite(int k, double x) {
    double p0 = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
    if (k == 0) return p0;
    double p1 = std::sqrt(2.0) * x * p0;
    for (int j = 1; j < k; ++j) {
        const double p2 = std::sqrt(2.0 / (j + 1)) * x * p1 - std::sqrt(double(j) / (j + 1)) * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

} // namespace

double static_eigenstate_polynomial(int n, int m, double x, double y) {
    check_degree(n, m);
    const double u = (x + y) / std::sqrt(2.0), v = (x - y) / std::sqrt(2.0);
    return normalized_hermite(n, u) * normalized_hermite(m, v);
}

std::complex<double> static_eigenstate(int n, int m, double x, double y) {
    check_degree(n, m);
    const double u = (x + y) / std::sqrt(2.0), v = (x - y) / std::sqrt(2.0);
    return hermite_function(n, u) * hermite_function(m, v);
}

std::complex<double> pt_plus(int n, int m, double x, double y) {
    return std::conj(static_eigenstate(n, m, x, -y));
}

std::complex<double> pt_minus(int n, int m, double x, double y) {
    return std::conj(static_eigenstate(n, m, -x, y));
}

} // namespace tdpt
