// modes.cpp — Pedrosa modes, their Ermakov-Pinney scale factor and grid checks

#include "tdpt/modes.hpp"

#include "tdpt/errors.hpp"
#include "tdpt/numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tdpt {

namespace {

constexpr cplx I{0.0, 1.0};

// Everything about a mode that depends on t only.
struct Frame {
    int n;
    double a;
    double k;     // varkappa
    double kd;    // d varkappa / dt
    double B;     // kd / (a k), the chirp of the Gaussian
    double alpha; // phase
    cplx pref;    // e^{i alpha} / sqrt(k)
};

double phase_angle(double kt, double A) {
    // integral_0^A ds / (kt cos 2s + sqrt(1 + kt^2)), continued across branch cuts
    const double c = std::sqrt(1.0 + kt * kt);
    const double two_pi = 2 * std::numbers::pi;
    return std::atan2((c - kt) * std::sin(A), std::cos(A)) + two_pi * std::round(A / two_pi);
}

Frame frame(const ModeSpec& s, double t) {
    if (s.n < 0) throw std::invalid_argument("pedrosa_mode: n must be non-negative");
    Frame f{};
    f.n = s.n;
    f.a = s.driver.value(t);
    if (std::abs(f.a) <= driver_epsilon)
        throw SingularPoint("pedrosa_mode: driver a(t) vanishes", t);
    const double A = s.driver.cumulative(t);
    const double kt = s.kappa_tilde;
    f.k = std::sqrt(kt * std::cos(2 * A) + std::sqrt(1.0 + kt * kt));
    f.kd = -kt * f.a * std::sin(2 * A) / f.k;
    f.B = f.kd / (f.a * f.k);
    f.alpha = -(s.n + 0.5) * phase_angle(kt, A);
    f.pref = std::exp(I * f.alpha) / std::sqrt(f.k);
    return f;
}

ModeJet jet(const Frame& f, double x) {
    const double y = x / f.k;
    const std::vector<double> psi = hermite_functions(f.n, y);
    const double p = psi[static_cast<std::size_t>(f.n)];
    const double pm = f.n > 0 ? psi[static_cast<std::size_t>(f.n - 1)] : 0.0;
    const double dp = std::sqrt(2.0 * f.n) * pm - y * p;
    const double ddp = (y * y - (2.0 * f.n + 1.0)) * p;
    const cplx E = std::exp(I * (0.5 * f.B * x * x));
    const cplx dE = I * f.B * x;        // E' / E
    const cplx ddE = I * f.B - f.B * f.B * x * x; // E'' / E
    const cplx val = f.pref * p * E;
    const cplx d2 = f.pref * E * (ddp / (f.k * f.k) + 2.0 * dp / f.k * dE + p * ddE);
    return {val, 0.5 * (-d2 + x * x * val)};
}

// Integral over the real line of a function concentrated in [-L, L], unit-width panels.
cplx integrate_line(const std::function<cplx(double)>& g, double L) {
    const int panels = static_cast<int>(std::ceil(2 * L));
    const double w = 2 * L / panels;
    cplx sum{};
    for (int p = 0; p < panels; ++p) {
        sum += num::integrate_complex_abs(g, -L + p * w, -L + (p + 1) * w, 1e-15, 12);
    }
    return sum;
}

cplx integrate_adaptive_extent(const std::function<cplx(double)>& g, double L) {
    cplx prev = integrate_line(g, L);
    for (int i = 0; i < 3; ++i) {
        L *= 2;
        const cplx next = integrate_line(g, L);
        if (std::abs(next - prev) < 1e-10) return next;
        prev = next;
    }
    return prev;
}

struct TimeStencil {
    double t0, t1, t2; // sample times
    double w0, w1, w2; // weights for d/dt at t
};

// Second-order first-derivative stencil at t, one-sided at the ends of [0, t_max].
TimeStencil time_stencil(double t, double dt, double t_max) {
    if (t - dt >= 0.0 && t + dt <= t_max) return {t - dt, t, t + dt, -0.5 / dt, 0.0, 0.5 / dt};
    if (t - dt < 0.0) return {t, t + dt, t + 2 * dt, -1.5 / dt, 2.0 / dt, -0.5 / dt};
    return {t - 2 * dt, t - dt, t, 0.5 / dt, -2.0 / dt, 1.5 / dt};
}

std::vector<double> uniform_grid(double L, double dx) {
    const int half = static_cast<int>(std::ceil(L / dx));
    std::vector<double> xs(static_cast<std::size_t>(2 * half + 1));
    for (int j = -half; j <= half; ++j) xs[static_cast<std::size_t>(j + half)] = j * dx;
    return xs;
}

// (K1 psi)_j = (-(psi_{j+1} - 2 psi_j + psi_{j-1}) / dx^2 + x_j^2 psi_j) / 2 for interior j.
std::vector<cplx> apply_k1_fd(const std::vector<cplx>& psi, const std::vector<double>& xs,
                              double dx) {
    std::vector<cplx> out(psi.size());
    for (std::size_t j = 1; j + 1 < psi.size(); ++j) {
        out[j] = 0.5 * (-(psi[j + 1] - 2.0 * psi[j] + psi[j - 1]) / (dx * dx) +
                        xs[j] * xs[j] * psi[j]);
    }
    return out;
}

} // namespace

double hermite(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite: degree must be non-negative");
    if (n > hermite_max_degree)
        throw UnsupportedDegree("hermite: degree " + std::to_string(n) + " exceeds " +
                                std::to_string(hermite_max_degree));
    double h0 = 1.0;
    if (n == 0) return h0;
    double h1 = 2 * x;
    for (int k = 1; k < n; ++k) {
        const double h2 = 2 * x * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

std::vector<double> hermite_functions(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_functions: degree must be non-negative");
    std::vector<double> psi(static_cast<std::size_t>(n + 1));
    psi[0] = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
    if (n >= 1) psi[1] = std::sqrt(2.0) * x * psi[0];
    for (int k = 1; k < n; ++k) {
        psi[static_cast<std::size_t>(k + 1)] =
            std::sqrt(2.0 / (k + 1)) * x * psi[static_cast<std::size_t>(k)] -
            std::sqrt(static_cast<double>(k) / (k + 1)) * psi[static_cast<std::size_t>(k - 1)];
    }
    return psi;
}

double hermite_function(int n, double x) { return hermite_functions(n, x).back(); }

double ep_classical(double kt, const Driver& d, double t) {
    return std::sqrt(kt * std::cos(2 * d.cumulative(t)) + std::sqrt(1.0 + kt * kt));
}

double ep_classical_rate(double kt, const Driver& d, double t) {
    const double A = d.cumulative(t);
    return -kt * d.value(t) * std::sin(2 * A) / ep_classical(kt, d, t);
}

double ep_classical_residual(const std::function<double(double)>& k, const Driver& d, double t,
                             double h, double eps) {
    const double a = d.value(t);
    if (std::abs(a) <= eps) throw SingularPoint("Ermakov-Pinney residual: driver vanishes", t);
    const num::Interval dom{0.0, d.t_max};
    const double da = num::derivative(d.value, t, h, dom);
    const double k0 = k(t);
    const double k1 = num::derivative(k, t, h, dom);
    const double k2 = num::second_derivative(k, t, h, dom);
    return std::abs(k2 - (da / a) * k1 + a * a * k0 - a * a / (k0 * k0 * k0));
}

double ermakov_quantity(double a, double k, double kd) {
    return (a * a * (1.0 + k * k * k * k) + k * k * kd * kd) / (a * a * k * k);
}

double mode_phase(const ModeSpec& s, double t) {
    return -(s.n + 0.5) * phase_angle(s.kappa_tilde, s.driver.cumulative(t));
}

cplx pedrosa_mode(const ModeSpec& s, double x, double t) { return jet(frame(s, t), x).value; }

ModeJet pedrosa_mode_jet(const ModeSpec& s, double x, double t) { return jet(frame(s, t), x); }

std::vector<cplx> pedrosa_mode_grid(const ModeSpec& s, const std::vector<double>& xs, double t) {
    const Frame f = frame(s, t);
    std::vector<cplx> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = jet(f, xs[i]).value;
    return out;
}

double mode_extent(const ModeSpec& s) {
    const double kt = s.kappa_tilde;
    const double kmax = std::sqrt(std::abs(kt) + std::sqrt(1.0 + kt * kt));
    return kmax * (std::sqrt(2.0 * s.n + 1.0) + 9.0);
}

double k1_expectation(const ModeSpec& s) {
    return (s.n + 0.5) * std::sqrt(1.0 + s.kappa_tilde * s.kappa_tilde);
}

cplx k1_matrix_element(const ModeSpec& s, double t) {
    const Frame f = frame(s, t);
    return integrate_adaptive_extent(
        [&](double x) {
            const ModeJet j = jet(f, x);
            return std::conj(j.value) * j.k1;
        },
        mode_extent(s));
}

double k1_expectation_quadrature(const ModeSpec& s, double t) {
    return k1_matrix_element(s, t).real();
}

cplx mode_overlap(const ModeSpec& a, const ModeSpec& b, double t) {
    const Frame fa = frame(a, t);
    const Frame fb = frame(b, t);
    return integrate_adaptive_extent(
        [&](double x) { return std::conj(jet(fa, x).value) * jet(fb, x).value; },
        std::max(mode_extent(a), mode_extent(b)));
}

ModeSpec plus_mode(const Scenario& s) {
    return ModeSpec{s.n, plus_driver(s), s.kappa_plus, Channel::plus};
}

ModeSpec minus_mode(const Scenario& s) {
    return ModeSpec{s.m, minus_driver(s), s.kappa_minus, Channel::minus};
}

cplx product_state(const Scenario& s, double x, double y, double t) {
    return pedrosa_mode(plus_mode(s), x, t) * pedrosa_mode(minus_mode(s), y, t);
}

double tdse_residual_1d(const ModeSpec& s, double t, double dx, double dt) {
    const std::vector<double> xs = uniform_grid(mode_extent(s), dx);
    const TimeStencil ts = time_stencil(t, dt, s.driver.t_max);
    const std::vector<cplx> p0 = pedrosa_mode_grid(s, xs, ts.t0);
    const std::vector<cplx> p1 = pedrosa_mode_grid(s, xs, ts.t1);
    const std::vector<cplx> p2 = pedrosa_mode_grid(s, xs, ts.t2);
    const std::vector<cplx> psi = pedrosa_mode_grid(s, xs, t);
    const std::vector<cplx> k1 = apply_k1_fd(psi, xs, dx);
    const double a = s.driver.value(t);
    double rr = 0.0, pp = 0.0;
    for (std::size_t j = 1; j + 1 < xs.size(); ++j) {
        const cplx dpsi = ts.w0 * p0[j] + ts.w1 * p1[j] + ts.w2 * p2[j];
        rr += std::norm(I * dpsi - a * k1[j]);
        pp += std::norm(psi[j]);
    }
    return std::sqrt(rr / pp);
}

double tdse_residual_2d(const Scenario& s, double t, double dx, double dt) {
    const ModeSpec mp = plus_mode(s), mm = minus_mode(s);
    const std::vector<double> xs = uniform_grid(mode_extent(mp), dx);
    const std::vector<double> ys = uniform_grid(mode_extent(mm), dx);
    const TimeStencil ts = time_stencil(t, dt, s.t_max());
    const double times[3] = {ts.t0, ts.t1, ts.t2};
    const double weights[3] = {ts.w0, ts.w1, ts.w2};
    std::vector<cplx> px[3], py[3];
    for (int k = 0; k < 3; ++k) {
        px[k] = pedrosa_mode_grid(mp, xs, times[k]);
        py[k] = pedrosa_mode_grid(mm, ys, times[k]);
    }
    const std::vector<cplx> fx = pedrosa_mode_grid(mp, xs, t);
    const std::vector<cplx> fy = pedrosa_mode_grid(mm, ys, t);
    const std::vector<cplx> kx = apply_k1_fd(fx, xs, dx);
    const std::vector<cplx> ky = apply_k1_fd(fy, ys, dx);
    const FPair f = f_pm(s, t);

    double rr = 0.0, pp = 0.0;
    for (std::size_t j = 1; j + 1 < xs.size(); ++j) {
        for (std::size_t k = 1; k + 1 < ys.size(); ++k) {
            cplx dpsi{};
            for (int q = 0; q < 3; ++q) dpsi += weights[q] * px[q][j] * py[q][k];
            const cplx hpsi = f.plus * kx[j] * fy[k] + f.minus * fx[j] * ky[k];
            rr += std::norm(I * dpsi - hpsi);
            pp += std::norm(fx[j] * fy[k]);
        }
    }
    return std::sqrt(rr / pp);
}

namespace {

struct ProductJets {
    num::QuadratureRule rx, ry;
    std::vector<ModeJet> jx, jy;
};

ProductJets product_jets(const Scenario& s, double t, int panels, int order) {
    const ModeSpec mp = plus_mode(s), mm = minus_mode(s);
    const double Lx = mode_extent(mp), Ly = mode_extent(mm);
    ProductJets pj{num::composite_gauss_legendre(-Lx, Lx, panels, order),
                   num::composite_gauss_legendre(-Ly, Ly, panels, order),
                   {},
                   {}};
    const Frame fx = frame(mp, t), fy = frame(mm, t);
    for (double x : pj.rx.nodes) pj.jx.push_back(jet(fx, x));
    for (double y : pj.ry.nodes) pj.jy.push_back(jet(fy, y));
    return pj;
}

} // namespace

cplx energy_expectation_quadrature(const Scenario& s, double t, int panels, int order) {
    const ProductJets pj = product_jets(s, t, panels, order);
    const FPair f = f_pm(s, t);
    cplx sum{};
    for (std::size_t j = 0; j < pj.jx.size(); ++j) {
        for (std::size_t k = 0; k < pj.jy.size(); ++k) {
            const cplx psi = pj.jx[j].value * pj.jy[k].value;
            const cplx hpsi = f.plus * pj.jx[j].k1 * pj.jy[k].value +
                              f.minus * pj.jx[j].value * pj.jy[k].k1;
            sum += pj.rx.weights[j] * pj.ry.weights[k] * std::conj(psi) * hpsi;
        }
    }
    return sum;
}

double product_norm_quadrature(const Scenario& s, double t, int panels, int order) {
    const ProductJets pj = product_jets(s, t, panels, order);
    double sum = 0.0;
    for (std::size_t j = 0; j < pj.jx.size(); ++j) {
        for (std::size_t k = 0; k < pj.jy.size(); ++k) {
            sum += pj.rx.weights[j] * pj.ry.weights[k] *
                   std::norm(pj.jx[j].value * pj.jy[k].value);
        }
    }
    return sum;
}

} // namespace tdpt
