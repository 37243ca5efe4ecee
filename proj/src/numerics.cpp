// numerics.cpp — Quadrature rules and grids

#include "tdpt/numerics.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tdpt::num {

namespace {

// Golub–Welsch: nodes are eigenvalues of the symmetric Jacobi matrix,
// weights are mu0 * (first eigenvector component)^2.
QuadratureRule golub_welsch(const Eigen::VectorXd& offdiag, double mu0) {
    const int n = static_cast<int>(offdiag.size()) + 1;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        J(i, i + 1) = offdiag(i);
        J(i + 1, i) = offdiag(i);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

} // namespace

Stencil first_derivative_stencil(double t, double h, Interval dom) {
    Stencil s;
    if (t - 2 * h >= dom.lo && t + 2 * h <= dom.hi) {
        s.size = 4;
        s.nodes = {t - 2 * h, t - h, t + h, t + 2 * h};
        s.weights = {1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12};
    } else {
        const double d = (t - 2 * h < dom.lo) ? h : -h;
        s.size = 5;
        s.nodes = {t, t + d, t + 2 * d, t + 3 * d, t + 4 * d};
        s.weights = {-25.0 / 12, 4.0, -3.0, 4.0 / 3, -1.0 / 4};
        h = d;
    }
    for (auto& w : s.weights) w /= h;
    return s;
}

Stencil second_derivative_stencil(double t, double h, Interval dom) {
    Stencil s;
    if (t - 2 * h >= dom.lo && t + 2 * h <= dom.hi) {
        s.size = 5;
        s.nodes = {t - 2 * h, t - h, t, t + h, t + 2 * h};
        s.weights = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};
    } else {
        const double d = (t - 2 * h < dom.lo) ? h : -h;
        s.size = 6;
        s.nodes = {t, t + d, t + 2 * d, t + 3 * d, t + 4 * d, t + 5 * d};
        s.weights = {45.0 / 12, -154.0 / 12, 214.0 / 12, -156.0 / 12, 61.0 / 12, -10.0 / 12};
    }
    for (auto& w : s.weights) w /= h * h;
    return s;
}

QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: need at least one node");
    Eigen::VectorXd off(n - 1);
    for (int i = 1; i < n; ++i) off(i - 1) = std::sqrt(i / 2.0);
    return golub_welsch(off, std::sqrt(std::numbers::pi));
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    Eigen::VectorXd off(n - 1);
    for (int i = 1; i < n; ++i) off(i - 1) = i / std::sqrt(4.0 * i * i - 1.0);
    return golub_welsch(off, 2.0);
}

QuadratureRule composite_gauss_legendre(double a, double b, int panels, int order) {
    const QuadratureRule base = gauss_legendre(order);
    QuadratureRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(panels) * order);
    rule.weights.reserve(rule.nodes.capacity());
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * width;
        for (int i = 0; i < order; ++i) {
            rule.nodes.push_back(mid + 0.5 * width * base.nodes[i]);
            rule.weights.push_back(0.5 * width * base.weights[i]);
        }
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 unsigned max_depth) {
    if (a == b) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth,
                                                                          rel_tol);
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, double rel_tol, unsigned max_depth) {
    const double re = integrate(std::function<double(double)>([&](double x) { return f(x).real(); }), a, b, rel_tol,
                                max_depth);
    const double im = integrate(std::function<double(double)>([&](double x) { return f(x).imag(); }), a, b, rel_tol, max_depth);
    return {re, im};
}

namespace {

using Cplx = std::complex<double>;

// One Gauss-Kronrod (7/15) panel; returns the Kronrod value and |Kronrod - Gauss|.
std::pair<Cplx, double> gk15(const std::function<Cplx(double)>& f, double a, double b) {
    using K = boost::math::quadrature::gauss_kronrod<double, 15>;
    using G = boost::math::quadrature::gauss<double, 7>;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const Cplx f0 = f(c);
    Cplx k = K::weights()[0] * f0, g = G::weights()[0] * f0;
    for (std::size_t i = 1; i < K::abscissa().size(); ++i) {
        const double dx = h * K::abscissa()[i];
        const Cplx s = f(c - dx) + f(c + dx);
        k += K::weights()[i] * s;
        if (i % 2 == 0) g += G::weights()[i / 2] * s;
    }
    return {h * k, std::abs(h * (k - g))};
}

Cplx adapt(const std::function<Cplx(double)>& f, double a, double b, double tol, unsigned depth) {
    const auto [v, err] = gk15(f, a, b);
    if (err <= tol || depth == 0) return v;
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth - 1) + adapt(f, m, b, 0.5 * tol, depth - 1);
}

} // namespace

std::complex<double> integrate_complex_abs(const std::function<std::complex<double>(double)>& f,
                                           double a, double b, double abs_tol, unsigned max_depth) {
    return adapt(f, a, b, abs_tol, max_depth);
}

std::vector<double> linspace(double t0, double t1, int samples) {
    if (samples < 2) throw std::invalid_argument("linspace: need at least two samples");
    std::vector<double> out(samples);
    for (int i = 0; i < samples; ++i) {
        out[i] = (i == samples - 1) ? t1 : t0 + (t1 - t0) * i / (samples - 1);
    }
    return out;
}

} // namespace tdpt::num
