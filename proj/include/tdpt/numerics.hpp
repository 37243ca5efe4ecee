// numerics.hpp — Finite-difference stencils and quadrature rules used by the verification paths

#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace tdpt::num {

// Closed interval on which a function may be sampled.
struct Interval {
    double lo;
    double hi;
    bool contains(double t) const noexcept { return t >= lo && t <= hi; }
};

// Finite-difference stencil: derivative ~ sum_i weights[i] f(nodes[i]).
struct Stencil {
    std::array<double, 6> nodes{};
    std::array<double, 6> weights{};
    int size = 0;
};

// Fourth-order first derivative. Central five-point stencil when it fits inside
// `dom`, otherwise the one-sided five-point stencil.
Stencil first_derivative_stencil(double t, double h, Interval dom);
// Fourth-order second derivative with the same selection (six points one-sided).
Stencil second_derivative_stencil(double t, double h, Interval dom);

template <class F>
auto apply_stencil(F&& f, const Stencil& s) {
    auto acc = f(s.nodes[0]) * s.weights[0];
    for (int i = 1; i < s.size; ++i) acc = acc + f(s.nodes[i]) * s.weights[i];
    return acc;
}

template <class F>
auto derivative(F&& f, double t, double h, Interval dom) {
    return apply_stencil(f, first_derivative_stencil(t, h, dom));
}

template <class F>
auto second_derivative(F&& f, double t, double h, Interval dom) {
    return apply_stencil(f, second_derivative_stencil(t, h, dom));
}

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss–Hermite rule for the weight exp(-x^2) (Golub–Welsch).
QuadratureRule gauss_hermite(int n);

// Gauss–Legendre rule on [-1, 1] (Golub–Welsch).
QuadratureRule gauss_legendre(int n);

// Composite Gauss–Legendre rule on [a, b]: `panels` equal panels of `order` nodes.
QuadratureRule composite_gauss_legendre(double a, double b, int panels, int order);

// Adaptive Gauss–Kronrod (7/15) integral of a real function.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13, unsigned max_depth = 20);

// Adaptive integral of a complex function, real and imaginary parts separately.
std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, double rel_tol = 1e-13, unsigned max_depth = 20);

// Adaptive bisection with an absolute error target; suited to panels where the
// integrand may be negligibly small.
std::complex<double> integrate_complex_abs(const std::function<std::complex<double>(double)>& f,
                                           double a, double b, double abs_tol = 1e-15,
                                           unsigned max_depth = 12);

// Evenly spaced grid of `samples` points on [t0, t1], endpoints included.
std::vector<double> linspace(double t0, double t1, int samples);

} // namespace tdpt::num
