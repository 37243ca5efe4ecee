// test_static_models.cpp — Rotation decoupling, spectra and eigenstates of the static models

#include "tdpt/errors.hpp"
#include "tdpt/numerics.hpp"
#include "tdpt/static_models.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

using namespace tdpt;

namespace {

const double sqrt3 = std::sqrt(3.0);

// Squared normal-mode frequencies from the complex potential matrix.
std::array<double, 2> potential_frequencies(const XYModel& md) {
    Eigen::Matrix2cd M;
    M << md.omega_x * md.omega_x, cplx(0.0, md.kappa / md.m), cplx(0.0, md.kappa / md.m), md.omega_y * md.omega_y;
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(M);
    double e0 = es.eigenvalues()(0).real(), e1 = es.eigenvalues()(1).real();
    if (e0 > e1) std::swap(e0, e1);
    return {e0, e1};
}

// (H_K phi)(x, y) with b = a by fourth-order finite differences.
cplx apply_hk(double a, double lambda, int n, int m, double x, double y) {
    const double h = 1e-2;
    auto f = [&](double u, double v) { return static_eigenstate(n, m, u, v); };
    auto d2 = [&](auto g) { return (-g(2) + 16.0 * g(1) - 30.0 * g(0) + 16.0 * g(-1) - g(-2)) / (12 * h * h); };
    const cplx fxx = d2([&](int k) { return f(x + k * h, y); });
    const cplx fyy = d2([&](int k) { return f(x, y + k * h); });
    auto dx = [&](double v) {
        return (-f(x + 2 * h, v) + 8.0 * f(x + h, v) - 8.0 * f(x - h, v) + f(x - 2 * h, v)) / (12 * h);
    };
    const cplx fxy = (-dx(y + 2 * h) + 8.0 * dx(y + h) - 8.0 * dx(y - h) + dx(y - 2 * h)) / (12 * h);
    const cplx v = f(x, y);
    const cplx k1 = 0.5 * (-fxx + x * x * v), k2 = 0.5 * (-fyy + y * y * v);
    const cplx k3 = 0.5 * (x * y * v - fxy);
    return a * (k1 + k2) + cplx(0.0, lambda) * k3;
}

} // namespace

TEST_CASE("xy decoupling") {
    const XYModel free{1.0, 1.0, sqrt3, 0.0};
    const auto d0 = decouple_xy(free);
    CHECK(d0.theta == 0.0);
    CHECK(d0.omega_x == 1.0);
    CHECK(d0.omega_y == sqrt3);

    CHECK(exceptional_bound({1.0, 1.0, sqrt3, 1.0}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(decouple_xy({1.0, 1.0, sqrt3, 1.0}), ExceptionalPointError);
    CHECK_THROWS_AS(decouple_xy({1.0, 1.0, sqrt3, -1.2}), ExceptionalPointError);
    CHECK_THROWS_AS(decouple_xy({1.0, 1.0, 1.0, 0.1}), ExceptionalPointError);
    CHECK_THROWS_AS(decouple_xy({0.0, 1.0, sqrt3, 0.1}), std::invalid_argument);

    for (const XYModel md : {XYModel{1.0, 1.0, sqrt3, 0.5}, XYModel{2.0, 0.7, 1.9, -1.1}, XYModel{0.5, 2.0, 1.0, 0.3}}) {
        const auto d = decouple_xy(md);
        const double ox2 = d.omega_x * d.omega_x, oy2 = d.omega_y * d.omega_y;
        const double wx2 = md.omega_x * md.omega_x, wy2 = md.omega_y * md.omega_y;
        CHECK(ox2 + oy2 == doctest::Approx(wx2 + wy2).epsilon(1e-14));
        CHECK(ox2 * oy2 == doctest::Approx(wx2 * wy2 + md.kappa * md.kappa / (md.m * md.m)).epsilon(1e-13));
        const auto e = potential_frequencies(md);
        CHECK(std::min(ox2, oy2) == doctest::Approx(e[0]).epsilon(1e-13));
        CHECK(std::max(ox2, oy2) == doctest::Approx(e[1]).epsilon(1e-13));
    }
}

TEST_CASE("xy spectrum") {
    const auto s = spectrum_xy(1.0, sqrt3, 2, 2);
    REQUIRE(s.size() == 9);
    CHECK(s.front().energy == doctest::Approx(0.5 + sqrt3 / 2));
    CHECK(s.front().n == 0);
    CHECK(s[1].n == 1);
    CHECK(s[1].m == 0);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1].energy <= s[i].energy);
    CHECK_THROWS_AS(spectrum_xy(0.0, 1.0, 1, 1), std::invalid_argument);
}

TEST_CASE("K-model decoupling") {
    const auto free = decouple_K({1.0, 3.0, 0.0});
    REQUIRE(std::holds_alternative<KDecoupling>(free));
    CHECK(std::get<KDecoupling>(free).h[0] == cplx(1.0));
    CHECK(std::get<KDecoupling>(free).h[1] == cplx(3.0));

    const auto broken = decouple_K({1.0, 1.0, 0.5});
    REQUIRE(std::holds_alternative<BrokenRegime>(broken));
    CHECK(std::get<BrokenRegime>(broken).gap == 0.0);
    CHECK(std::holds_alternative<BrokenRegime>(decouple_K({1.0, 3.0, 2.0})));

    const auto d = std::get<KDecoupling>(decouple_K({1.0, 3.0, 1.0}));
    CHECK(d.theta == doctest::Approx(std::atanh(0.5)));
    // continuity from h = a K1 + b K2 puts the smaller coefficient on K1
    CHECK(d.h[0].real() == doctest::Approx(2.0 - sqrt3 / 2));
    CHECK(d.h[1].real() == doctest::Approx(2.0 + sqrt3 / 2));

    for (const KModel md : {KModel{1.0, 3.0, 1.0}, KModel{2.0, 0.5, -0.9}, KModel{0.3, 0.8, 0.2}}) {
        const auto k = std::get<KDecoupling>(decouple_K(md));
        const Eigen::Matrix2cd c =
            generator_exp(4, k.theta) * to_matrix(k_hamiltonian(md)) * generator_exp(4, -k.theta);
        CHECK((from_matrix(c) - k.h).norm() < 1e-13);
        CHECK(k.h.is_hermitian(1e-15));
        // the spectrum of the 2x2 image is preserved
        Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(to_matrix(k_hamiltonian(md)));
        const double lo = std::min(es.eigenvalues()(0).real(), es.eigenvalues()(1).real());
        CHECK(lo == doctest::Approx(std::min(k.h[0].real(), k.h[1].real())).epsilon(1e-13));
    }
}

TEST_CASE("broken spectrum") {
    CHECK(broken_spectrum(1.0, 0.5, 0, 0) == cplx(1.0, 0.0));
    CHECK(broken_spectrum(1.0, 0.5, 2, 0) == cplx(3.0, 0.5));
    CHECK(broken_spectrum(2.0, 0.4, 1, 3) == cplx(10.0, -0.4));
    // complex-conjugate pairs
    CHECK(broken_spectrum(1.0, 0.7, 1, 2) == std::conj(broken_spectrum(1.0, 0.7, 2, 1)));
    CHECK_THROWS_AS(broken_spectrum(1.0, 0.5, -1, 0), std::invalid_argument);
}

TEST_CASE("static eigenstates") {
    const auto rule = num::gauss_hermite(20);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (int p = 0; p <= 3; ++p)
                for (int q = 0; q <= 3; ++q) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                            const double x = rule.nodes[i], y = rule.nodes[j];
                            s += rule.weights[i] * rule.weights[j] * static_eigenstate_polynomial(n, m, x, y) *
                                 static_eigenstate_polynomial(p, q, x, y);
                        }
                    CHECK(std::abs(s - ((n == p && m == q) ? 1.0 : 0.0)) < 1e-13);
                }
    for (double x : {-0.6, 0.2, 1.1})
        for (double y : {-0.9, 0.4}) {
            CHECK(static_eigenstate(2, 1, x, y).real() ==
                  doctest::Approx(static_eigenstate_polynomial(2, 1, x, y) * std::exp(-(x * x + y * y) / 2)));
            for (int n = 0; n <= 3; ++n)
                for (int m = 0; m <= 3; ++m) {
                    const cplx e = broken_spectrum(1.3, 0.6, n, m);
                    const cplx hp = apply_hk(1.3, 0.6, n, m, x, y);
                    CHECK(std::abs(hp - e * static_eigenstate(n, m, x, y)) < 1e-6);
                }
        }
    CHECK_THROWS_AS(static_eigenstate(21, 0, 0.0, 0.0), UnsupportedDegree);
    CHECK_THROWS_AS(static_eigenstate(0, -1, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("antilinear symmetries exchange the quantum numbers") {
    for (double x : {-0.7, 0.3})
        for (double y : {-0.2, 1.0})
            for (int n = 0; n <= 3; ++n)
                for (int m = 0; m <= 3; ++m) {
                    const cplx s = static_eigenstate(m, n, x, y);
                    CHECK(std::abs(pt_plus(n, m, x, y) - s) < 1e-15);
                    CHECK(std::abs(pt_minus(n, m, x, y) - ((n + m) % 2 ? -1.0 : 1.0) * s) < 1e-15);
                }
}
