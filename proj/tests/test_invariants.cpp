// test_invariants.cpp — Invariant coefficients, both beta routes and the Dyson parameters they imply

#include "tdpt/energy.hpp"
#include "tdpt/errors.hpp"
#include "tdpt/invariants.hpp"
#include "tdpt/numerics.hpp"

#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <random>

using namespace tdpt;

namespace {

const cplx I{0.0, 1.0};
const auto lam = TimeProfile::sinusoid(0.5, 0.3, 1.0, 0.0, 10.0);
const auto drive = TimeProfile::sinusoid(1.0, 0.2, 2.0, 0.0, 10.0);
const num::Interval dom{0.0, 10.0};

Scenario scenario_for(const TimeProfile& a, const TimeProfile& l, double q2, double q3) {
    Scenario s;
    s.a = a;
    s.lambda = l;
    s.ep = EPConstants(q2, q3);
    return s;
}

} // namespace

TEST_CASE("constraints are checked at construction") {
    CHECK_NOTHROW(InvariantCoeffs(1.0, {0.3, -0.4}, {0.5, -0.3 * -0.4 / 2.0}, 1.0));
    CHECK_THROWS_AS(InvariantCoeffs(cplx(1.0, 0.1), 0.3, 0.5, 1.0), ConstraintViolation);
    CHECK_THROWS_AS(InvariantCoeffs(1.0, {0.3, -0.4}, {0.5, 0.2}, 1.0), ConstraintViolation);
    CHECK_THROWS_AS(InvariantCoeffs(1.0, {0.0, 1.2}, 0.5, 1.0), ConstraintViolation);
    CHECK_THROWS_AS(InvariantCoeffs(1.0, 0.3, 0.5, cplx(1.0, 0.2)), ConstraintViolation);
    CHECK_THROWS_AS(InvariantCoeffs::for_dyson_constants(1.0, 0.4, 1.0, 0.3, -0.5), ConstraintViolation);
    CHECK_THROWS_AS(InvariantCoeffs(1.0, 0.3, -0.5, 1.0).dyson_constants(), ConstraintViolation);
    try {
        InvariantCoeffs(1.0, {0.0, 1.2}, 0.5, 1.0);
    } catch (const ConstraintViolation& e) {
        CHECK(std::string(e.what()).find("2|Re c3| > |Im c2|") != std::string::npos);
    }
    const auto ic = InvariantCoeffs::for_dyson_constants(1.0, 0.4, 1.0, 0.3, 0.5);
    CHECK(ic.dyson_constants().q2() == 1.0);
    CHECK(ic.dyson_constants().q3() == doctest::Approx(0.4));
    CHECK(ic.c8() == 0.0);
}

TEST_CASE("alpha coefficients") {
    const InvariantCoeffs flat(1.4, 0.3, 0.0, 0.7);
    for (double t : {0.0, 2.0, 9.0}) {
        const auto a = alpha_coeffs(flat, lam, t);
        CHECK(std::abs(a[0] - 0.7) < 1e-15);
        CHECK(std::abs(a[3]) < 1e-15);
    }
    const InvariantCoeffs c0(1.4, 0.3, 0.5, 0.0);
    const auto a0 = alpha_coeffs(c0, lam, 0.0);
    CHECK(std::abs(a0[0] - (0.7 + 0.5)) < 1e-15);
    CHECK(std::abs(a0[3]) < 1e-15);

    const auto ic = InvariantCoeffs::for_dyson_constants(1.0, 0.4, 1.0, 0.3, 0.5);
    for (double t : num::linspace(0.0, 10.0, 25)) {
        const auto a = alpha_coeffs(ic, lam, t);
        auto da = [&](int k) {
            return num::derivative([&](double s) { return alpha_coeffs(ic, lam, s)[k]; }, t, 1e-3, dom);
        };
        const double l = lam(t);
        CHECK(std::abs(da(0) - I * l * a[3] / 2.0) < 1e-7);
        CHECK(std::abs(da(1) + I * l * a[3] / 2.0) < 1e-7);
        CHECK(std::abs(da(2)) < 1e-7);
        CHECK(std::abs(da(3) - I * l * (a[1] - a[0])) < 1e-7);
        // additional constraints
        CHECK(std::abs(a[0].imag() + a[1].imag()) < 1e-12);
        CHECK(std::abs(a[2].real() * a[2].imag() + a[3].real() * a[3].imag() -
                       2 * a[0].imag() * (a[1].real() - a[0].real())) < 1e-12);
    }
}

TEST_CASE("beta from matching") {
    const InvariantCoeffs real_c2(1.0, 0.3, 0.5, 1.0);
    for (double t : {0.0, 3.0, 7.0}) {
        const auto b = beta_from_match(real_c2, lam, t, +1);
        CHECK(std::abs(b[3]) < 1e-15);
        CHECK(b[2] == doctest::Approx(0.3).epsilon(1e-14));
        CHECK(beta_from_match(real_c2, lam, t, -1)[2] == doctest::Approx(-0.3).epsilon(1e-14));
    }
    // Lambda(t) = Re c4: constant lambda 0.5, c4 = 1 at t = 2
    const auto half = TimeProfile::constant(0.5, 10.0);
    const auto ic = InvariantCoeffs::for_dyson_constants(1.0, 0.4, 1.0, 0.3, 0.5);
    CHECK(std::abs(beta_from_match(ic, half, 2.0)[3]) < 1e-15);

    for (int branch : {+1, -1}) {
        const auto icb = InvariantCoeffs::for_dyson_constants(1.0, 0.4, 1.0, 0.3, 0.5, branch);
        double worst = 0.0;
        for (double t : num::linspace(0.0, 10.0, 200)) {
            const auto m = beta_from_match(icb, lam, t, branch);
            const auto e = beta_from_evolution(icb, lam, t);
            for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(m[k] - e[k]));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("beta from evolution") {
    const auto z = beta_from_evolution(0.6, 0.4, 0.0, 0.0, 0.8);
    CHECK(z[2] == 0.0);
    CHECK(z[3] == 0.0);
    const auto c = beta_from_evolution(0.6, 0.4, 0.9, 0.25, 0.25);
    CHECK(c[2] == doctest::Approx(0.9));
    CHECK(std::abs(c[3]) < 1e-16);

    const auto ic = InvariantCoeffs::for_dyson_constants(1.0, 0.4, 1.0, 0.3, 0.5);
    const Scenario s = scenario_for(drive, lam, 1.0, 0.4);
    for (double t : num::linspace(0.0, 10.0, 25)) {
        const auto b = beta_from_evolution(ic, lam, t);
        const FPair f = f_pm(s, t);
        auto db = [&](int k) {
            return num::derivative([&](double u) { return beta_from_evolution(ic, lam, u)[k]; }, t, 1e-3, dom);
        };
        CHECK(std::abs(db(2) - b[3] * (f.minus - f.plus)) < 1e-7);
        CHECK(std::abs(db(3) - b[2] * (f.plus - f.minus)) < 1e-7);
        CHECK(std::abs(db(0)) < 1e-12);
        CHECK(std::abs(db(1)) < 1e-12);
    }
}

TEST_CASE("integral of b1 - b2") {
    const InvariantCoeffs real_c2(1.0, 0.3, 0.5, 1.0);
    CHECK(b_diff_integral(real_c2, lam, 4.0) == 0.0);
    const auto ic0 = InvariantCoeffs::for_dyson_constants(0.0, 0.4, 1.0, 0.3, 0.5);
    CHECK(std::abs(b_diff_integral(ic0, lam, 0.0)) < 1e-16);

    const auto ic = InvariantCoeffs::for_dyson_constants(1.0, 0.4, 1.0, 0.3, 0.5);
    const Scenario s = scenario_for(drive, lam, 1.0, 0.4);
    boost::math::quadrature::tanh_sinh<double> ts;
    for (double t : {0.7, 3.9, 10.0}) {
        const double q = ts.integrate([&](double u) { const FPair f = f_pm(s, u); return f.plus - f.minus; }, 0.0, t);
        CHECK(std::abs(b_diff_integral(ic, lam, t) - b_diff_integral(ic, lam, 0.0) - q) < 1e-8);
    }
}

TEST_CASE("Dyson parameters from alpha") {
    AlphaVector real_a{cplx(1.0), cplx(0.5), cplx(0.3), cplx(0.2)};
    const auto g = gamma_from_alpha(real_a);
    CHECK(g.g3 == 0.0);
    CHECK(g.g4 == 0.0);
    const auto ic = InvariantCoeffs::for_dyson_constants(1.0, 0.4, 1.0, 0.3, 0.5);
    const EPConstants ep(1.0, 0.4);
    for (double t : num::linspace(0.0, 10.0, 60)) {
        const auto a = gamma_from_alpha(alpha_coeffs(ic, lam, t));
        const auto c = gamma_closed_form(lam, ep, t);
        CHECK(std::abs(a.g3 - c.g3) < 1e-10);
        CHECK(std::abs(a.g4 - c.g4) < 1e-10);
    }
    AlphaVector bad{cplx(1.0), cplx(1.1), cplx(0.3, 0.5), cplx(0.0, 0.1)};
    CHECK_THROWS_AS(gamma_from_alpha(bad), ConstraintViolation);
}

TEST_CASE("conservation along the flow") {
    const auto K1 = AlgebraElement::basis(1), K2 = AlgebraElement::basis(2);
    auto central = [&](double) { return K1 + K2; };
    auto H = [&](double t) { return non_hermitian_hamiltonian(drive(t), lam(t)); };
    CHECK(conservation_residual(central, H, 2.0, 10.0) < 1e-12);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int draw = 0; draw < 5; ++draw) {
        // moderate drives keep |q2 - Lambda| below ~6, where the coefficients stay O(10^2)
        const auto l = TimeProfile::sinusoid(0.1 + 0.4 * u(rng), 0.2 * u(rng), 0.5 + u(rng), u(rng), 10.0);
        const auto a = TimeProfile::sinusoid(0.8 + u(rng), 0.3 * u(rng), 0.5 + 2 * u(rng), u(rng), 10.0);
        const double q2 = 2 * u(rng) - 1, q3 = 1.6 * u(rng) - 0.8;
        const auto ic = InvariantCoeffs::for_dyson_constants(q2, q3, u(rng), u(rng) - 0.5, 0.2 + u(rng));
        const Scenario s = scenario_for(a, l, q2, q3);
        auto IH = [&](double t) { return to_element(alpha_coeffs(ic, l, t)); };
        auto Hd = [&](double t) { return non_hermitian_hamiltonian(a(t), l(t)); };
        auto Ih = [&](double t) { return to_element(beta_from_evolution(ic, l, t)); };
        auto h = [&](double t) { return decoupled_hamiltonian(s, t); };
        double rH = 0.0, rh = 0.0, imag = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double t = 10.0 * u(rng);
            rH = std::max(rH, conservation_residual(IH, Hd, t, 10.0));
            rh = std::max(rh, conservation_residual(Ih, h, t, 10.0));
            // relative to the size of the invariant, which grows like cosh(q2 - Lambda)
            const auto c = conjugate(s.params(t), IH(t));
            imag = std::max(imag, c.max_imag() / std::max(1.0, c.norm()));
        }
        CHECK(rH < 1e-7);
        CHECK(rh < 1e-7);
        CHECK(imag < 1e-11);
    }
    // perturbed alpha3; a constant shift commutes with H, so the perturbation drifts in time
    const auto ic = InvariantCoeffs::for_dyson_constants(1.0, 0.4, 1.0, 0.3, 0.5);
    auto bent = [&](double t) {
        auto a = alpha_coeffs(ic, lam, t);
        a[2] += 0.1 * t;
        return to_element(a);
    };
    CHECK(conservation_residual(bent, H, 2.0, 10.0) > 1e-3);
}

TEST_CASE("similarity of the two invariants") {
    AlphaVector a{cplx(1.0), cplx(0.5), cplx(0.3), cplx(0.2)};
    BetaVector b{1.0, 0.5, 0.1, 0.2};
    CHECK(similarity_residual(a, b, {}) == doctest::Approx(0.2));

    const EPConstants ep(1.0, 0.4);
    for (int branch : {+1, -1}) {
        const auto ic = InvariantCoeffs::for_dyson_constants(1.0, 0.4, 1.0, 0.3, 0.5, branch);
        double match = 0.0, evolve = 0.0;
        for (double t : num::linspace(0.0, 10.0, 50)) {
            const auto g = gamma_closed_form(lam, ep, t);
            const DysonParams p{0.0, 0.0, g.g3, g.g4};
            const auto al = alpha_coeffs(ic, lam, t);
            match = std::max(match, similarity_residual(al, beta_from_match(ic, lam, t, branch), p));
            evolve = std::max(evolve, similarity_residual(al, beta_from_evolution(ic, lam, t), p));
        }
        // only the + pairing is consistent; the - branch is the negative control
        if (branch > 0) {
            CHECK(match < 1e-9);
            CHECK(evolve < 1e-9);
        } else {
            CHECK(match > 1e-3);
        }
    }
}
