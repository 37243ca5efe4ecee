// invariants.cpp — Closed-form invariant coefficients and their consistency checks

#include "tdpt/invariants.hpp"

#include "tdpt/errors.hpp"
#include "tdpt/numerics.hpp"

#include <cmath>
#include <sstream>

namespace tdpt {

namespace {

constexpr cplx I{0.0, 1.0};

double scale(double a, double b) { return std::max({1.0, std::abs(a), std::abs(b)}); }

void require(bool ok, const std::string& what) {
    if (!ok) throw ConstraintViolation("InvariantCoeffs: " + what);
}

// sqrt(4 Re c3^2 - Im c2^2)
double sqrt_d(const InvariantCoeffs& c) {
    const double d = 4 * c.c3().real() * c.c3().real() - c.c2().imag() * c.c2().imag();
    if (!(d > 0.0))
        throw ConstraintViolation("reality bound 2|Re c3| > |Im c2| violated");
    return std::sqrt(d);
}

} // namespace

InvariantCoeffs::InvariantCoeffs(cplx c1, cplx c2, cplx c3, cplx c4, double c5, double c6,
                                 double c7, double c8)
    : c_{c1, c2, c3, c4}, r_{c5, c6, c7, c8} {
    require(std::abs(c1.imag()) <= constraint_tolerance * scale(c1.real(), 0.0),
            "constraint Im c1 = 0 violated");
    const double lhs = 4 * c3.real() * c3.imag();
    const double rhs = -c2.real() * c2.imag();
    require(std::abs(lhs - rhs) <= constraint_tolerance * scale(lhs, rhs),
            "constraint 4 Re c3 Im c3 = -Re c2 Im c2 violated");
    require(std::abs(c4.imag()) <= constraint_tolerance * scale(c4.real(), 0.0),
            "constraint Im c4 = 0 violated");
    // c3 = 0 is admissible when c2 is real; the bound is otherwise strict
    require(c2.imag() == 0.0 || 2 * std::abs(c3.real()) > std::abs(c2.imag()),
            "reality bound 2|Re c3| > |Im c2| violated");
}

InvariantCoeffs InvariantCoeffs::for_dyson_constants(double q2, double q3, double c1, double c2r,
                                                     double c3r, int branch) {
    if (!(c3r > 0.0)) throw ConstraintViolation("InvariantCoeffs: constraint Re c3 > 0 violated");
    const EPConstants ep(q2, q3);
    const double c2i = -2 * q3 * c3r;
    const double c3i = -c2r * c2i / (4 * c3r);
    const double sd = std::sqrt(4 * c3r * c3r - c2i * c2i);
    const double s = branch >= 0 ? 1.0 : -1.0;
    return InvariantCoeffs(c1, {c2r, c2i}, {c3r, c3i}, q2, 0.5 * c1 + s * 0.5 * sd,
                           0.5 * c1 - s * 0.5 * sd, s * c2r * sd / (2 * c3r), 0.0);
}

EPConstants InvariantCoeffs::dyson_constants() const {
    require(c_[2].real() > 0.0, "constraint Re c3 > 0 violated");
    return EPConstants(c_[3].real(), -c_[1].imag() / (2 * c_[2].real()));
}

AlphaVector alpha_coeffs(const InvariantCoeffs& c, const TimeProfile& lambda, double t) {
    const cplx arg = c.c4() - lambda.cumulative(t);
    const cplx a1 = 0.5 * c.c1() + c.c3() * std::cosh(arg);
    return {a1, c.c1() - a1, c.c2(), 2.0 * I * c.c3() * std::sinh(arg)};
}

BetaVector beta_from_match(const InvariantCoeffs& c, const TimeProfile& lambda, double t,
                           int branch) {
    require(c.c3().real() > 0.0, "constraint Re c3 > 0 violated");
    const double sd = sqrt_d(c);
    const double s = branch >= 0 ? 1.0 : -1.0;
    const double c2r = c.c2().real(), c2i = c.c2().imag(), c3r = c.c3().real();
    const double u = c.c4().real() - lambda.cumulative(t);
    const double sech = 1.0 / std::cosh(u);
    const double sdp = std::sqrt(4 * c3r * c3r - c2i * c2i * sech * sech);
    const double b1 = 0.5 * c.c1().real() + s * 0.5 * sd;
    const double b2 = 0.5 * c.c1().real() - s * 0.5 * sd;
    const double b3 = s * (c2r / (2 * c3r)) * sd * sd / sdp;
    const double b4 = s * (c2r * c2i / (2 * c3r)) * (sd / sdp) * std::tanh(u);
    return {b1, b2, b3, b4};
}

BetaVector beta_from_evolution(double c5, double c6, double c7, double c8, double b_diff) {
    return {c5, c6, c7 * std::cos(c8 - b_diff), -c7 * std::sin(c8 - b_diff)};
}

BetaVector beta_from_evolution(const InvariantCoeffs& c, const TimeProfile& lambda, double t) {
    return beta_from_evolution(c.c5(), c.c6(), c.c7(), c.c8(), b_diff_integral(c, lambda, t));
}

double b_diff_integral(const InvariantCoeffs& c, const TimeProfile& lambda, double t) {
    if (c.c2().imag() == 0.0) return 0.0;
    const double sd = sqrt_d(c);
    const double u = c.c4().real() - lambda.cumulative(t);
    return std::atan((c.c2().imag() / sd) * std::tanh(u));
}

GammaPair gamma_from_alpha(const AlphaVector& a) {
    const double d12 = a[0].real() - a[1].real();
    const double a3i = a[2].imag();
    const double a4i = a[3].imag();
    const double rad = d12 * d12 - a3i * a3i;
    if (!(rad > 0.0))
        throw ConstraintViolation("gamma_from_alpha: (Re a1 - Re a2)^2 > (Im a3)^2 violated");
    if (d12 == 0.0) throw ConstraintViolation("gamma_from_alpha: Re a2 != Re a1 violated");
    const double t3 = a4i / std::sqrt(rad);
    if (!(std::abs(t3) < 1.0))
        throw ConstraintViolation(
            "gamma_from_alpha: |Im a4| < sqrt((Re a1 - Re a2)^2 - (Im a3)^2) violated");
    const double t4 = a3i / (-d12);
    if (!(std::abs(t4) < 1.0))
        throw ConstraintViolation("gamma_from_alpha: |Im a3| < |Re a2 - Re a1| violated");
    return {std::atanh(t3), std::atanh(t4)};
}

AlgebraElement to_element(const AlphaVector& a) { return {a[0], a[1], a[2], a[3]}; }

AlgebraElement to_element(const BetaVector& b) { return {b[0], b[1], b[2], b[3]}; }

double conservation_residual(const std::function<AlgebraElement(double)>& invariant,
                             const std::function<AlgebraElement(double)>& hamiltonian, double t,
                             double t_max, double h) {
    const AlgebraElement dI = num::derivative(invariant, t, h, num::Interval{0.0, t_max});
    return (dI - commutator(invariant(t), hamiltonian(t)) * I).norm();
}

double similarity_residual(const AlphaVector& alpha, const BetaVector& beta,
                           const DysonParams& p) {
    return (conjugate(p, to_element(alpha)) - to_element(beta)).norm();
}

} // namespace tdpt
