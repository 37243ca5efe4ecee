// invariants.hpp — Lewis-Riesenfeld invariants I_H(t), I_h(t) and the Dyson parameters they determine

#pragma once

#include "tdpt/algebra.hpp"
#include "tdpt/dyson.hpp"
#include "tdpt/profiles.hpp"

#include <array>
#include <functional>

namespace tdpt {

using AlphaVector = std::array<cplx, 4>;
using BetaVector = std::array<double, 4>;

inline constexpr double constraint_tolerance = 1e-12;

// Integration constants of the invariants. Construction checks
//   Im c1 = 0,  4 Re c3 Im c3 = -Re c2 Im c2,  Im c4 = 0,  2 |Re c3| > |Im c2| (or Im c2 = 0).
// The matching route and the identification of (q2, q3) further need Re c3 > 0.
class InvariantCoeffs {
public:
    InvariantCoeffs(cplx c1, cplx c2, cplx c3, cplx c4, double c5 = 0.0, double c6 = 0.0,
                    double c7 = 0.0, double c8 = 0.0);

    // Constants compatible with the Dyson constants (q2, q3):
    //   Im c2 = -2 q3 Re c3,  Im c3 fixed by the matching constraint,  c4 = q2,
    // with c5..c8 chosen so that the evolution route reproduces beta_from_match on `branch`.
    static InvariantCoeffs for_dyson_constants(double q2, double q3, double c1, double c2r,
                                               double c3r, int branch = +1);

    cplx c1() const noexcept { return c_[0]; }
    cplx c2() const noexcept { return c_[1]; }
    cplx c3() const noexcept { return c_[2]; }
    cplx c4() const noexcept { return c_[3]; }
    double c5() const noexcept { return r_[0]; }
    double c6() const noexcept { return r_[1]; }
    double c7() const noexcept { return r_[2]; }
    double c8() const noexcept { return r_[3]; }

    // Dyson constants implied by the identification q2 = Re c4, q3 = -Im c2 / (2 Re c3).
    EPConstants dyson_constants() const;

private:
    std::array<cplx, 4> c_;
    std::array<double, 4> r_;
};

AlphaVector alpha_coeffs(const InvariantCoeffs& c, const TimeProfile& lambda, double t);
BetaVector beta_from_match(const InvariantCoeffs& c, const TimeProfile& lambda, double t,
                           int branch = +1);
BetaVector beta_from_evolution(double c5, double c6, double c7, double c8, double b_diff_integral);
BetaVector beta_from_evolution(const InvariantCoeffs& c, const TimeProfile& lambda, double t);
// Antiderivative of b1 - b2: arctan[(Im c2 / sqrt(4 Re c3^2 - Im c2^2)) tanh(Re c4 - Lambda)].
double b_diff_integral(const InvariantCoeffs& c, const TimeProfile& lambda, double t);
GammaPair gamma_from_alpha(const AlphaVector& alpha);

AlgebraElement to_element(const AlphaVector& alpha);
AlgebraElement to_element(const BetaVector& beta);

// ||dI/dt - i [I, H]|| with dI/dt by fourth-order finite differences.
double conservation_residual(const std::function<AlgebraElement(double)>& invariant,
                             const std::function<AlgebraElement(double)>& hamiltonian, double t,
                             double t_max, double h = 1e-3);

// ||eta I_H eta^{-1} - I_h||
double similarity_residual(const AlphaVector& alpha, const BetaVector& beta, const DysonParams& p);

} // namespace tdpt
