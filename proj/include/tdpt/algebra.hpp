// algebra.hpp — Four-generator Lie algebra K1..K4, its 2x2 representation and group conjugation

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace tdpt {

using cplx = std::complex<double>;

// c1 K1 + c2 K2 + c3 K3 + c4 K4 with complex coefficients.
struct AlgebraElement {
    std::array<cplx, 4> c{};

    AlgebraElement() = default;
    AlgebraElement(cplx c1, cplx c2, cplx c3, cplx c4) : c{c1, c2, c3, c4} {}

    static AlgebraElement basis(int i);

    cplx& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const cplx& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(cplx s) const;
    friend AlgebraElement operator*(cplx s, const AlgebraElement& a) { return a * s; }

    // Euclidean norm of the coefficient vector.
    double norm() const;
    double max_imag() const;
    // Generators are self-adjoint, so Hermiticity is reality of all coefficients.
    bool is_hermitian(double tol = 1e-10) const { return max_imag() < tol; }
    // Coefficients of the Hermitian adjoint (complex conjugates).
    AlgebraElement adjoint() const;
};

// Group parameters of eta = exp(g1 K1) exp(g2 K2) exp(g3 K3) exp(g4 K4).
struct DysonParams {
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;
    double g4 = 0.0;
};

struct DysonRates {
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;
    double g4 = 0.0;
};

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

Eigen::Matrix2cd to_matrix(const AlgebraElement& a);
AlgebraElement from_matrix(const Eigen::Matrix2cd& m);

// Exact exponential exp(s K_i) in the 2x2 representation, i in 1..4.
Eigen::Matrix2cd generator_exp(int i, double s);

Eigen::Matrix2cd eta_matrix(const DysonParams& p);
Eigen::Matrix2cd eta_inverse_matrix(const DysonParams& p);

// eta A eta^{-1}
AlgebraElement conjugate(const DysonParams& p, const AlgebraElement& a);
// eta^{-1} A eta
AlgebraElement conjugate_inverse(const DysonParams& p, const AlgebraElement& a);

// i (d eta/dt) eta^{-1} from the ordered product rule.
AlgebraElement time_term(const DysonParams& p, const DysonRates& rates);

} // namespace tdpt
