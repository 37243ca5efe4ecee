// algebra.cpp — Structure constants and closed-form group elements in the fundamental representation

#include "tdpt/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tdpt {

namespace {

constexpr cplx I{0.0, 1.0};

// [K_i, K_j] for 0-based i, j, expanded in the K-basis.
AlgebraElement bracket(int i, int j) {
    if (i == j) return {};
    if (i > j) return -bracket(j, i);
    if (i == 0 && j == 1) return {};
    if (i == 0 && j == 2) return {0, 0, 0, I};
    if (i == 0 && j == 3) return {0, 0, -I, 0};
    if (i == 1 && j == 2) return {0, 0, 0, -I};
    if (i == 1 && j == 3) return {0, 0, I, 0};
    return {I / 2.0, -I / 2.0, 0, 0}; // (2, 3)
}

} // namespace

AlgebraElement AlgebraElement::basis(int i) {
    if (i < 1 || i > 4) throw std::out_of_range("AlgebraElement::basis: index must be 1..4");
    AlgebraElement e;
    e[i - 1] = 1.0;
    return e;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r;
    for (int i = 0; i < 4; ++i) r[i] = (*this)[i] + o[i];
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r;
    for (int i = 0; i < 4; ++i) r[i] = (*this)[i] - o[i];
    return r;
}

AlgebraElement AlgebraElement::operator-() const { return *this * cplx(-1.0); }

AlgebraElement AlgebraElement::operator*(cplx s) const {
    AlgebraElement r;
    for (int i = 0; i < 4; ++i) r[i] = (*this)[i] * s;
    return r;
}

double AlgebraElement::norm() const {
    double s = 0.0;
    for (const auto& v : c) s += std::norm(v);
    return std::sqrt(s);
}

double AlgebraElement::max_imag() const {
    double m = 0.0;
    for (const auto& v : c) m = std::max(m, std::abs(v.imag()));
    return m;
}

AlgebraElement AlgebraElement::adjoint() const {
    AlgebraElement r;
    for (int i = 0; i < 4; ++i) r[i] = std::conj((*this)[i]);
    return r;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            const cplx w = a[i] * b[j];
            if (w == cplx{}) continue;
            r = r + bracket(i, j) * w;
        }
    }
    return r;
}

Eigen::Matrix2cd to_matrix(const AlgebraElement& a) {
    Eigen::Matrix2cd m;
    m(0, 0) = a[0];
    m(1, 1) = a[1];
    // K3 = sigma_1 / 2, K4 = sigma_2 / 2
    m(0, 1) = 0.5 * (a[2] - I * a[3]);
    m(1, 0) = 0.5 * (a[2] + I * a[3]);
    return m;
}

AlgebraElement from_matrix(const Eigen::Matrix2cd& m) {
    return {m(0, 0), m(1, 1), m(0, 1) + m(1, 0), I * (m(0, 1) - m(1, 0))};
}

Eigen::Matrix2cd generator_exp(int i, double s) {
    Eigen::Matrix2cd e = Eigen::Matrix2cd::Zero();
    switch (i) {
    case 1:
        e(0, 0) = std::exp(s);
        e(1, 1) = 1.0;
        break;
    case 2:
        e(0, 0) = 1.0;
        e(1, 1) = std::exp(s);
        break;
    case 3: {
        const double ch = std::cosh(s / 2), sh = std::sinh(s / 2);
        e << ch, sh, sh, ch;
        break;
    }
    case 4: {
        const double ch = std::cosh(s / 2), sh = std::sinh(s / 2);
        e << ch, -I * sh, I * sh, ch;
        break;
    }
    default:
        throw std::out_of_range("generator_exp: index must be 1..4");
    }
    return e;
}

Eigen::Matrix2cd eta_matrix(const DysonParams& p) {
    return generator_exp(1, p.g1) * generator_exp(2, p.g2) * generator_exp(3, p.g3) *
           generator_exp(4, p.g4);
}

Eigen::Matrix2cd eta_inverse_matrix(const DysonParams& p) {
    return generator_exp(4, -p.g4) * generator_exp(3, -p.g3) * generator_exp(2, -p.g2) *
           generator_exp(1, -p.g1);
}

AlgebraElement conjugate(const DysonParams& p, const AlgebraElement& a) {
    return from_matrix(eta_matrix(p) * to_matrix(a) * eta_inverse_matrix(p));
}

AlgebraElement conjugate_inverse(const DysonParams& p, const AlgebraElement& a) {
    return from_matrix(eta_inverse_matrix(p) * to_matrix(a) * eta_matrix(p));
}

AlgebraElement time_term(const DysonParams& p, const DysonRates& r) {
    const Eigen::Matrix2cd e12 = generator_exp(1, p.g1) * generator_exp(2, p.g2);
    const Eigen::Matrix2cd e12i = generator_exp(2, -p.g2) * generator_exp(1, -p.g1);
    const Eigen::Matrix2cd e123 = e12 * generator_exp(3, p.g3);
    const Eigen::Matrix2cd e123i = generator_exp(3, -p.g3) * e12i;

    Eigen::Matrix2cd sum = r.g1 * to_matrix(AlgebraElement::basis(1)) +
                           r.g2 * to_matrix(AlgebraElement::basis(2));
    sum += r.g3 * (e12 * to_matrix(AlgebraElement::basis(3)) * e12i);
    sum += r.g4 * (e123 * to_matrix(AlgebraElement::basis(4)) * e123i);
    return from_matrix(I * sum);
}

} // namespace tdpt
