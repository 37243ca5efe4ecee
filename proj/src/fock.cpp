// fock.cpp — Block-diagonal Fock-space oracle in extended precision

#include "tdpt/fock.hpp"

#include "tdpt/dyson.hpp"
#include "tdpt/errors.hpp"
#include "tdpt/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <string>

namespace tdpt::fock {

namespace {

const Complex I_mp{Real(0), Real(1)};

Complex lift(cplx z) { return Complex(Real(z.real()), Real(z.imag())); }

Block zero_block(int k) { return Block::Zero(k + 1, k + 1); }

// i^(r - c)
Complex phase(int r, int c) {
    switch (((r - c) % 4 + 4) % 4) {
    case 0: return Complex(Real(1), Real(0));
    case 1: return Complex(Real(0), Real(1));
    case 2: return Complex(Real(-1), Real(0));
    default: return Complex(Real(0), Real(-1));
    }
}

void check_cutoff(int cutoff, int buffer) {
    if (cutoff < min_cutoff || cutoff > max_cutoff)
        throw std::invalid_argument("Fock cutoff " + std::to_string(cutoff) + " outside [" +
                                    std::to_string(min_cutoff) + ", " +
                                    std::to_string(max_cutoff) + "]");
    if (buffer < 0 || buffer > cutoff)
        throw std::invalid_argument("Fock buffer must lie in [0, cutoff]");
}

template <class F>
FockOperator blockwise(const FockOperator& a, F&& f) {
    FockOperator r{a.cutoff, a.buffer, {}};
    r.blocks.reserve(a.blocks.size());
    for (std::size_t k = 0; k < a.blocks.size(); ++k) r.blocks.push_back(f(k));
    return r;
}

void check_compatible(const FockOperator& a, const FockOperator& b) {
    if (a.blocks.size() != b.blocks.size())
        throw std::invalid_argument("Fock operators with different cutoffs");
}

bool is_sorted_less(const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
}

} // namespace

int basis_index(int na, int nb) {
    const int k = na + nb;
    return k * (k + 1) / 2 + nb;
}

int dimension(int cutoff) { return (cutoff + 1) * (cutoff + 2) / 2; }

FockOperator FockOperator::operator+(const FockOperator& o) const {
    check_compatible(*this, o);
    return blockwise(*this, [&](std::size_t k) -> Block { return blocks[k] + o.blocks[k]; });
}

FockOperator FockOperator::operator-(const FockOperator& o) const {
    check_compatible(*this, o);
    return blockwise(*this, [&](std::size_t k) -> Block { return blocks[k] - o.blocks[k]; });
}

FockOperator FockOperator::operator*(const FockOperator& o) const {
    check_compatible(*this, o);
    return blockwise(*this, [&](std::size_t k) -> Block { return blocks[k] * o.blocks[k]; });
}

FockOperator FockOperator::operator*(const Complex& s) const {
    return blockwise(*this, [&](std::size_t k) -> Block { return blocks[k] * s; });
}

FockOperator FockOperator::adjoint() const {
    return blockwise(*this, [&](std::size_t k) -> Block { return blocks[k].adjoint(); });
}

Eigen::MatrixXcd FockOperator::dense() const {
    const int dim = dimension(cutoff);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k <= cutoff; ++k) {
        const int off = k * (k + 1) / 2;
        const Block& b = blocks[static_cast<std::size_t>(k)];
        for (int r = 0; r <= k; ++r)
            for (int c = 0; c <= k; ++c) m(off + r, off + c) = to_double(b(r, c));
    }
    return m;
}

double FockOperator::max_abs(bool safe_only) const {
    Real m(0);
    const int last = safe_only ? safe_max() : cutoff;
    for (int k = 0; k <= last; ++k) {
        const Block& b = blocks[static_cast<std::size_t>(k)];
        for (Eigen::Index i = 0; i < b.size(); ++i) m = std::max(m, Real(abs(b(i))));
    }
    return to_double(m);
}

bool FockOperator::is_hermitian(double tol) const {
    for (const Block& b : blocks) {
        if (to_double(Real((b - b.adjoint()).norm())) > tol) return false;
    }
    return true;
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) {
    return a * b - b * a;
}

double frobenius(const Block& b) { return to_double(Real(b.norm())); }

std::array<FockOperator, 4> build_generators(int cutoff, int buffer) {
    check_cutoff(cutoff, buffer);
    std::array<FockOperator, 4> K;
    for (auto& op : K) {
        op.cutoff = cutoff;
        op.buffer = buffer;
    }
    const Real half = Real(1) / 2;
    for (int k = 0; k <= cutoff; ++k) {
        Block k1 = zero_block(k), k2 = zero_block(k), k3 = zero_block(k), k4 = zero_block(k);
        for (int i = 0; i <= k; ++i) {
            // index i carries n_b = i, n_a = k - i
            k1(i, i) = Complex(Real(k - i) + half);
            k2(i, i) = Complex(Real(i) + half);
            if (i >= 1) {
                // a^dagger b |k-i, i> = sqrt((k-i+1) i) |k-i+1, i-1>
                const Real s = sqrt(Real((k - i + 1) * i)) / 2;
                k3(i - 1, i) = Complex(s);
                k3(i, i - 1) = Complex(s);
                k4(i - 1, i) = Complex(Real(0), -s);
                k4(i, i - 1) = Complex(Real(0), s);
            }
        }
        K[0].blocks.push_back(std::move(k1));
        K[1].blocks.push_back(std::move(k2));
        K[2].blocks.push_back(std::move(k3));
        K[3].blocks.push_back(std::move(k4));
    }
    return K;
}

FockSpace::FockSpace(int cutoff, int buffer)
    : cutoff_(cutoff), buffer_(buffer), gens_(build_generators(cutoff, buffer)) {
    for (int k = 0; k <= cutoff; ++k) {
        const Block& b = gens_[2].blocks[static_cast<std::size_t>(k)];
        RealBlock r(k + 1, k + 1);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) r(i, j) = b(i, j).real();
        Eigen::SelfAdjointEigenSolver<RealBlock> es(r);
        k3_vectors_.push_back(es.eigenvectors());
        std::vector<Real> vals(static_cast<std::size_t>(k + 1));
        for (int i = 0; i <= k; ++i) vals[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        k3_values_.push_back(std::move(vals));
    }
}

Block FockSpace::algebra_block(int k, const AlgebraElement& a) const {
    const auto kk = static_cast<std::size_t>(k);
    Block b = gens_[0].blocks[kk] * lift(a[0]);
    for (std::size_t i = 1; i < 4; ++i) b += gens_[i].blocks[kk] * lift(a[static_cast<int>(i)]);
    return b;
}

FockOperator FockSpace::from_algebra(const AlgebraElement& a) const {
    FockOperator r{cutoff_, buffer_, {}};
    for (int k = 0; k <= cutoff_; ++k) r.blocks.push_back(algebra_block(k, a));
    return r;
}

RealBlock FockSpace::exp_k3_block(int k, double s) const {
    const RealBlock& V = k3_vectors_[static_cast<std::size_t>(k)];
    const auto& d = k3_values_[static_cast<std::size_t>(k)];
    RealBlock scaled = V;
    for (int c = 0; c <= k; ++c) {
        const Real e = exp(Real(s) * d[static_cast<std::size_t>(c)]);
        scaled.col(c) *= e;
    }
    return scaled * V.transpose();
}

Block FockSpace::exp_generator_block(int k, int i, double s) const {
    const Real half = Real(1) / 2;
    Block b = zero_block(k);
    if (i == 1 || i == 2) {
        for (int j = 0; j <= k; ++j) {
            const Real n = (i == 1) ? Real(k - j) + half : Real(j) + half;
            b(j, j) = Complex(exp(Real(s) * n));
        }
    } else if (i == 3 || i == 4) {
        // exp(s K4) = D exp(s K3) D^dagger with D = diag(i^r)
        const RealBlock e = exp_k3_block(k, s);
        for (int r = 0; r <= k; ++r)
            for (int c = 0; c <= k; ++c)
                b(r, c) = (i == 3) ? Complex(e(r, c)) : phase(r, c) * e(r, c);
    } else {
        throw std::out_of_range("exp_generator: index must be 1..4");
    }
    return b;
}

FockOperator FockSpace::exp_generator(int i, double s) const {
    FockOperator r{cutoff_, buffer_, {}};
    for (int k = 0; k <= cutoff_; ++k) r.blocks.push_back(exp_generator_block(k, i, s));
    return r;
}

Block FockSpace::eta_block(int k, const DysonParams& p) const {
    Block b = exp_generator_block(k, 3, p.g3) * exp_generator_block(k, 4, p.g4);
    // leading diagonal factors scale rows
    const Real half = Real(1) / 2;
    for (int r = 0; r <= k; ++r)
        b.row(r) *= Complex(exp(Real(p.g1) * (Real(k - r) + half) + Real(p.g2) * (Real(r) + half)));
    return b;
}

Block FockSpace::eta_inverse_block(int k, const DysonParams& p) const {
    Block b = exp_generator_block(k, 4, -p.g4) * exp_generator_block(k, 3, -p.g3);
    const Real half = Real(1) / 2;
    for (int c = 0; c <= k; ++c)
        b.col(c) *=
            Complex(exp(-Real(p.g1) * (Real(k - c) + half) - Real(p.g2) * (Real(c) + half)));
    return b;
}

FockOperator FockSpace::eta(const DysonParams& p) const {
    FockOperator r{cutoff_, buffer_, {}};
    for (int k = 0; k <= cutoff_; ++k) r.blocks.push_back(eta_block(k, p));
    return r;
}

FockOperator FockSpace::eta_inverse(const DysonParams& p) const {
    FockOperator r{cutoff_, buffer_, {}};
    for (int k = 0; k <= cutoff_; ++k) r.blocks.push_back(eta_inverse_block(k, p));
    return r;
}

FockOperator FockSpace::metric(const DysonParams& p) const {
    const FockOperator e = eta(p);
    return e.adjoint() * e;
}

FockOperator build_eta(const DysonParams& p, int cutoff, int buffer) {
    return FockSpace(cutoff, buffer).eta(p);
}

double algebra_closure_error(const FockSpace& sp) {
    const auto& K1 = sp.generator(1);
    const auto& K2 = sp.generator(2);
    const auto& K3 = sp.generator(3);
    const auto& K4 = sp.generator(4);
    const Complex half_i = I_mp / Real(2);
    const FockOperator errs[6] = {
        commutator(K1, K2),
        commutator(K1, K3) - K4 * I_mp,
        commutator(K1, K4) + K3 * I_mp,
        commutator(K2, K3) + K4 * I_mp,
        commutator(K2, K4) - K3 * I_mp,
        commutator(K3, K4) - (K1 - K2) * half_i,
    };
    double m = 0.0;
    for (const auto& e : errs) m = std::max(m, e.max_abs());
    return m;
}

double verify_dyson(const FockSpace& sp, const Scenario& s,
                    const std::function<DysonParams(double)>& params, double t, double delta) {
    const num::Stencil st = num::first_derivative_stencil(t, delta, {0.0, s.t_max()});
    std::vector<DysonParams> nodes;
    for (int j = 0; j < st.size; ++j) nodes.push_back(params(st.nodes[static_cast<std::size_t>(j)]));
    const DysonParams p = params(t);
    const AlgebraElement H = non_hermitian_hamiltonian(s.a.evaluate(t), s.lambda.evaluate(t));
    const AlgebraElement h = decoupled_hamiltonian(s, t);
    double m = 0.0;
    for (int k = 0; k <= sp.safe_max(); ++k) {
        const Block e = sp.eta_block(k, p);
        const Block ei = sp.eta_inverse_block(k, p);
        Block ed = Block::Zero(k + 1, k + 1);
        for (int j = 0; j < st.size; ++j)
            ed += sp.eta_block(k, nodes[static_cast<std::size_t>(j)]) *
                  Complex(Real(st.weights[static_cast<std::size_t>(j)]));
        const Block R = e * sp.algebra_block(k, H) * ei + ed * ei * I_mp - sp.algebra_block(k, h);
        m = std::max(m, frobenius(R));
    }
    return m;
}

double verify_dyson(const FockSpace& sp, const Scenario& s, double t, double delta) {
    return verify_dyson(sp, s, [&s](double tt) { return s.params(tt); }, t, delta);
}

double quasi_hermiticity_residual(const FockOperator& H, const FockOperator& rho,
                                  const FockOperator& rho_dot, bool relative) {
    double m = 0.0;
    for (int k = 0; k <= rho.safe_max(); ++k) {
        const auto kk = static_cast<std::size_t>(k);
        const Block r = H.blocks[kk].adjoint() * rho.blocks[kk] - rho.blocks[kk] * H.blocks[kk] -
                        rho_dot.blocks[kk] * I_mp;
        double v = frobenius(r);
        if (relative) v /= frobenius(rho.blocks[kk]);
        m = std::max(m, v);
    }
    return m;
}

double verify_quasi_hermiticity(const FockSpace& sp, const Scenario& s, double t, double delta) {
    const num::Stencil st = num::first_derivative_stencil(t, delta, {0.0, s.t_max()});
    std::vector<DysonParams> nodes;
    for (int j = 0; j < st.size; ++j)
        nodes.push_back(s.params(st.nodes[static_cast<std::size_t>(j)]));
    const DysonParams p = s.params(t);
    const AlgebraElement H = non_hermitian_hamiltonian(s.a.evaluate(t), s.lambda.evaluate(t));
    double m = 0.0;
    for (int k = 0; k <= sp.safe_max(); ++k) {
        const Block e = sp.eta_block(k, p);
        const Block rho = e.adjoint() * e;
        Block rd = Block::Zero(k + 1, k + 1);
        for (int j = 0; j < st.size; ++j) {
            const Block ej = sp.eta_block(k, nodes[static_cast<std::size_t>(j)]);
            rd += (ej.adjoint() * ej) * Complex(Real(st.weights[static_cast<std::size_t>(j)]));
        }
        const Block Hk = sp.algebra_block(k, H);
        const Block r = Hk.adjoint() * rho - rho * Hk - rd * I_mp;
        m = std::max(m, frobenius(r) / frobenius(rho));
    }
    return m;
}

Real min_metric_eigenvalue(const FockSpace& sp, const DysonParams& p) {
    Real m = std::numeric_limits<Real>::max();
    for (int k = 0; k <= sp.safe_max(); ++k) {
        const Block e = sp.eta_block(k, p);
        Eigen::SelfAdjointEigenSolver<Block> es(e.adjoint() * e, Eigen::EigenvaluesOnly);
        m = std::min(m, Real(es.eigenvalues().minCoeff()));
    }
    return m;
}

std::vector<std::vector<cplx>> broken_spectrum_numeric(double a, double lambda, int cutoff,
                                                       int buffer) {
    check_cutoff(cutoff, buffer);
    std::vector<std::vector<cplx>> out;
    for (int k = 0; k <= cutoff - buffer; ++k) {
        Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(k + 1, k + 1);
        for (int i = 0; i <= k; ++i) {
            b(i, i) = a * (k + 1.0);
            if (i >= 1) {
                const double s = 0.5 * std::sqrt(double((k - i + 1) * i));
                b(i - 1, i) = cplx(0.0, lambda * s);
                b(i, i - 1) = cplx(0.0, lambda * s);
            }
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(b, false);
        std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + k + 1);
        std::sort(ev.begin(), ev.end(), [](cplx x, cplx y) {
            return x.imag() != y.imag() ? x.imag() < y.imag() : x.real() < y.real();
        });
        out.push_back(std::move(ev));
    }
    return out;
}

double invariant_eigen_flow(const FockSpace& sp,
                            const std::function<AlgebraElement(double)>& invariant,
                            const std::vector<double>& times) {
    std::vector<std::vector<Complex>> ref;
    Real drift(0);
    for (std::size_t n = 0; n < times.size(); ++n) {
        const AlgebraElement inv = invariant(times[n]);
        for (int k = 0; k <= sp.safe_max(); ++k) {
            const auto kk = static_cast<std::size_t>(k);
            Eigen::ComplexEigenSolver<Block> es(sp.algebra_block(k, inv), false);
            std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + k + 1);
            std::sort(ev.begin(), ev.end(), is_sorted_less);
            if (n == 0) {
                ref.push_back(std::move(ev));
                continue;
            }
            for (std::size_t i = 0; i < ev.size(); ++i)
                drift = std::max(drift, Real(abs(ev[i] - ref[kk][i])));
        }
    }
    return to_double(drift);
}

FockState FockState::zero(int cutoff, int buffer) {
    check_cutoff(cutoff, buffer);
    FockState s{cutoff, buffer, {}};
    for (int k = 0; k <= cutoff; ++k) s.blocks.push_back(BlockVector::Zero(k + 1));
    return s;
}

FockState FockState::basis(int cutoff, int na, int nb, int buffer) {
    if (na < 0 || nb < 0 || na + nb > cutoff)
        throw TruncationError("basis state outside the truncated space");
    FockState s = zero(cutoff, buffer);
    s.blocks[static_cast<std::size_t>(na + nb)](nb) = Complex(Real(1));
    return s;
}

FockState FockState::random(int cutoff, std::mt19937_64& rng, int buffer) {
    FockState s = zero(cutoff, buffer);
    std::normal_distribution<double> g(0.0, 1.0);
    Real nrm(0);
    for (int k = 0; k <= cutoff - buffer; ++k) {
        for (int i = 0; i <= k; ++i) {
            const double re = g(rng), im = g(rng);
            s.blocks[static_cast<std::size_t>(k)](i) = Complex(Real(re), Real(im));
            nrm += Real(re * re + im * im);
        }
    }
    const Real inv = Real(1) / sqrt(nrm);
    for (auto& b : s.blocks) b *= Complex(inv);
    return s;
}

bool FockState::supported_on_safe() const {
    for (int k = cutoff - buffer + 1; k <= cutoff; ++k) {
        const BlockVector& b = blocks[static_cast<std::size_t>(k)];
        for (Eigen::Index i = 0; i < b.size(); ++i)
            if (b(i) != Complex(Real(0))) return false;
    }
    return true;
}

Complex inner(const FockState& a, const FockState& b) {
    Complex s(Real(0));
    for (std::size_t k = 0; k < a.blocks.size(); ++k) s += a.blocks[k].dot(b.blocks[k]);
    return s;
}

FockState apply(const FockOperator& op, const FockState& psi) {
    FockState r{psi.cutoff, psi.buffer, {}};
    for (std::size_t k = 0; k < psi.blocks.size(); ++k)
        r.blocks.push_back(op.blocks[k] * psi.blocks[k]);
    return r;
}

Complex expectation(const FockOperator& a, const FockState& psi) {
    return inner(psi, apply(a, psi));
}

FockState map_state(const FockSpace& sp, const DysonParams& p, const FockState& psi_h) {
    if (psi_h.cutoff != sp.cutoff())
        throw std::invalid_argument("map_state: state and space have different cutoffs");
    if (!psi_h.supported_on_safe())
        throw TruncationError("map_state: state has weight outside the truncation-safe blocks");
    return apply(sp.eta_inverse(p), psi_h);
}

double frame_equivalence(const FockSpace& sp, const Scenario& s, double t,
                         const FockState& psi_h) {
    const DysonParams p = s.params(t);
    const double av = s.a.evaluate(t), lv = s.lambda.evaluate(t);
    const FockOperator h = sp.from_algebra(hermitian_counterpart(av, lv, p.g3, p.g4));
    const FockOperator Ht = sp.from_algebra(energy_operator(av, lv, p.g3, p.g4));
    const FockState psi_H = map_state(sp, p, psi_h);
    const Complex lhs = expectation(h, psi_h);
    const Complex rhs = inner(psi_H, apply(sp.metric(p) * Ht, psi_H));
    return to_double(Real(abs(lhs - rhs)));
}

} // namespace tdpt::fock
