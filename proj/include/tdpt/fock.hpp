// fock.hpp — Truncated two-mode Fock representation of K1..K4 used as an independent oracle
//
// Every generator preserves the total boson number k = n_a + n_b, so operators are
// stored as (k+1)-dimensional blocks, k = 0..N. Within block k the basis is ordered by
// n_b = 0..k. Blocks with k > N - buffer are excluded from assertions.
//
// The Dyson map has condition number ~exp(|g3| k) on block k, which exceeds double
// precision for the parameter ranges of interest, so block arithmetic is carried out
// in 100-digit binary floating point.

#pragma once

#include "tdpt/algebra.hpp"
#include "tdpt/energy.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <complex>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace tdpt::fock {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                           boost::multiprecision::et_off>;

} // namespace tdpt::fock

namespace Eigen {

template <>
struct NumTraits<tdpt::fock::Real> : GenericNumTraits<tdpt::fock::Real> {
    using Real = tdpt::fock::Real;
    using NonInteger = tdpt::fock::Real;
    using Nested = tdpt::fock::Real;
    using Literal = tdpt::fock::Real;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
    static inline int digits10() { return std::numeric_limits<Real>::digits10; }
    static inline Real dummy_precision() { return Real(1e-90); }
};

} // namespace Eigen

namespace tdpt::fock {

using Complex = std::complex<Real>;
using Block = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using BlockVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealBlock = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr int min_cutoff = 2;
inline constexpr int max_cutoff = 60;
inline constexpr int default_buffer = 2;

// Position of |n_a, n_b> in the full basis ordered by total number, then n_b.
int basis_index(int na, int nb);
int dimension(int cutoff);

struct FockOperator {
    int cutoff = 0;
    int buffer = default_buffer;
    std::vector<Block> blocks;

    int safe_max() const { return cutoff - buffer; }

    FockOperator operator+(const FockOperator& o) const;
    FockOperator operator-(const FockOperator& o) const;
    FockOperator operator*(const FockOperator& o) const;
    FockOperator operator*(const Complex& s) const;
    FockOperator adjoint() const;

    // Full matrix of dimension (N+1)(N+2)/2 in double precision.
    Eigen::MatrixXcd dense() const;
    // Largest entry modulus over all blocks, or only the safe ones.
    double max_abs(bool safe_only = false) const;
    bool is_hermitian(double tol = 1e-30) const;
};

FockOperator commutator(const FockOperator& a, const FockOperator& b);

double frobenius(const Block& b);

// K1..K4 for cutoff N (2 <= N <= 60).
std::array<FockOperator, 4> build_generators(int cutoff, int buffer = default_buffer);

// Generators plus cached block eigendecompositions of K3 for closed-form group elements.
class FockSpace {
public:
    explicit FockSpace(int cutoff, int buffer = default_buffer);

    int cutoff() const noexcept { return cutoff_; }
    int buffer() const noexcept { return buffer_; }
    int safe_max() const noexcept { return cutoff_ - buffer_; }
    // i in 1..4
    const FockOperator& generator(int i) const { return gens_[static_cast<std::size_t>(i - 1)]; }

    FockOperator from_algebra(const AlgebraElement& a) const;
    FockOperator exp_generator(int i, double s) const;
    FockOperator eta(const DysonParams& p) const;
    FockOperator eta_inverse(const DysonParams& p) const;
    // rho = eta^dagger eta
    FockOperator metric(const DysonParams& p) const;

    // Single blocks of the operators above, k in 0..cutoff.
    Block algebra_block(int k, const AlgebraElement& a) const;
    Block exp_generator_block(int k, int i, double s) const;
    Block eta_block(int k, const DysonParams& p) const;
    Block eta_inverse_block(int k, const DysonParams& p) const;

private:
    RealBlock exp_k3_block(int k, double s) const;

    int cutoff_;
    int buffer_;
    std::array<FockOperator, 4> gens_;
    std::vector<RealBlock> k3_vectors_;
    std::vector<std::vector<Real>> k3_values_;
};

FockOperator build_eta(const DysonParams& p, int cutoff, int buffer = default_buffer);

// Largest deviation from the six brackets of the algebra over all blocks.
double algebra_closure_error(const FockSpace& space);

// max over safe blocks of ||eta H eta^{-1} + i eta' eta^{-1} - h||_F, eta' by
// fourth-order finite differences of step delta, h = f+ K1 + f- K2.
double verify_dyson(const FockSpace& space, const Scenario& s,
                    const std::function<DysonParams(double)>& params, double t,
                    double delta = 1e-3);
double verify_dyson(const FockSpace& space, const Scenario& s, double t, double delta = 1e-3);

// max over safe blocks of ||H^dagger rho - rho H - i rho'||_F, divided by ||rho||_F on
// each block when `relative` is set.
double quasi_hermiticity_residual(const FockOperator& H, const FockOperator& rho,
                                  const FockOperator& rho_dot, bool relative = true);
double verify_quasi_hermiticity(const FockSpace& space, const Scenario& s, double t,
                                double delta = 1e-3);

// Smallest eigenvalue of rho over the safe blocks (returned as a double; it can be tiny).
Real min_metric_eigenvalue(const FockSpace& space, const DysonParams& p);

// Eigenvalues of a (K1 + K2) + i lambda K3, one vector per safe block.
std::vector<std::vector<cplx>> broken_spectrum_numeric(double a, double lambda, int cutoff,
                                                       int buffer = default_buffer);

// Eigenvalues of the truncated invariant on each safe block, tracked over `times`;
// returns the largest change relative to the first time.
double invariant_eigen_flow(const FockSpace& space,
                            const std::function<AlgebraElement(double)>& invariant,
                            const std::vector<double>& times);

struct FockState {
    int cutoff = 0;
    int buffer = default_buffer;
    std::vector<BlockVector> blocks;

    static FockState zero(int cutoff, int buffer = default_buffer);
    static FockState basis(int cutoff, int na, int nb, int buffer = default_buffer);
    // Normalized random state supported on the safe blocks.
    static FockState random(int cutoff, std::mt19937_64& rng, int buffer = default_buffer);

    bool supported_on_safe() const;
};

Complex inner(const FockState& a, const FockState& b);
FockState apply(const FockOperator& op, const FockState& psi);
// <psi| A |psi>
Complex expectation(const FockOperator& a, const FockState& psi);

// psi_H = eta^{-1} psi_h; throws TruncationError if psi_h leaves the safe blocks.
FockState map_state(const FockSpace& space, const DysonParams& p, const FockState& psi_h);

// |<psi_h|h|psi_h> - <psi_H|rho H~|psi_H>| with H~ from the closed-form energy operator.
double frame_equivalence(const FockSpace& space, const Scenario& s, double t,
                         const FockState& psi_h);

inline double to_double(const Real& r) { return r.convert_to<double>(); }
inline cplx to_double(const Complex& c) { return {to_double(c.real()), to_double(c.imag())}; }

} // namespace tdpt::fock
