#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace qstat {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Shared numeric tolerances. These are part of the library contract and are
// pinned by the test suite; change them only together with the tests.
namespace tol {
inline constexpr double herm_rel = 1e-10;     // Hermiticity, relative to Frobenius norm
inline constexpr double eig_merge = 1e-8;     // eigenvalue clustering in spectral ops
inline constexpr double psd_clamp = 1e-10;    // negative-eigenvalue clamp window
inline constexpr double unit_norm = 1e-8;     // accepted drift for incoming unit kets
inline constexpr double phase_floor = 1e-12;  // canonical-phase pivot threshold
inline constexpr double unitarity = 1e-10;
inline constexpr double povm_sum = 1e-10;     // completeness and projector checks
inline constexpr double naimark = 1e-8;       // isometry and dilation unitarity
inline constexpr double support_cut = 1e-12;  // scaled by dimension where used
inline constexpr double deriv_herm = 1e-9;    // self-adjointness of model derivatives
inline constexpr double bc_gap = 1e-8;        // information-gap PSD slack
inline constexpr double info_cond_max = 1e10; // refuse information-matrix inversion above
inline constexpr double target_recon = 1e-4;  // mixture reconstruction of a target matrix
inline constexpr double mle_grad = 1e-9;
inline constexpr int mle_max_iter = 50;
inline constexpr double bloch_margin = 1e-6;  // open-ball restriction for mixed models
}  // namespace tol

// Frobenius norm of a - a^dagger relative to max(1, |a|_F).
bool is_hermitian(const ComplexMatrix& a, double rel_tol = tol::herm_rel);

// Dimension-checked product. Throws std::invalid_argument on mismatch; Eigen
// itself would abort, which callers cannot recover from.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);

// Trace of a square matrix; throws on non-square input.
Complex trace(const ComplexMatrix& a);

// Kronecker product with row-major block convention:
// result((i * b.rows() + k), (j * b.cols() + l)) = a(i, j) * b(k, l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEig {
  Eigen::VectorXd values;  // ascending
  ComplexMatrix vectors;   // orthonormal columns, vectors.col(i) <-> values(i)
};

// Spectral decomposition of a self-adjoint matrix. Input must be Hermitian
// within tol::herm_rel; the strictly Hermitian part (a + a^dagger)/2 is
// decomposed so round-off in the input cannot leak into complex eigenvalues.
HermitianEig hermitian_eig(const ComplexMatrix& a);

// f applied to the spectrum: V diag(f(lambda)) V^dagger. Eigenvalues whose
// images coincide within tol::eig_merge share a merged eigenspace, which the
// spectral form produces by construction. Throws std::domain_error if f
// returns a non-finite value on any eigenvalue.
ComplexMatrix matrix_function(const ComplexMatrix& a,
                              const std::function<Complex(double)>& f);

// Principal square root of a positive semidefinite matrix. Eigenvalues in
// [-tol::psd_clamp, 0) are clamped to zero; anything below that window is a
// genuine negativity and throws std::domain_error.
ComplexMatrix matrix_sqrt(const ComplexMatrix& a);

// True when the smallest eigenvalue is >= -tolerance. Throws on
// non-Hermitian input rather than answering a malformed question.
bool is_psd(const ComplexMatrix& a, double tolerance = tol::psd_clamp);

}  // namespace qstat
