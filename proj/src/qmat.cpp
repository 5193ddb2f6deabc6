#include "qstat/qmat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace qstat {

namespace {

[[noreturn]] void fail_dims(const char* op, const ComplexMatrix& a,
                            const ComplexMatrix& b) {
  throw std::invalid_argument(
      std::string(op) + ": incompatible shapes " + std::to_string(a.rows()) +
      "x" + std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
      "x" + std::to_string(b.cols()));
}

}  // namespace

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, a.norm());
  return (a - a.adjoint()).norm() <= rel_tol * scale;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) fail_dims("multiply", a, b);
  return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

Complex trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("trace: matrix is not square");
  return a.trace();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

HermitianEig hermitian_eig(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("hermitian_eig: matrix is not square");
  if (!is_hermitian(a))
    throw std::invalid_argument("hermitian_eig: matrix is not self-adjoint");
  // Symmetrize so the solver sees an exactly Hermitian operand.
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix matrix_function(const ComplexMatrix& a,
                              const std::function<Complex(double)>& f) {
  const HermitianEig eig = hermitian_eig(a);
  Eigen::VectorXcd mapped(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const Complex y = f(eig.values(i));
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag()))
      throw std::domain_error(
          "matrix_function: f is non-finite at eigenvalue " +
          std::to_string(eig.values(i)));
    mapped(i) = y;
  }
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& a) {
  const HermitianEig eig = hermitian_eig(a);
  Eigen::VectorXd clamped = eig.values;
  for (Eigen::Index i = 0; i < clamped.size(); ++i) {
    if (clamped(i) < -tol::psd_clamp)
      throw std::domain_error(
          "matrix_sqrt: eigenvalue " + std::to_string(clamped(i)) +
          " is negative beyond the clamp window");
    if (clamped(i) < 0.0) clamped(i) = 0.0;
  }
  const Eigen::VectorXcd roots =
      clamped.array().sqrt().cast<Complex>().matrix();
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

bool is_psd(const ComplexMatrix& a, double tolerance) {
  const HermitianEig eig = hermitian_eig(a);  // throws if non-Hermitian
  return eig.values.minCoeff() >= -tolerance;
}

}  // namespace qstat
