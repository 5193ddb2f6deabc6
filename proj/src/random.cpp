#include "qstat/random.hpp"

#include <cmath>
#include <stdexcept>

namespace qstat {

namespace {
Complex complex_normal(RngStream& rng) {
  // Unit-variance complex Gaussian (each component variance 1/2).
  return Complex(rng.next_normal(), rng.next_normal()) * std::sqrt(0.5);
}

ComplexMatrix ginibre(RngStream& rng, int rows, int cols) {
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = complex_normal(rng);
  return g;
}
}  // namespace

BlochVector random_unit_bloch(RngStream& rng) {
  BlochVector v{rng.next_normal(), rng.next_normal(), rng.next_normal()};
  while (v.norm() < 1e-8)
    v = BlochVector{rng.next_normal(), rng.next_normal(), rng.next_normal()};
  return v.normalized();
}

BlochVector random_interior_bloch(RngStream& rng, double max_radius) {
  const BlochVector dir = random_unit_bloch(rng);
  const double r = max_radius * std::cbrt(rng.next_double());
  return dir.scaled(r);
}

PureState random_pure(RngStream& rng, int dim) {
  if (dim < 1) throw std::invalid_argument("random_pure: bad dimension");
  ComplexMatrix ket = ginibre(rng, dim, 1);
  while (ket.norm() < 1e-8) ket = ginibre(rng, dim, 1);
  return PureState::normalized(ket);
}

DensityMatrix random_density(RngStream& rng, int dim) {
  const ComplexMatrix g = ginibre(rng, dim, dim);
  ComplexMatrix w = g * g.adjoint();
  w = 0.5 * (w + w.adjoint());
  return DensityMatrix::from_matrix(w / w.trace().real());
}

ComplexMatrix random_hermitian(RngStream& rng, int dim) {
  const ComplexMatrix g = ginibre(rng, dim, dim);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(RngStream& rng, int dim) {
  const ComplexMatrix g = ginibre(rng, dim, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  // Fix the phase convention so the distribution is Haar rather than
  // QR-convention dependent.
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    if (std::abs(rjj) > 0.0) q.col(j) *= rjj / std::abs(rjj);
  }
  return q;
}

Povm random_povm(RngStream& rng, int dim, int k) {
  if (k < 1) throw std::invalid_argument("random_povm: need k >= 1");
  std::vector<ComplexMatrix> blocks;
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < k; ++i) {
    const ComplexMatrix g = ginibre(rng, dim, dim);
    ComplexMatrix a = g * g.adjoint();
    // Small ridge keeps S well conditioned when k is small.
    a += 1e-3 * ComplexMatrix::Identity(dim, dim);
    a = 0.5 * (a + a.adjoint());
    blocks.push_back(a);
    s += a;
  }
  const ComplexMatrix correction = matrix_function(
      s, [](double e) { return Complex(1.0 / std::sqrt(e), 0.0); });
  std::vector<Outcome> outcomes;
  for (int i = 0; i < k; ++i) {
    ComplexMatrix m = correction * blocks[i] * correction;
    m = 0.5 * (m + m.adjoint());
    outcomes.push_back(Outcome{static_cast<double>(i + 1), std::move(m)});
  }
  return Povm::from_outcomes(std::move(outcomes));
}

}  // namespace qstat
