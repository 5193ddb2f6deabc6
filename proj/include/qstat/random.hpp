#pragma once

#include "qstat/qcore.hpp"
#include "qstat/rng.hpp"

namespace qstat {

// Seeded generators for property batteries and CLI experiments. All draws
// come from the supplied stream only, so batteries are reproducible and
// partitionable across workers via child streams.

BlochVector random_unit_bloch(RngStream& rng);

// Uniform on the ball, radius capped at `max_radius`.
BlochVector random_interior_bloch(RngStream& rng, double max_radius = 0.999);

// Haar-like pure state from normalized complex Gaussian components.
PureState random_pure(RngStream& rng, int dim);

// Full-rank Wishart density G G^dagger / trace.
DensityMatrix random_density(RngStream& rng, int dim);

ComplexMatrix random_hermitian(RngStream& rng, int dim);

ComplexMatrix random_unitary(RngStream& rng, int dim);

// k PSD blocks from Wishart factors, symmetrized to sum to the identity.
Povm random_povm(RngStream& rng, int dim, int k);

}  // namespace qstat
