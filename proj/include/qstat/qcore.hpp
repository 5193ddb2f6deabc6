#pragma once

#include <utility>
#include <vector>

#include "qstat/qmat.hpp"
#include "qstat/rng.hpp"

namespace qstat {

// Pauli matrices and the 2x2 identity, built once.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& identity2();

struct BlochVector {
  double ax = 0.0;
  double ay = 0.0;
  double az = 0.0;

  double norm() const;
  double dot(const BlochVector& o) const;
  BlochVector cross(const BlochVector& o) const;
  BlochVector scaled(double s) const;
  BlochVector normalized() const;  // throws on the zero vector
};

// a.sigma contracted with the Pauli vector.
ComplexMatrix dot_sigma(const BlochVector& a);

// Unit ket with a fixed global phase: the first component of modulus above
// tol::phase_floor is made real and nonnegative, so equal states compare
// equal entrywise. Construction paths that must preserve relative phases
// (the Bell expansion) use normalized_with_phase and say so at the call
// site.
class PureState {
 public:
  // Requires an already-normalized ket (drift up to tol::unit_norm is
  // corrected); throws std::invalid_argument otherwise.
  static PureState from_ket(const ComplexMatrix& ket);

  // Rescales any nonzero ket to unit norm, then canonicalizes the phase.
  static PureState normalized(const ComplexMatrix& ket);

  // Rescales without touching the phase.
  static PureState normalized_with_phase(const ComplexMatrix& ket);

  const ComplexMatrix& ket() const { return ket_; }
  int dim() const { return static_cast<int>(ket_.rows()); }

 private:
  explicit PureState(ComplexMatrix ket) : ket_(std::move(ket)) {}
  ComplexMatrix ket_;
};

class DensityMatrix {
 public:
  // Validates self-adjointness, unit trace (1e-10), and spectrum >= -1e-10.
  static DensityMatrix from_matrix(const ComplexMatrix& m);
  static DensityMatrix from_pure(const PureState& psi);

  const ComplexMatrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  double purity() const;  // trace(rho^2)

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

struct Outcome {
  double label;
  ComplexMatrix op;
};

// Projector-valued measure: orthogonal projectors summing to the identity.
class Pvm {
 public:
  static Pvm from_outcomes(std::vector<Outcome> outcomes);
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  int dim() const { return static_cast<int>(outcomes_.front().op.rows()); }
  int size() const { return static_cast<int>(outcomes_.size()); }

 private:
  explicit Pvm(std::vector<Outcome> o) : outcomes_(std::move(o)) {}
  std::vector<Outcome> outcomes_;
};

// Operator-valued measure: PSD elements summing to the identity.
class Povm {
 public:
  static Povm from_outcomes(std::vector<Outcome> outcomes);
  Povm(const Pvm& pvm);  // every PVM is a POVM
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  int dim() const { return static_cast<int>(outcomes_.front().op.rows()); }
  int size() const { return static_cast<int>(outcomes_.size()); }

 private:
  explicit Povm(std::vector<Outcome> o) : outcomes_(std::move(o)) {}
  std::vector<Outcome> outcomes_;
};

struct WeightedState {
  double weight;
  DensityMatrix state;
};

class Ensemble {
 public:
  // Weights must be nonnegative and sum to 1 within 1e-12.
  static Ensemble from_components(std::vector<WeightedState> components);
  const std::vector<WeightedState>& components() const { return components_; }

 private:
  explicit Ensemble(std::vector<WeightedState> c) : components_(std::move(c)) {}
  std::vector<WeightedState> components_;
};

// ---- states and evolution ----------------------------------------------

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>. Half-angle convention, so the
// Bloch vector of the result is the unit vector with co-latitude theta and
// longitude phi.
PureState polar_to_ket(double theta, double phi);

BlochVector ket_to_bloch(const PureState& psi);

// rho = (1 + a.sigma)/2.
DensityMatrix bloch_to_density(const BlochVector& a);
BlochVector density_to_bloch(const DensityMatrix& rho);

DensityMatrix mix(const Ensemble& ens);

// U = exp(-iHt) by spectral decomposition; hbar = 1 throughout.
ComplexMatrix evolution_operator(const ComplexMatrix& h, double t);
PureState evolve(const PureState& psi, const ComplexMatrix& h, double t);
DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& h, double t);

PureState apply_unitary(const PureState& psi, const ComplexMatrix& u);
DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

// ---- observables and measurement ---------------------------------------

// Spectral decomposition of an observable into a PVM; eigenvalues within
// tol::eig_merge of each other share one outcome whose label is their
// probability-blind mean.
Pvm observable_to_pvm(const ComplexMatrix& x);
ComplexMatrix pvm_to_observable(const Pvm& m);

// Outcomes (+1, (1 + v.sigma)/2) and (-1, (1 - v.sigma)/2).
Pvm spin_pvm(const BlochVector& v);

double expectation(const DensityMatrix& rho, const ComplexMatrix& x);

// Trace-rule probabilities in the measure's stored outcome order.
std::vector<std::pair<double, double>> outcome_distribution(
    const DensityMatrix& rho, const Povm& m);
std::vector<std::pair<double, double>> outcome_distribution(
    const DensityMatrix& rho, const Pvm& m);

// Inverse-CDF draw over (label, probability) pairs taken in ascending label
// order; outcomes with probability below 1e-15 are unreachable. Returns the
// index into `dist`.
std::size_t sample_index(const std::vector<std::pair<double, double>>& dist,
                         RngStream& rng);

struct PureMeasurement {
  double label;
  PureState posterior;
  double probability;
};

struct MixedMeasurement {
  double label;
  DensityMatrix posterior;
  double probability;
};

PureMeasurement measure(const PureState& psi, const Pvm& m, RngStream& rng);
MixedMeasurement measure(const DensityMatrix& rho, const Pvm& m, RngStream& rng);

struct UnconsciousCheck {
  // distribution of f(label) when X is measured, merged over equal images
  std::vector<std::pair<double, double>> function_of_outcomes;
  // distribution of labels when f(X) is measured
  std::vector<std::pair<double, double>> transformed_observable;
  double max_probability_deviation;
  bool consistent;  // distributions equal within 1e-10 after merging
};

UnconsciousCheck unconscious_physicist_check(
    const DensityMatrix& rho, const ComplexMatrix& x,
    const std::function<double(double)>& f);

enum class Side { first, second };

// X (x) 1 or 1 (x) X on a product space.
ComplexMatrix lift_observable(const ComplexMatrix& x, Side side, int other_dim);

// ---- POVM constructions -------------------------------------------------

// Three unit vectors at 120 degrees in the plane orthogonal to `normal`.
std::vector<BlochVector> triad_directions(const BlochVector& normal);

// Elements (1 + v_i.sigma)/3 over the triad directions; labels 1..3.
Povm triad_povm(const BlochVector& normal);

// Fibonacci-sphere point set; k = 6 is the octahedron (coordinate axes),
// whose element sum is the identity with no correction needed.
std::vector<BlochVector> sphere_directions(int k);

// Discretization of the uniform spin POVM: elements (1 + v_i.sigma)/k,
// exactly symmetrized by S^{-1/2} M_i S^{-1/2} so the completeness
// invariant holds at every k. Requires k >= 4.
Povm sphere_povm(int k);

struct NaimarkDilation {
  int ancilla_dim;
  ComplexMatrix joint_unitary;  // (d*n) x (d*n)
  Pvm ancilla_pvm;              // 1 (x) |i><i|, labels copied from the POVM
  PureState ancilla_state;      // |0> on the ancilla
};

// Isometry V = sum_i sqrt(M_i) (x) |i>, completed to a unitary by
// orthonormalizing standard basis vectors in index order (fixed so the
// construction is deterministic). Throws when V fails to be an isometry
// beyond tol::naimark, which signals an invalid POVM.
NaimarkDilation naimark_dilation(const Povm& m);

}  // namespace qstat
