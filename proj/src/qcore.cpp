#include "qstat/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qstat {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix make_pauli(int which) {
  ComplexMatrix m(2, 2);
  const Complex i{0.0, 1.0};
  switch (which) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

ComplexMatrix identity_of(int dim) {
  return ComplexMatrix::Identity(dim, dim);
}

void canonicalize_phase(ComplexMatrix& ket) {
  for (Eigen::Index i = 0; i < ket.rows(); ++i) {
    const double mod = std::abs(ket(i, 0));
    if (mod > tol::phase_floor) {
      ket *= std::conj(ket(i, 0)) / mod;
      // Force the pivot exactly real; the rotation above leaves residual
      // imaginary round-off that would otherwise fail entrywise equality.
      ket(i, 0) = Complex(std::abs(ket(i, 0)), 0.0);
      return;
    }
  }
}

void check_labels_distinct(const std::vector<Outcome>& outcomes) {
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    for (std::size_t j = i + 1; j < outcomes.size(); ++j)
      if (std::abs(outcomes[i].label - outcomes[j].label) < 1e-12)
        throw std::invalid_argument("measurement labels must be distinct");
}

void check_common_dim(const std::vector<Outcome>& outcomes, const char* what) {
  if (outcomes.empty())
    throw std::invalid_argument(std::string(what) + ": no outcomes");
  const Eigen::Index d = outcomes.front().op.rows();
  for (const Outcome& o : outcomes)
    if (o.op.rows() != d || o.op.cols() != d)
      throw std::invalid_argument(std::string(what) +
                                  ": elements differ in dimension");
}

}  // namespace

const ComplexMatrix& pauli_x() { static const ComplexMatrix m = make_pauli(1); return m; }
const ComplexMatrix& pauli_y() { static const ComplexMatrix m = make_pauli(2); return m; }
const ComplexMatrix& pauli_z() { static const ComplexMatrix m = make_pauli(3); return m; }
const ComplexMatrix& identity2() { static const ComplexMatrix m = make_pauli(0); return m; }

double BlochVector::norm() const { return std::sqrt(ax * ax + ay * ay + az * az); }

double BlochVector::dot(const BlochVector& o) const {
  return ax * o.ax + ay * o.ay + az * o.az;
}

BlochVector BlochVector::cross(const BlochVector& o) const {
  return BlochVector{ay * o.az - az * o.ay, az * o.ax - ax * o.az,
                     ax * o.ay - ay * o.ax};
}

BlochVector BlochVector::scaled(double s) const {
  return BlochVector{s * ax, s * ay, s * az};
}

BlochVector BlochVector::normalized() const {
  const double r = norm();
  if (r < 1e-14)
    throw std::invalid_argument("cannot normalize the zero Bloch vector");
  return scaled(1.0 / r);
}

ComplexMatrix dot_sigma(const BlochVector& a) {
  return a.ax * pauli_x() + a.ay * pauli_y() + a.az * pauli_z();
}

PureState PureState::from_ket(const ComplexMatrix& ket) {
  if (ket.cols() != 1 || ket.rows() < 1)
    throw std::invalid_argument("PureState: ket must be a column vector");
  const double norm = ket.norm();
  if (std::abs(norm - 1.0) > tol::unit_norm)
    throw std::invalid_argument("PureState: ket is not normalized (norm " +
                                std::to_string(norm) + ")");
  ComplexMatrix v = ket / norm;
  canonicalize_phase(v);
  return PureState(std::move(v));
}

PureState PureState::normalized(const ComplexMatrix& ket) {
  PureState s = normalized_with_phase(ket);
  canonicalize_phase(s.ket_);
  return s;
}

PureState PureState::normalized_with_phase(const ComplexMatrix& ket) {
  if (ket.cols() != 1 || ket.rows() < 1)
    throw std::invalid_argument("PureState: ket must be a column vector");
  const double norm = ket.norm();
  if (norm < 1e-14)
    throw std::invalid_argument("PureState: cannot normalize a zero ket");
  return PureState(ket / norm);
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("DensityMatrix: matrix is not square");
  if (!is_hermitian(m))
    throw std::invalid_argument("DensityMatrix: matrix is not self-adjoint");
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  if (!is_psd(m, tol::psd_clamp))
    throw std::invalid_argument("DensityMatrix: matrix is not PSD");
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.ket() * psi.ket().adjoint());
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

PureState tensor(const PureState& a, const PureState& b) {
  // Product of canonical-phase states is canonical: the first significant
  // component is the product of the two pivots, both real nonnegative.
  return PureState::normalized_with_phase(tensor(a.ket(), b.ket()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::from_matrix(tensor(a.matrix(), b.matrix()));
}

Pvm Pvm::from_outcomes(std::vector<Outcome> outcomes) {
  check_common_dim(outcomes, "Pvm");
  check_labels_distinct(outcomes);
  const Eigen::Index d = outcomes.front().op.rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const Outcome& o : outcomes) {
    if (!is_hermitian(o.op))
      throw std::invalid_argument("Pvm: projector is not self-adjoint");
    if ((o.op * o.op - o.op).norm() > tol::povm_sum)
      throw std::invalid_argument("Pvm: element is not idempotent");
    sum += o.op;
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    for (std::size_t j = i + 1; j < outcomes.size(); ++j)
      if ((outcomes[i].op * outcomes[j].op).norm() > tol::povm_sum)
        throw std::invalid_argument("Pvm: projectors are not orthogonal");
  if ((sum - identity_of(d)).norm() > tol::povm_sum)
    throw std::invalid_argument("Pvm: projectors do not sum to the identity");
  return Pvm(std::move(outcomes));
}

Povm Povm::from_outcomes(std::vector<Outcome> outcomes) {
  check_common_dim(outcomes, "Povm");
  check_labels_distinct(outcomes);
  const Eigen::Index d = outcomes.front().op.rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const Outcome& o : outcomes) {
    if (!is_hermitian(o.op))
      throw std::invalid_argument("Povm: element is not self-adjoint");
    if (!is_psd(o.op, 1e-9))
      throw std::invalid_argument("Povm: element is not PSD");
    sum += o.op;
  }
  if ((sum - identity_of(d)).norm() > 1e-9)
    throw std::invalid_argument("Povm: elements do not sum to the identity");
  return Povm(std::move(outcomes));
}

Povm::Povm(const Pvm& pvm) : outcomes_(pvm.outcomes()) {}

Ensemble Ensemble::from_components(std::vector<WeightedState> components) {
  if (components.empty())
    throw std::invalid_argument("Ensemble: no components");
  const int d = components.front().state.dim();
  double total = 0.0;
  for (const WeightedState& c : components) {
    if (c.weight < 0.0)
      throw std::invalid_argument("Ensemble: negative weight");
    if (c.state.dim() != d)
      throw std::invalid_argument("Ensemble: mixed dimensions");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("Ensemble: weights sum to " +
                                std::to_string(total) + ", not 1");
  return Ensemble(std::move(components));
}

PureState polar_to_ket(double theta, double phi) {
  if (theta < 0.0 || theta > kPi)
    throw std::invalid_argument("polar_to_ket: theta outside [0, pi]");
  if (phi < 0.0 || phi >= 2.0 * kPi)
    throw std::invalid_argument("polar_to_ket: phi outside [0, 2pi)");
  ComplexMatrix ket(2, 1);
  ket(0, 0) = Complex(std::cos(theta / 2.0), 0.0);
  ket(1, 0) = std::exp(Complex(0.0, phi)) * std::sin(theta / 2.0);
  return PureState::normalized(ket);
}

BlochVector ket_to_bloch(const PureState& psi) {
  return density_to_bloch(DensityMatrix::from_pure(psi));
}

DensityMatrix bloch_to_density(const BlochVector& a) {
  if (a.norm() > 1.0 + 1e-10)
    throw std::invalid_argument("bloch_to_density: |a| > 1");
  return DensityMatrix::from_matrix(0.5 * (identity2() + dot_sigma(a)));
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2)
    throw std::invalid_argument("density_to_bloch: not a qubit state");
  return BlochVector{expectation(rho, pauli_x()), expectation(rho, pauli_y()),
                     expectation(rho, pauli_z())};
}

DensityMatrix mix(const Ensemble& ens) {
  const int d = ens.components().front().state.dim();
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (const WeightedState& c : ens.components())
    acc += c.weight * c.state.matrix();
  return DensityMatrix::from_matrix(acc);
}

ComplexMatrix evolution_operator(const ComplexMatrix& h, double t) {
  if (!is_hermitian(h))
    throw std::invalid_argument("evolution_operator: H is not self-adjoint");
  return matrix_function(
      h, [t](double e) { return std::exp(Complex(0.0, -e * t)); });
}

PureState evolve(const PureState& psi, const ComplexMatrix& h, double t) {
  return apply_unitary(psi, evolution_operator(h, t));
}

DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& h, double t) {
  return apply_unitary(rho, evolution_operator(h, t));
}

namespace {
void check_unitary(const ComplexMatrix& u, int dim) {
  if (u.rows() != dim || u.cols() != dim)
    throw std::invalid_argument("apply_unitary: dimension mismatch");
  if ((u.adjoint() * u - identity_of(dim)).norm() > tol::unitarity)
    throw std::invalid_argument("apply_unitary: matrix is not unitary");
}
}  // namespace

PureState apply_unitary(const PureState& psi, const ComplexMatrix& u) {
  check_unitary(u, psi.dim());
  return PureState::normalized(u * psi.ket());
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  check_unitary(u, rho.dim());
  return DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
}

Pvm observable_to_pvm(const ComplexMatrix& x) {
  const HermitianEig eig = hermitian_eig(x);
  const Eigen::Index d = eig.values.size();
  std::vector<Outcome> outcomes;
  Eigen::Index i = 0;
  while (i < d) {
    // Cluster eigenvalues against the group's first member.
    Eigen::Index j = i;
    double label_sum = 0.0;
    while (j < d && eig.values(j) - eig.values(i) <= tol::eig_merge) {
      label_sum += eig.values(j);
      ++j;
    }
    ComplexMatrix proj = ComplexMatrix::Zero(d, d);
    for (Eigen::Index k = i; k < j; ++k)
      proj += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
    proj = 0.5 * (proj + proj.adjoint());
    outcomes.push_back(
        Outcome{label_sum / static_cast<double>(j - i), std::move(proj)});
    i = j;
  }
  return Pvm::from_outcomes(std::move(outcomes));
}

ComplexMatrix pvm_to_observable(const Pvm& m) {
  const int d = m.dim();
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (const Outcome& o : m.outcomes()) x += o.label * o.op;
  return x;
}

Pvm spin_pvm(const BlochVector& v) {
  if (std::abs(v.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("spin_pvm: direction is not a unit vector");
  std::vector<Outcome> outcomes;
  outcomes.push_back(Outcome{+1.0, 0.5 * (identity2() + dot_sigma(v))});
  outcomes.push_back(Outcome{-1.0, 0.5 * (identity2() - dot_sigma(v))});
  return Pvm::from_outcomes(std::move(outcomes));
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& x) {
  if (x.rows() != rho.dim() || x.cols() != rho.dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  if (!is_hermitian(x))
    throw std::invalid_argument("expectation: observable is not self-adjoint");
  const Complex val = (rho.matrix() * x).trace();
  if (std::abs(val.imag()) > 1e-10)
    throw std::runtime_error("expectation: value has imaginary part " +
                             std::to_string(val.imag()));
  return val.real();
}

namespace {
std::vector<std::pair<double, double>> distribution_impl(
    const DensityMatrix& rho, const std::vector<Outcome>& outcomes) {
  if (static_cast<int>(outcomes.front().op.rows()) != rho.dim())
    throw std::invalid_argument("outcome_distribution: dimension mismatch");
  std::vector<std::pair<double, double>> dist;
  dist.reserve(outcomes.size());
  double total = 0.0;
  for (const Outcome& o : outcomes) {
    const double p = (rho.matrix() * o.op).trace().real();
    if (p < -1e-12)
      throw std::runtime_error("outcome_distribution: negative probability " +
                               std::to_string(p));
    dist.emplace_back(o.label, p);
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::runtime_error(
        "outcome_distribution: probabilities sum to " + std::to_string(total));
  return dist;
}
}  // namespace

std::vector<std::pair<double, double>> outcome_distribution(
    const DensityMatrix& rho, const Povm& m) {
  return distribution_impl(rho, m.outcomes());
}

std::vector<std::pair<double, double>> outcome_distribution(
    const DensityMatrix& rho, const Pvm& m) {
  return distribution_impl(rho, m.outcomes());
}

std::size_t sample_index(const std::vector<std::pair<double, double>>& dist,
                         RngStream& rng) {
  std::vector<std::size_t> order(dist.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&dist](std::size_t a, std::size_t b) {
    return dist[a].first < dist[b].first;
  });
  const double u = rng.next_double();
  double cum = 0.0;
  std::size_t last_reachable = dist.size();
  for (std::size_t idx : order) {
    const double p = dist[idx].second;
    if (p < 1e-15) continue;  // unreachable by contract
    last_reachable = idx;
    cum += p;
    if (u < cum) return idx;
  }
  if (last_reachable == dist.size())
    throw std::runtime_error("sample_index: distribution has no mass");
  return last_reachable;  // u fell into the trailing round-off sliver
}

PureMeasurement measure(const PureState& psi, const Pvm& m, RngStream& rng) {
  const auto dist =
      outcome_distribution(DensityMatrix::from_pure(psi), m);
  const std::size_t k = sample_index(dist, rng);
  const ComplexMatrix projected = m.outcomes()[k].op * psi.ket();
  return PureMeasurement{dist[k].first, PureState::normalized(projected),
                         dist[k].second};
}

MixedMeasurement measure(const DensityMatrix& rho, const Pvm& m,
                         RngStream& rng) {
  const auto dist = outcome_distribution(rho, m);
  const std::size_t k = sample_index(dist, rng);
  const ComplexMatrix& proj = m.outcomes()[k].op;
  const ComplexMatrix post = proj * rho.matrix() * proj / dist[k].second;
  return MixedMeasurement{dist[k].first, DensityMatrix::from_matrix(post),
                          dist[k].second};
}

namespace {
// Merge (value, prob) pairs whose values agree within tol::eig_merge.
// Labels become probability-weighted means so they line up with the
// eigenvalues a merged spectral decomposition would report.
std::vector<std::pair<double, double>> merge_values(
    std::vector<std::pair<double, double>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::pair<double, double>> merged;
  std::size_t i = 0;
  while (i < pairs.size()) {
    std::size_t j = i;
    double mass = 0.0, value_sum = 0.0;
    int count = 0;
    while (j < pairs.size() &&
           pairs[j].first - pairs[i].first <= tol::eig_merge) {
      mass += pairs[j].second;
      value_sum += pairs[j].first;
      ++count;
      ++j;
    }
    merged.emplace_back(value_sum / count, mass);
    i = j;
  }
  return merged;
}
}  // namespace

UnconsciousCheck unconscious_physicist_check(
    const DensityMatrix& rho, const ComplexMatrix& x,
    const std::function<double(double)>& f) {
  const Pvm mx = observable_to_pvm(x);
  std::vector<std::pair<double, double>> mapped;
  for (const auto& [label, p] : outcome_distribution(rho, mx))
    mapped.emplace_back(f(label), p);
  const auto dist1 = merge_values(std::move(mapped));

  const ComplexMatrix fx =
      matrix_function(x, [&f](double e) { return Complex(f(e), 0.0); });
  auto dist2 = merge_values(outcome_distribution(rho, observable_to_pvm(fx)));

  UnconsciousCheck out{dist1, dist2, 0.0, true};
  if (dist1.size() != dist2.size()) {
    out.consistent = false;
    out.max_probability_deviation =
        std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  for (std::size_t i = 0; i < dist1.size(); ++i) {
    if (std::abs(dist1[i].first - dist2[i].first) > tol::eig_merge)
      out.consistent = false;
    out.max_probability_deviation =
        std::max(out.max_probability_deviation,
                 std::abs(dist1[i].second - dist2[i].second));
  }
  if (out.max_probability_deviation > 1e-10) out.consistent = false;
  return out;
}

ComplexMatrix lift_observable(const ComplexMatrix& x, Side side,
                              int other_dim) {
  if (!is_hermitian(x))
    throw std::invalid_argument("lift_observable: not self-adjoint");
  if (other_dim < 1)
    throw std::invalid_argument("lift_observable: bad dimension");
  const ComplexMatrix one = identity_of(other_dim);
  return side == Side::first ? tensor(x, one) : tensor(one, x);
}

namespace {
// Orthonormal pair spanning the plane orthogonal to n, chosen
// deterministically: the seed axis is the coordinate axis least aligned
// with n (ties to the lower index).
std::pair<BlochVector, BlochVector> plane_frame(const BlochVector& n) {
  const BlochVector axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  int best = 0;
  double best_align = std::abs(n.dot(axes[0]));
  for (int i = 1; i < 3; ++i) {
    const double a = std::abs(n.dot(axes[i]));
    if (a < best_align) {
      best = i;
      best_align = a;
    }
  }
  const BlochVector seed = axes[best];
  const double proj = seed.dot(n);
  const BlochVector e1 =
      BlochVector{seed.ax - proj * n.ax, seed.ay - proj * n.ay,
                  seed.az - proj * n.az}
          .normalized();
  return {e1, n.cross(e1)};
}
}  // namespace

std::vector<BlochVector> triad_directions(const BlochVector& normal) {
  const BlochVector n = normal.normalized();
  const auto [e1, e2] = plane_frame(n);
  std::vector<BlochVector> dirs;
  for (int i = 0; i < 3; ++i) {
    const double ang = 2.0 * kPi * i / 3.0;
    const double c = std::cos(ang), s = std::sin(ang);
    dirs.push_back(BlochVector{c * e1.ax + s * e2.ax, c * e1.ay + s * e2.ay,
                               c * e1.az + s * e2.az});
  }
  return dirs;
}

Povm triad_povm(const BlochVector& normal) {
  std::vector<Outcome> outcomes;
  int label = 1;
  for (const BlochVector& v : triad_directions(normal))
    outcomes.push_back(
        Outcome{static_cast<double>(label++),
                (identity2() + dot_sigma(v)) / 3.0});
  return Povm::from_outcomes(std::move(outcomes));
}

std::vector<BlochVector> sphere_directions(int k) {
  if (k < 4)
    throw std::invalid_argument("sphere_directions: need at least 4 points");
  std::vector<BlochVector> dirs;
  dirs.reserve(k);
  if (k == 6) {
    // Octahedron: antipodal cancellation makes the element sum exact.
    dirs = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    return dirs;
  }
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < k; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / k;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    dirs.push_back(BlochVector{r * std::cos(phi), r * std::sin(phi), z});
  }
  return dirs;
}

Povm sphere_povm(int k) {
  const std::vector<BlochVector> dirs = sphere_directions(k);
  std::vector<ComplexMatrix> raw;
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  for (const BlochVector& v : dirs) {
    raw.push_back((identity2() + dot_sigma(v)) / static_cast<double>(k));
    s += raw.back();
  }
  const ComplexMatrix correction =
      matrix_function(s, [](double e) { return Complex(1.0 / std::sqrt(e), 0.0); });
  std::vector<Outcome> outcomes;
  for (int i = 0; i < k; ++i) {
    ComplexMatrix m = correction * raw[i] * correction;
    m = 0.5 * (m + m.adjoint());
    outcomes.push_back(Outcome{static_cast<double>(i + 1), std::move(m)});
  }
  return Povm::from_outcomes(std::move(outcomes));
}

NaimarkDilation naimark_dilation(const Povm& m) {
  const int d = m.dim();
  const int n = m.size();
  const int dn = d * n;

  // V e_j = sum_i sqrt(M_i) e_j (x) e_i, laid out system-major to match
  // the tensor() index convention.
  ComplexMatrix v = ComplexMatrix::Zero(dn, d);
  for (int i = 0; i < n; ++i) {
    const ComplexMatrix root = matrix_sqrt(m.outcomes()[i].op);
    for (int s = 0; s < d; ++s)
      for (int j = 0; j < d; ++j) v(s * n + i, j) += root(s, j);
  }
  if ((v.adjoint() * v - identity_of(d)).norm() > tol::naimark)
    throw std::invalid_argument(
        "naimark_dilation: V is not an isometry; input is not a POVM");

  ComplexMatrix u = ComplexMatrix::Zero(dn, dn);
  // Columns j*n land on V e_j; the remaining slots take completion vectors
  // obtained by orthonormalizing standard basis vectors in index order.
  std::vector<int> open_slots;
  for (int j = 0; j < d; ++j) u.col(j * n) = v.col(j);
  for (int col = 0; col < dn; ++col)
    if (col % n != 0) open_slots.push_back(col);

  std::vector<int> filled;
  for (int j = 0; j < d; ++j) filled.push_back(j * n);
  std::size_t next_slot = 0;
  for (int cand = 0; cand < dn && next_slot < open_slots.size(); ++cand) {
    Eigen::VectorXcd res = Eigen::VectorXcd::Zero(dn);
    res(cand) = Complex(1.0, 0.0);
    for (int c : filled) res -= u.col(c).dot(res) * u.col(c);
    // One re-orthogonalization pass keeps the completion orthonormal to
    // machine precision even when the candidate is nearly dependent.
    for (int c : filled) res -= u.col(c).dot(res) * u.col(c);
    const double norm = res.norm();
    if (norm > 1e-6) {
      const int slot = open_slots[next_slot++];
      u.col(slot) = res / norm;
      filled.push_back(slot);
    }
  }
  if (next_slot != open_slots.size() ||
      (u.adjoint() * u - identity_of(dn)).norm() > tol::naimark)
    throw std::runtime_error("naimark_dilation: unitary completion failed");

  std::vector<Outcome> ancilla_outcomes;
  for (int i = 0; i < n; ++i) {
    ComplexMatrix proj = ComplexMatrix::Zero(n, n);
    proj(i, i) = Complex(1.0, 0.0);
    ancilla_outcomes.push_back(
        Outcome{m.outcomes()[i].label, tensor(identity_of(d), proj)});
  }
  ComplexMatrix anc0 = ComplexMatrix::Zero(n, 1);
  anc0(0, 0) = Complex(1.0, 0.0);
  return NaimarkDilation{n, std::move(u),
                         Pvm::from_outcomes(std::move(ancilla_outcomes)),
                         PureState::from_ket(anc0)};
}

}  // namespace qstat
