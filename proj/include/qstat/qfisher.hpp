#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qstat/qcore.hpp"

namespace qstat {

using InfoMatrix = Eigen::MatrixXd;   // p x p, symmetric
using ParamVector = Eigen::VectorXd;

// Parametric family of density matrices theta -> rho(theta) on a box
// domain. derivative_at may be left empty: derivatives then fall back to
// central finite differences (step 1e-6) with a two-step Richardson
// consistency check, since a silently wrong closed-form derivative is worse
// than a slow numeric one.
struct ParametricModel {
  std::string id;
  int dim = 0;
  int param_dim = 0;
  std::function<DensityMatrix(const ParamVector&)> state_at;
  std::function<ComplexMatrix(const ParamVector&, int)> derivative_at;
  ParamVector lo, hi;  // closed box; operations require interior points
};

// rho(theta, phi) = |psi(theta, phi)><psi(theta, phi)| in the half-angle
// parametrization; domain (0, pi) x [0, 2pi).
ParametricModel pure_qubit_model();

// rho(a) = (1 + a.sigma)/2 on the open ball |a| <= 1 - tol::bloch_margin.
ParametricModel bloch_ball_model();

// rho(theta)^{(x) n} with product-rule derivatives.
ParametricModel n_copies_model(const ParametricModel& base, int n);

// Closed-form derivative when the model carries one, finite differences
// otherwise. Throws if the two FD step sizes disagree beyond 1e-5.
ComplexMatrix model_derivative(const ParametricModel& model,
                               const ParamVector& theta, int i);

// Symmetric logarithmic derivative: the self-adjoint solution of
// drho = (lambda rho + rho lambda)/2, computed in the eigenbasis of rho
// with entries 2 drho_jk / (p_j + p_k) on the support. A component of drho
// connecting two null directions of rho is an error, not something to drop.
ComplexMatrix sld(const DensityMatrix& rho, const ComplexMatrix& drho);

struct SldSet {
  std::vector<ComplexMatrix> scores;  // one per parameter
};

SldSet sld_set(const ParametricModel& model, const ParamVector& theta);

// I_Q(theta)_ij = trace(rho (lambda_i lambda_j + lambda_j lambda_i)) / 2.
InfoMatrix quantum_info(const ParametricModel& model, const ParamVector& theta);

// Fisher information of the outcome distribution p(x) = trace(rho m_x),
// summed over outcomes with p above the support cutoff.
InfoMatrix classical_fisher(const ParametricModel& model,
                            const ParamVector& theta, const Povm& m);

struct BcCheck {
  InfoMatrix gap;  // I_Q - I(theta; M)
  double min_gap_eigenvalue;
  bool holds;  // min eigenvalue >= -tol::bc_gap
};

BcCheck check_braunstein_caves(const ParametricModel& model,
                               const ParamVector& theta, const Povm& m);

struct SpdInverse {
  InfoMatrix inverse;
  double condition;
};

// Inverse via symmetric eigendecomposition. Refuses matrices with
// condition number above tol::info_cond_max or a non-positive spectrum.
SpdInverse invert_info(const InfoMatrix& m);

// trace(I_Q(theta)^{-1} I(theta; M)/n) where I_Q is one-copy quantum
// information and M acts on the n-copy model.
double gill_massar_trace(const ParametricModel& model, const ParamVector& theta,
                         const Povm& m_on_n_copies, int n_copies);

// Worst-case eigenvalue ratio of I_Q(n copies) against n * I_Q(one copy);
// additivity puts it at 1.
double quantum_info_additivity_ratio(const ParametricModel& base, int n,
                                     const ParamVector& theta);

// The seven-outcome pair measurement: half-projectors onto |+w,+w> and
// |-w,-w> for w in {x, y, z}, plus the singlet projector. Labels 1..7.
Povm pair_povm_7();

struct SpinComponent {
  double weight;
  BlochVector direction;
  Pvm pvm;
};

// Randomized spin design hitting a feasible information target:
// sum_i w_i I(theta; spin(n_i)) = target within tol::target_recon, with
// w_i >= 0 and sum w_i <= 1. Solved by nonnegative least squares over a
// Fibonacci direction grid followed by Gauss-Newton refinement of the
// active directions. Rejects targets with trace(I_Q^{-1} J) > 1.
std::vector<SpinComponent> achieve_target_information(
    const ParametricModel& model, const ParamVector& theta,
    const InfoMatrix& target);

}  // namespace qstat
