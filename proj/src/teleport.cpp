#include "qstat/teleport.hpp"

#include <cmath>
#include <stdexcept>

namespace qstat {

namespace {

PureState bell_state(int a, int b, double sign) {
  ComplexMatrix ket = ComplexMatrix::Zero(4, 1);
  const double r = 1.0 / std::sqrt(2.0);
  ket(a, 0) = Complex(r, 0.0);
  ket(b, 0) = Complex(sign * r, 0.0);
  return PureState::from_ket(ket);
}

const PureState& bell_element(BellOutcome o) {
  const BellBasis& basis = bell_basis();
  switch (o) {
    case BellOutcome::phi1: return basis.phi1;
    case BellOutcome::phi2: return basis.phi2;
    case BellOutcome::psi1: return basis.psi1;
    case BellOutcome::psi2: return basis.psi2;
  }
  throw std::invalid_argument("unknown Bell outcome");
}

// Contract the three-qubit ket against <B| on the first two qubits. The
// result has norm 1/2 for the expansion and norm 1 for a measured
// posterior.
ComplexMatrix contract_bell(const PureState& bell, const ComplexMatrix& joint) {
  ComplexMatrix bob = ComplexMatrix::Zero(2, 1);
  for (int t = 0; t < 2; ++t)
    for (int a = 0; a < 2; ++a) {
      const Complex amp = std::conj(bell.ket()(t * 2 + a, 0));
      for (int b = 0; b < 2; ++b) bob(b, 0) += amp * joint(t * 4 + a * 2 + b, 0);
    }
  return bob;
}

TeleportTranscript finish_transcript(const PureState& input, BellOutcome o,
                                     double prob,
                                     const PureState& posterior) {
  const PureState bob_pre =
      PureState::normalized(contract_bell(bell_element(o), posterior.ket()));
  const ComplexMatrix correction = correction_for(o);
  const PureState bob_final = apply_unitary(bob_pre, correction);
  const double fidelity =
      std::norm((input.ket().adjoint() * bob_final.ket())(0, 0));
  return TeleportTranscript{input,      o,          prob, bob_pre,
                            correction, bob_final,  fidelity};
}

void require_qubit(const PureState& input) {
  if (input.dim() != 2)
    throw std::invalid_argument("teleport: input must be a single qubit");
}

}  // namespace

const char* bell_outcome_name(BellOutcome o) {
  switch (o) {
    case BellOutcome::phi1: return "Phi1";
    case BellOutcome::phi2: return "Phi2";
    case BellOutcome::psi1: return "Psi1";
    case BellOutcome::psi2: return "Psi2";
  }
  return "?";
}

const BellBasis& bell_basis() {
  static const BellBasis basis{bell_state(0, 3, +1.0), bell_state(0, 3, -1.0),
                               bell_state(1, 2, +1.0), bell_state(1, 2, -1.0)};
  return basis;
}

PureState make_singlet() { return bell_basis().psi2; }

Pvm alice_bell_pvm() {
  const BellBasis& basis = bell_basis();
  const PureState* states[4] = {&basis.phi1, &basis.phi2, &basis.psi1,
                                &basis.psi2};
  std::vector<Outcome> outcomes;
  for (int i = 0; i < 4; ++i) {
    const ComplexMatrix proj = states[i]->ket() * states[i]->ket().adjoint();
    outcomes.push_back(Outcome{static_cast<double>(i + 1),
                               tensor(proj, ComplexMatrix::Identity(2, 2))});
  }
  return Pvm::from_outcomes(std::move(outcomes));
}

ComplexMatrix correction_for(BellOutcome outcome) {
  ComplexMatrix u(2, 2);
  switch (outcome) {
    case BellOutcome::phi1: u << 0, 1, -1, 0; break;  // (-b, a) -> (a, b)
    case BellOutcome::phi2: u << 0, 1, 1, 0; break;   // (b, a)  -> (a, b)
    case BellOutcome::psi1: u << -1, 0, 0, 1; break;  // (-a, b) -> (a, b)
    case BellOutcome::psi2: u << -1, 0, 0, -1; break; // (-a,-b) -> (a, b)
  }
  return u;
}

const char* correction_name(BellOutcome outcome) {
  switch (outcome) {
    case BellOutcome::phi1: return "spin_flip_with_sign_change";
    case BellOutcome::phi2: return "spin_flip";
    case BellOutcome::psi1: return "sign_change";
    case BellOutcome::psi2: return "identity_up_to_phase";
  }
  return "?";
}

TeleportTranscript teleport(const PureState& input, RngStream& rng) {
  require_qubit(input);
  const PureState joint = tensor(input, make_singlet());
  const PureMeasurement rec = measure(joint, alice_bell_pvm(), rng);
  const BellOutcome o = static_cast<BellOutcome>(static_cast<int>(rec.label));
  return finish_transcript(input, o, rec.probability, rec.posterior);
}

TeleportTranscript teleport_conditional(const PureState& input,
                                        BellOutcome forced) {
  require_qubit(input);
  const PureState joint = tensor(input, make_singlet());
  const Pvm pvm = alice_bell_pvm();
  const int k = static_cast<int>(forced) - 1;
  const ComplexMatrix& proj = pvm.outcomes()[static_cast<std::size_t>(k)].op;
  const ComplexMatrix projected = proj * joint.ket();
  const double prob = projected.squaredNorm();
  return finish_transcript(input, forced, prob,
                           PureState::normalized(projected));
}

std::vector<BellBranch> bell_expansion(const PureState& input) {
  require_qubit(input);
  const PureState joint = tensor(input, make_singlet());
  const BellBasis& basis = bell_basis();
  const PureState* states[4] = {&basis.phi1, &basis.phi2, &basis.psi1,
                                &basis.psi2};
  std::vector<BellBranch> branches;
  for (const PureState* b : states) {
    const ComplexMatrix chi = contract_bell(*b, joint.ket());  // norm 1/2
    branches.push_back(BellBranch{*b, PureState::normalized_with_phase(chi)});
  }
  return branches;
}

DensityMatrix bob_premessage_marginal(const PureState& input) {
  ComplexMatrix acc = ComplexMatrix::Zero(2, 2);
  for (const BellBranch& br : bell_expansion(input))
    acc += 0.25 * br.bob.ket() * br.bob.ket().adjoint();
  return DensityMatrix::from_matrix(acc);
}

}  // namespace qstat
