#pragma once

#include <vector>

#include "qstat/qcore.hpp"

namespace qstat {

// Alice's four possible Bell outcomes, in the fixed order used for
// measurement labels 1..4.
enum class BellOutcome { phi1 = 1, phi2 = 2, psi1 = 3, psi2 = 4 };

const char* bell_outcome_name(BellOutcome o);

struct BellBasis {
  PureState phi1;  // (|00> + |11>)/sqrt2
  PureState phi2;  // (|00> - |11>)/sqrt2
  PureState psi1;  // (|01> + |10>)/sqrt2
  PureState psi2;  // (|01> - |10>)/sqrt2, the singlet
};

const BellBasis& bell_basis();

PureState make_singlet();

// Rank-2 projectors |B_i><B_i| (x) 1 on the three-qubit space, labels 1..4.
// Qubit order is (teleportee, Alice's half, Bob's half).
Pvm alice_bell_pvm();

// The fixed 2x2 unitary Bob applies for each outcome. Chosen so that the
// corrected state equals the input exactly after phase canonicalization,
// not merely up to phase.
ComplexMatrix correction_for(BellOutcome outcome);
const char* correction_name(BellOutcome outcome);

struct TeleportTranscript {
  PureState input;
  BellOutcome outcome;
  double outcome_prob;
  PureState bob_pre;  // Bob's conditional state before the correction
  ComplexMatrix correction;
  PureState bob_final;
  double fidelity;  // |<input|bob_final>|^2
};

// One sampled run of the protocol.
TeleportTranscript teleport(const PureState& input, RngStream& rng);

// Deterministic run conditioned on a forced outcome; used to verify all
// four branches exhaustively instead of waiting for the sampler.
TeleportTranscript teleport_conditional(const PureState& input,
                                        BellOutcome forced);

struct BellBranch {
  PureState bell;  // basis element on Alice's two qubits
  PureState bob;   // conditional Bob state, exact relative phase kept
};

// The four-branch expansion of input (x) singlet. Each branch carries
// amplitude 1/2: summing (1/2) bell_i (x) bob_i over branches reproduces
// the joint ket. Bob states keep their true phases here, so they are built
// with the keep-phase factory rather than the canonical one.
std::vector<BellBranch> bell_expansion(const PureState& input);

// Bob's marginal before the two classical bits arrive: always 1/2 identity.
DensityMatrix bob_premessage_marginal(const PureState& input);

}  // namespace qstat
