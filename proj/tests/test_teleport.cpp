#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qstat/random.hpp"
#include "qstat/teleport.hpp"
#include "test_helpers.hpp"

using namespace qstat;
using qtest::mat_close;
using qtest::partial_trace;

namespace {
PureState random_qubit(RngStream& rng) {
  const double theta = std::acos(1.0 - 2.0 * rng.next_double());
  const double phi = 2.0 * std::numbers::pi * rng.next_double();
  return polar_to_ket(theta, phi);
}

double overlap(const PureState& a, const PureState& b) {
  return std::abs((a.ket().adjoint() * b.ket())(0, 0));
}
}  // namespace

TEST_CASE("Bell basis is orthonormal and ends in the singlet") {
  const BellBasis& b = bell_basis();
  const PureState* all[4] = {&b.phi1, &b.phi2, &b.psi1, &b.psi2};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(all[i]->ket().norm() - 1.0) < 1e-15);
    for (int j = i + 1; j < 4; ++j) CHECK(overlap(*all[i], *all[j]) < 1e-12);
  }
  CHECK((b.psi2.ket() - make_singlet().ket()).norm() == 0.0);
}

TEST_CASE("singlet marginals are maximally mixed") {
  const PureState s = make_singlet();
  const ComplexMatrix rho = s.ket() * s.ket().adjoint();
  CHECK(mat_close(partial_trace(rho, 2, 2, 0), 0.5 * identity2(), 1e-14));
  CHECK(mat_close(partial_trace(rho, 2, 2, 1), 0.5 * identity2(), 1e-14));
}

TEST_CASE("Alice's measurement has four rank-2 branches of probability 1/4") {
  const Pvm pvm = alice_bell_pvm();
  REQUIRE(pvm.size() == 4);
  ComplexMatrix sum = ComplexMatrix::Zero(8, 8);
  for (const Outcome& o : pvm.outcomes()) {
    CHECK(o.op.trace().real() == doctest::Approx(2.0).epsilon(1e-14));
    sum += o.op;
  }
  CHECK(mat_close(sum, ComplexMatrix::Identity(8, 8), 1e-12));

  RngStream rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const PureState joint = tensor(random_qubit(rng), make_singlet());
    for (const auto& [label, p] :
         outcome_distribution(DensityMatrix::from_pure(joint), pvm))
      CHECK(std::abs(p - 0.25) < 1e-12);
  }
}

TEST_CASE("corrections are unitary and the fixed matrices") {
  for (BellOutcome o : {BellOutcome::phi1, BellOutcome::phi2,
                        BellOutcome::psi1, BellOutcome::psi2}) {
    const ComplexMatrix u = correction_for(o);
    CHECK((u.adjoint() * u - identity2()).norm() < 1e-14);
  }
  ComplexMatrix phi1(2, 2);
  phi1 << 0, 1, -1, 0;
  CHECK(mat_close(correction_for(BellOutcome::phi1), phi1, 0.0));
  CHECK(mat_close(correction_for(BellOutcome::psi2), -identity2(), 0.0));
}

TEST_CASE("exhaustive conditioning restores the input on every branch") {
  RngStream rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const PureState input = random_qubit(rng);
    const Complex a = input.ket()(0, 0);
    const Complex b = input.ket()(1, 0);

    // The four conditional pre-correction forms from the expansion.
    ComplexMatrix forms[4];
    for (auto& f : forms) f.resize(2, 1);
    forms[0] << -b, a;
    forms[1] << b, a;
    forms[2] << -a, b;
    forms[3] << -a, -b;

    int i = 0;
    for (BellOutcome o : {BellOutcome::phi1, BellOutcome::phi2,
                          BellOutcome::psi1, BellOutcome::psi2}) {
      const TeleportTranscript t = teleport_conditional(input, o);
      CHECK(std::abs(t.outcome_prob - 0.25) < 1e-12);
      CHECK(std::abs(t.fidelity - 1.0) < 1e-12);
      // bob_final matches entrywise, not merely in fidelity.
      CHECK((t.bob_final.ket() - input.ket()).norm() < 1e-12);
      // bob_pre agrees with the worked expansion up to global phase.
      const PureState form = PureState::normalized_with_phase(forms[i++]);
      CHECK(std::abs(overlap(form, t.bob_pre) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("sampled teleportation is exact and unbiased across outcomes") {
  RngStream rng(53);
  const PureState zero = polar_to_ket(0.0, 0.0);
  const TeleportTranscript t0 = teleport(zero, rng);
  CHECK(std::abs(t0.fidelity - 1.0) < 1e-12);
  CHECK((t0.bob_final.ket() - zero.ket()).norm() < 1e-12);

  int counts[4] = {0, 0, 0, 0};
  const int reps = 4000;
  const PureState input = random_qubit(rng);
  for (int i = 0; i < reps; ++i) {
    const TeleportTranscript t = teleport(input, rng);
    CHECK(std::abs(t.fidelity - 1.0) < 1e-12);
    counts[static_cast<int>(t.outcome) - 1]++;
  }
  double stat = 0.0;
  for (int c : counts) {
    const double expected = reps / 4.0;
    stat += (c - expected) * (c - expected) / expected;
  }
  CHECK(stat < qtest::chi2_crit_1e3(3));
}

TEST_CASE("bell expansion reassembles the joint ket") {
  RngStream rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const PureState input = random_qubit(rng);
    const PureState joint = tensor(input, make_singlet());
    const auto branches = bell_expansion(input);
    REQUIRE(branches.size() == 4);

    ComplexMatrix rebuilt = ComplexMatrix::Zero(8, 1);
    for (const BellBranch& br : branches) {
      CHECK(std::abs(br.bob.ket().norm() - 1.0) < 1e-12);
      rebuilt += 0.5 * tensor(br.bell.ket(), br.bob.ket());
    }
    CHECK((rebuilt - joint.ket()).norm() < 1e-12);
  }

  // Basis input: conditionals proportional to |1>, |1>, -|0>, -|0>.
  const auto zero_branches = bell_expansion(polar_to_ket(0.0, 0.0));
  ComplexMatrix e0(2, 1), e1(2, 1);
  e0 << 1, 0;
  e1 << 0, 1;
  CHECK((zero_branches[0].bob.ket() - e1).norm() < 1e-12);
  CHECK((zero_branches[1].bob.ket() - e1).norm() < 1e-12);
  CHECK((zero_branches[2].bob.ket() + e0).norm() < 1e-12);
  CHECK((zero_branches[3].bob.ket() + e0).norm() < 1e-12);
}

TEST_CASE("no-signalling: Bob's pre-message marginal is white noise") {
  RngStream rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const PureState input = random_qubit(rng);
    CHECK(mat_close(bob_premessage_marginal(input).matrix(),
                    0.5 * identity2(), 1e-12));

    // Independent route: trace the joint density over Alice's two qubits.
    const PureState joint = tensor(input, make_singlet());
    const ComplexMatrix rho = joint.ket() * joint.ket().adjoint();
    CHECK(mat_close(partial_trace(rho, 4, 2, 0), 0.5 * identity2(), 1e-12));
  }
}

TEST_CASE("teleported outputs are statistically indistinguishable from inputs") {
  RngStream rng(56);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState input = random_qubit(rng);
    const TeleportTranscript t = teleport(input, rng);
    const Pvm m = observable_to_pvm(random_hermitian(rng, 2));
    const auto before =
        outcome_distribution(DensityMatrix::from_pure(input), m);
    const auto after =
        outcome_distribution(DensityMatrix::from_pure(t.bob_final), m);
    for (std::size_t i = 0; i < before.size(); ++i)
      CHECK(std::abs(before[i].second - after[i].second) < 1e-12);
  }
}
