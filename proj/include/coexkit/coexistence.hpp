#pragma once

#include <array>
#include <optional>
#include <vector>

#include "coexkit/effect.hpp"

namespace coexkit {

struct SolverConfig {
  double accept_tol = 1e-9;   // feasibility residual for Coexistent
  double reject_gap = 1e-6;   // stable drift magnitude for NotCoexistent
  int max_iter = 20000;       // Dykstra cycle cap (one cycle = four projections)
  int stability_window = 50;  // cycles the drift must stay flat before rejecting
};

/// The certificate triple: A = E + G, B = F + G, E + F + G an effect.
struct CoexWitness {
  Effect e;
  Effect f;
  Effect g;
};

enum class CoexDecision { Coexistent, NotCoexistent, Undecided };
enum class CoexMethod { Commuting, RankOneCriterion, QubitPairFormula, Dykstra };

const char* decision_name(CoexDecision d);
const char* method_name(CoexMethod m);

struct CoexVerdict {
  CoexDecision decision = CoexDecision::Undecided;
  CoexMethod method = CoexMethod::Dykstra;
  double residual = 0.0;
  std::optional<CoexWitness> witness;
};

/// Validates the three witness identities at tolerance 1e-7 against the
/// pair it certifies. Pure check, usable against any solver's output.
bool check_witness(const Effect& a, const Effect& b, const CoexWitness& w, double tol = 1e-7);

/// Simultaneous eigenbasis of two commuting effects: unitary V plus the two
/// real diagonals. Eigenvalues of `a` are clustered, then `b` is
/// diagonalized inside each cluster.
struct JointDiagonalization {
  Matrix basis;
  std::vector<double> diag_a;
  std::vector<double> diag_b;
  double offdiag_residual;  // worst off-diagonal entry of either conjugation
};
JointDiagonalization joint_diagonalize(const Effect& a, const Effect& b);

/// Decision stack: scalar shortcut, commuting shortcut (with joint-diagonal
/// witness), projection commutant criterion, qubit rank-one-pair formula,
/// rank-one strength criterion, then Dykstra feasibility.
CoexVerdict coexist(const Effect& a, const Effect& b, const SolverConfig& cfg = {});

/// A ~ tP iff t <= Lambda(A,P) + Lambda(A-perp,P) (closed boundary,
/// numerical slack 1e-9). Ships the constructive split witness.
CoexVerdict coexist_rank_one(const Effect& a, double t, const RankOneProjection& p);

/// Exact qubit threshold for tP ~ sQ:
/// coexistent iff Q in {P, P-perp} or s <= 1/((1/(1-t))|P'-Q|^2 + |P-Q|^2).
CoexVerdict coexist_qubit_rank1_pair(double t, const RankOneProjection& p, double s,
                                     const RankOneProjection& q);

/// Solver state: the candidate G, one correction term per constraint set,
/// and the running feasibility residual (max violation over the four sets).
struct FeasibilityState {
  Matrix g;
  std::array<Matrix, 4> corrections;
  int iteration = 0;
  double residual = 0.0;
};

/// Dykstra cyclic projection onto {G >= 0, G >= A+B-I, G <= A, G <= B}.
/// Accepts at residual <= cfg.accept_tol, rejects on a stable positive
/// iterate drift, otherwise Undecided at cfg.max_iter.
CoexVerdict dykstra_feasible(const Effect& a, const Effect& b, const SolverConfig& cfg = {});

/// Per-block conjunction for block-diagonal pairs.
CoexVerdict coexist_blockwise(const Effect& a, const Effect& b,
                              const std::vector<std::vector<int>>& blocks,
                              const SolverConfig& cfg = {});

}  // namespace coexkit
