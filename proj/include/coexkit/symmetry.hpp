#pragma once

#include <functional>
#include <map>

#include "coexkit/coexistence.hpp"

namespace coexkit {

enum class FlipPolicy { None, All, Hash };
enum class GDefault { Identity, Reverse };

/// A coexistence automorphism: unitary or antiunitary conjugation, an
/// arbitrary bijection g on the scalar line, and a per-effect choice
/// between A and A-perp for non-scalars.
class AutomorphismSpec {
 public:
  AutomorphismSpec(Matrix unitary, bool antiunitary, FlipPolicy flip = FlipPolicy::None,
                   GDefault g_default = GDefault::Identity,
                   std::map<double, double> g_table = {});

  static AutomorphismSpec identity(int dim);
  /// Coordinate-wise conjugation K (U = I, antiunitary).
  static AutomorphismSpec conjugation(int dim);

  int dim() const { return unitary_.dim(); }
  const Matrix& unitary() const { return unitary_; }
  bool antiunitary() const { return antiunitary_; }
  FlipPolicy flip_policy() const { return flip_; }
  GDefault g_default() const { return g_default_; }
  const std::map<double, double>& g_table() const { return g_table_; }

  /// Scalar action: exact table lookup first, default bijection otherwise.
  double g(double t) const;
  /// Whether the flip policy complements this (non-scalar) effect.
  bool flips(const Effect& a) const;

 private:
  Matrix unitary_;
  bool antiunitary_;
  FlipPolicy flip_;
  GDefault g_default_;
  std::map<double, double> g_table_;
};

/// U A U*, with entrywise conjugation first when U is antiunitary.
Effect standard_automorphism(const Matrix& unitary, bool antiunitary, const Effect& a);

/// phi(tI) = g(t) I on scalars; U (A or A-perp) U* otherwise, the branch
/// chosen by the flip policy unless overridden.
Effect apply_automorphism(const AutomorphismSpec& spec, const Effect& a,
                          std::optional<bool> flip_override = std::nullopt);

struct PreservationFailure {
  Effect a;
  Effect b;
  CoexDecision before;
  CoexDecision after;
};

struct PreservationReport {
  int pairs_tested = 0;
  int agreements = 0;
  int undecided = 0;
  std::vector<PreservationFailure> failures;

  bool clean() const { return failures.empty(); }
};

/// Compares coexist(A,B) with coexist(phi(A), phi(B)) over the given pairs.
PreservationReport verify_preservation(const AutomorphismSpec& spec,
                                       const std::vector<std::pair<Effect, Effect>>& pairs,
                                       const SolverConfig& cfg = {});

/// Same comparison for an arbitrary transform (test hook for broken maps).
PreservationReport verify_preservation_fn(const std::function<Effect(const Effect&)>& phi,
                                          const std::vector<std::pair<Effect, Effect>>& pairs,
                                          const SolverConfig& cfg = {});

}  // namespace coexkit
