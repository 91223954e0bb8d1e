#include "coexkit/symmetry.hpp"

#include <cmath>
#include <cstring>

namespace coexkit {

namespace {

void require_unitary(const Matrix& u) {
  const Matrix gram = u.adjoint() * u;
  if (max_abs(gram - Matrix::identity(u.dim())) > 1e-10) {
    throw CoexError(Errc::NonUnitary, "U*U deviates from I beyond 1e-10");
  }
}

Matrix conj_entries(const Matrix& m) {
  Matrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = std::conj(m.at(i, j));
  return r;
}

}  // namespace

AutomorphismSpec::AutomorphismSpec(Matrix unitary, bool antiunitary, FlipPolicy flip,
                                   GDefault g_default, std::map<double, double> g_table)
    : unitary_(std::move(unitary)),
      antiunitary_(antiunitary),
      flip_(flip),
      g_default_(g_default),
      g_table_(std::move(g_table)) {
  require_unitary(unitary_);
  for (const auto& [t, gt] : g_table_) {
    if (t < 0.0 || t > 1.0 || gt < 0.0 || gt > 1.0) {
      throw CoexError(Errc::BadInput, "g table entries must lie in [0,1]");
    }
    for (const auto& [s, gs] : g_table_) {
      if (t < s && gt == gs) {
        throw CoexError(Errc::BadInput, "g table must be injective on the declared set");
      }
    }
  }
}

AutomorphismSpec AutomorphismSpec::identity(int dim) {
  return AutomorphismSpec(Matrix::identity(dim), false);
}

AutomorphismSpec AutomorphismSpec::conjugation(int dim) {
  return AutomorphismSpec(Matrix::identity(dim), true);
}

double AutomorphismSpec::g(double t) const {
  for (const auto& [key, val] : g_table_) {
    if (std::abs(key - t) <= 1e-12) return val;
  }
  return g_default_ == GDefault::Identity ? t : 1.0 - t;
}

namespace {

// Entries quantized to float32 so that the last-ulp noise of a double
// complement round trip cannot perturb the canonical form.
std::string matrix_bytes_quantized(const Matrix& m) {
  std::string bytes;
  bytes.reserve(m.entries().size() * 2 * sizeof(float));
  for (const Complex& c : m.entries()) {
    const float re = static_cast<float>(c.real());
    const float im = static_cast<float>(c.imag());
    bytes.append(reinterpret_cast<const char*>(&re), sizeof(float));
    bytes.append(reinterpret_cast<const char*>(&im), sizeof(float));
  }
  return bytes;
}

}  // namespace

bool AutomorphismSpec::flips(const Effect& a) const {
  switch (flip_) {
    case FlipPolicy::None: return false;
    case FlipPolicy::All: return true;
    case FlipPolicy::Hash: break;
  }
  // FNV-1a over the canonical representative of {A, A-perp}. A and its
  // complement must agree on the flip bit, or the unordered pair
  // {phi(A), phi(A-perp)} would collapse onto one operator.
  const std::string mine = matrix_bytes_quantized(a.matrix());
  const std::string comp = matrix_bytes_quantized(Matrix::identity(a.dim()) - a.matrix());
  const std::string& canonical = mine <= comp ? mine : comp;
  uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char byte : canonical) {
    h ^= byte;
    h *= 0x100000001b3ull;
  }
  return (h & 1u) != 0;
}

Effect standard_automorphism(const Matrix& unitary, bool antiunitary, const Effect& a) {
  require_unitary(unitary);
  if (unitary.dim() != a.dim()) throw CoexError(Errc::DimMismatch, "operator dim mismatch");
  const Matrix& m = a.matrix();
  const Matrix transformed =
      antiunitary ? unitary * conj_entries(m) * unitary.adjoint() : unitary * m * unitary.adjoint();
  return Effect(HermitianMatrix::from_hermitian_expr(transformed));
}

Effect apply_automorphism(const AutomorphismSpec& spec, const Effect& a,
                          std::optional<bool> flip_override) {
  if (spec.dim() != a.dim()) throw CoexError(Errc::DimMismatch, "spec dim mismatch");
  const Classification cls = classify(a);
  if (cls.kind == Classification::Kind::Scalar) {
    return Effect::scalar(a.dim(), spec.g(cls.scalar));
  }
  const bool flip = flip_override.value_or(spec.flips(a));
  const Effect& branch = flip ? ortho_complement(a) : a;
  return standard_automorphism(spec.unitary(), spec.antiunitary(), branch);
}

PreservationReport verify_preservation_fn(const std::function<Effect(const Effect&)>& phi,
                                          const std::vector<std::pair<Effect, Effect>>& pairs,
                                          const SolverConfig& cfg) {
  PreservationReport report;
  for (const auto& [a, b] : pairs) {
    ++report.pairs_tested;
    const CoexVerdict before = coexist(a, b, cfg);
    const CoexVerdict after = coexist(phi(a), phi(b), cfg);
    if (before.decision == CoexDecision::Undecided || after.decision == CoexDecision::Undecided) {
      ++report.undecided;
    } else if (before.decision == after.decision) {
      ++report.agreements;
    } else {
      report.failures.push_back(PreservationFailure{a, b, before.decision, after.decision});
    }
  }
  return report;
}

PreservationReport verify_preservation(const AutomorphismSpec& spec,
                                       const std::vector<std::pair<Effect, Effect>>& pairs,
                                       const SolverConfig& cfg) {
  return verify_preservation_fn([&spec](const Effect& e) { return apply_automorphism(spec, e); },
                                pairs, cfg);
}

}  // namespace coexkit
