#include "coexkit/coexistence.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace coexkit {

const char* decision_name(CoexDecision d) {
  switch (d) {
    case CoexDecision::Coexistent: return "coexistent";
    case CoexDecision::NotCoexistent: return "not_coexistent";
    case CoexDecision::Undecided: return "undecided";
  }
  return "undecided";
}

const char* method_name(CoexMethod m) {
  switch (m) {
    case CoexMethod::Commuting: return "commuting";
    case CoexMethod::RankOneCriterion: return "rank_one_criterion";
    case CoexMethod::QubitPairFormula: return "qubit_pair_formula";
    case CoexMethod::Dykstra: return "dykstra";
  }
  return "dykstra";
}

bool check_witness(const Effect& a, const Effect& b, const CoexWitness& w, double tol) {
  if (a.dim() != b.dim() || w.e.dim() != a.dim() || w.f.dim() != a.dim() || w.g.dim() != a.dim()) {
    return false;
  }
  if (max_abs((w.e.matrix() + w.g.matrix()) - a.matrix()) > tol) return false;
  if (max_abs((w.f.matrix() + w.g.matrix()) - b.matrix()) > tol) return false;
  const HermitianMatrix sum =
      HermitianMatrix::from_hermitian_expr(w.e.matrix() + w.f.matrix() + w.g.matrix());
  const auto ev = eig_hermitian(sum).eigenvalues;
  return ev.front() >= -tol && ev.back() <= 1.0 + tol;
}

JointDiagonalization joint_diagonalize(const Effect& a, const Effect& b) {
  require_same_dim(a.matrix(), b.matrix());
  const int n = a.dim();
  const auto& eig_a = a.eigen();
  Matrix v = eig_a.eigenvectors;

  // Diagonalize B inside each (near-)eigenspace of A.
  constexpr double kClusterGap = 1e-7;
  int lo = 0;
  while (lo < n) {
    int hi = lo + 1;
    while (hi < n && eig_a.eigenvalues[static_cast<size_t>(hi)] -
                             eig_a.eigenvalues[static_cast<size_t>(hi - 1)] <=
                         kClusterGap) {
      ++hi;
    }
    const int m = hi - lo;
    if (m > 1) {
      Matrix sub(m);
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
          Complex s{0.0, 0.0};
          for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
              s += std::conj(v.at(i, lo + r)) * b.matrix().at(i, j) * v.at(j, lo + c);
            }
          }
          sub.at(r, c) = s;
        }
      }
      const auto eig_sub = eig_hermitian(HermitianMatrix::from_hermitian_expr(sub));
      Matrix rotated(n);
      for (int i = 0; i < n; ++i) {
        for (int c = 0; c < m; ++c) {
          Complex s{0.0, 0.0};
          for (int r = 0; r < m; ++r) s += v.at(i, lo + r) * eig_sub.eigenvectors.at(r, c);
          rotated.at(i, c) = s;
        }
      }
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c) v.at(i, lo + c) = rotated.at(i, c);
    }
    lo = hi;
  }

  JointDiagonalization out;
  out.basis = v;
  out.diag_a.resize(static_cast<size_t>(n));
  out.diag_b.resize(static_cast<size_t>(n));
  double residual = 0.0;
  for (const Matrix* mp : {&a.matrix(), &b.matrix()}) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        Complex s{0.0, 0.0};
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) s += std::conj(v.at(i, r)) * mp->at(i, j) * v.at(j, c);
        if (r == c) {
          (mp == &a.matrix() ? out.diag_a : out.diag_b)[static_cast<size_t>(r)] = s.real();
        } else {
          residual = std::max(residual, std::abs(s));
        }
      }
    }
  }
  out.offdiag_residual = residual;
  return out;
}

namespace {

constexpr double kWitnessTol = 1e-7;

Effect witness_effect(const Matrix& m) {
  return Effect(HermitianMatrix::from_hermitian_expr(m), kWitnessTol);
}

CoexWitness make_witness(const Matrix& e, const Matrix& f, const Matrix& g) {
  return CoexWitness{witness_effect(e), witness_effect(f), witness_effect(g)};
}

// Witness from the simultaneous eigenbasis: G = V diag(min(a_i, b_i)) V*.
std::optional<CoexWitness> commuting_witness(const Effect& a, const Effect& b) {
  const auto jd = joint_diagonalize(a, b);
  if (jd.offdiag_residual > 1e-6) return std::nullopt;
  const int n = a.dim();
  Matrix g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex s{0.0, 0.0};
      for (int k = 0; k < n; ++k) {
        const double gk = std::clamp(
            std::min(jd.diag_a[static_cast<size_t>(k)], jd.diag_b[static_cast<size_t>(k)]), 0.0,
            1.0);
        s += gk * jd.basis.at(i, k) * std::conj(jd.basis.at(j, k));
      }
      g.at(i, j) = s;
    }
  }
  CoexWitness w = make_witness(a.matrix() - g, b.matrix() - g, g);
  if (!check_witness(a, b, w, 1e-8)) return std::nullopt;
  return w;
}

CoexWitness swap_witness(CoexWitness w) { return CoexWitness{w.f, w.e, w.g}; }

// Triple for (A, B-perp) mapped to a triple for (A, B).
CoexWitness complement_second_witness(const Effect& a, const CoexWitness& w) {
  const Matrix aperp = Matrix::identity(a.dim()) - a.matrix();
  return make_witness(w.g.matrix(), aperp - w.f.matrix(), a.matrix() - w.g.matrix());
}

}  // namespace

CoexVerdict coexist_rank_one(const Effect& a, double t, const RankOneProjection& p) {
  if (!(t > 0.0 && t <= 1.0)) throw CoexError(Errc::BadInput, "probe coefficient outside (0,1]");
  const double lam = strength(a, p).value;
  const double lam_perp = strength(ortho_complement(a), p).value;
  const double total = lam + lam_perp;

  CoexVerdict v;
  v.method = CoexMethod::RankOneCriterion;
  if (t <= total + 1e-9) {
    v.decision = CoexDecision::Coexistent;
    v.residual = 0.0;
    const double t1 = std::min(t, lam);
    const double t2 = t - t1;
    const Matrix pm = p.matrix();
    v.witness = make_witness(a.matrix() - t1 * pm, t2 * pm, t1 * pm);
  } else {
    v.decision = CoexDecision::NotCoexistent;
    v.residual = t - total;
  }
  return v;
}

CoexVerdict coexist_qubit_rank1_pair(double t, const RankOneProjection& p, double s,
                                     const RankOneProjection& q) {
  if (p.dim() != 2 || q.dim() != 2) throw CoexError(Errc::DimMismatch, "qubit formula needs dim 2");
  if (!(t > 0.0 && t < 1.0 && s > 0.0 && s < 1.0)) {
    throw CoexError(Errc::BadInput, "qubit pair coefficients must lie in (0,1)");
  }
  const Matrix pm = p.matrix();
  const Matrix qm = q.matrix();

  CoexVerdict v;
  v.method = CoexMethod::QubitPairFormula;
  if (max_abs(pm - qm) <= 1e-9) {
    const double g = std::min(t, s);
    v.decision = CoexDecision::Coexistent;
    v.witness = make_witness((t - g) * pm, (s - g) * qm, g * pm);
    return v;
  }
  if (max_abs((Matrix::identity(2) - pm) - qm) <= 1e-9) {
    v.decision = CoexDecision::Coexistent;
    v.witness = make_witness(t * pm, s * qm, Matrix(2));
    return v;
  }

  const double tau = std::clamp((pm * qm).trace().real(), 0.0, 1.0);  // tr PQ
  const double dist2 = 1.0 - tau;                                     // |P - Q|^2
  const double bound = 1.0 / (tau / (1.0 - t) + dist2);
  if (s <= bound + 1e-9) {
    v.decision = CoexDecision::Coexistent;
    v.residual = 0.0;
    v.witness = make_witness(t * pm, s * qm, Matrix(2));
  } else {
    v.decision = CoexDecision::NotCoexistent;
    v.residual = s - bound;
  }
  return v;
}

namespace {

struct DykstraScratch {
  double residual(const Matrix& x) const;
  const Effect* a;
  const Effect* b;
  Matrix lower;  // A + B - I
};

double DykstraScratch::residual(const Matrix& x) const {
  const auto viol = [](const Matrix& m) {
    const double lo = eig_hermitian(HermitianMatrix::from_hermitian_expr(m)).eigenvalues.front();
    return std::max(0.0, -lo);
  };
  double r = viol(x);
  r = std::max(r, viol(x - lower));
  r = std::max(r, viol(a->matrix() - x));
  r = std::max(r, viol(b->matrix() - x));
  return r;
}

Matrix project_psd_above(const Matrix& x, const Matrix& shift) {
  // Projection onto {G : G >= shift}.
  const auto h = HermitianMatrix::from_hermitian_expr(x - shift);
  return shift + psd_project(h).matrix();
}

Matrix project_psd_below(const Matrix& x, const Matrix& cap) {
  // Projection onto {G : G <= cap}.
  const auto h = HermitianMatrix::from_hermitian_expr(cap - x);
  return cap - psd_project(h).matrix();
}

}  // namespace

namespace {

CoexVerdict dykstra_run(const Effect& a, const Effect& b, const SolverConfig& cfg) {
  const int n = a.dim();
  DykstraScratch sc;
  sc.a = &a;
  sc.b = &b;
  sc.lower = a.matrix() + b.matrix() - Matrix::identity(n);

  FeasibilityState st;
  st.corrections.fill(Matrix(n));

  // Warm start: spectral clip of (A + B - excess)/2 pushed into the box,
  // or plain zero when that sits closer to feasibility (zero is the exact
  // solution whenever A + B <= I, which covers every rank-one pair).
  {
    const HermitianMatrix ab = HermitianMatrix::from_hermitian_expr(a.matrix() + b.matrix());
    const double excess = std::max(0.0, max_eigenvalue(ab) - 1.0);
    Matrix seed = 0.5 * (ab.matrix() - (excess * Matrix::identity(n)));
    st.g = psd_project(HermitianMatrix::from_hermitian_expr(seed)).matrix();
    st.g = project_psd_below(st.g, a.matrix());
    st.g = project_psd_below(st.g, b.matrix());
    if (sc.residual(Matrix(n)) < sc.residual(st.g)) st.g = Matrix(n);
  }

  Matrix prev = st.g;
  std::deque<double> gaps;
  const int window = std::max(2, cfg.stability_window);

  CoexVerdict v;
  v.method = CoexMethod::Dykstra;
  st.residual = sc.residual(st.g);
  if (st.residual <= cfg.accept_tol) {
    CoexWitness w = make_witness(a.matrix() - st.g, b.matrix() - st.g, st.g);
    if (check_witness(a, b, w, kWitnessTol)) {
      v.decision = CoexDecision::Coexistent;
      v.residual = st.residual;
      v.witness = std::move(w);
      return v;
    }
  }
  while (st.iteration < cfg.max_iter) {
    ++st.iteration;
    // On an empty intersection the iterate settles into a limit cycle: the
    // consecutive half-cycle displacements approach positive constants,
    // while on a feasible instance they all decay to zero.
    double gap = 0.0;
    for (int set = 0; set < 4; ++set) {
      Matrix shifted = st.g + st.corrections[static_cast<size_t>(set)];
      Matrix y;
      switch (set) {
        case 0: y = project_psd_above(shifted, Matrix(n)); break;
        case 1: y = project_psd_above(shifted, sc.lower); break;
        case 2: y = project_psd_below(shifted, a.matrix()); break;
        default: y = project_psd_below(shifted, b.matrix()); break;
      }
      st.corrections[static_cast<size_t>(set)] = shifted - y;
      gap = std::max(gap, frobenius_norm(y - st.g));
      st.g = std::move(y);
    }

    st.residual = sc.residual(st.g);
    if (st.residual <= cfg.accept_tol) {
      CoexWitness w = make_witness(a.matrix() - st.g, b.matrix() - st.g, st.g);
      if (check_witness(a, b, w, kWitnessTol)) {
        v.decision = CoexDecision::Coexistent;
        v.residual = st.residual;
        v.witness = std::move(w);
        return v;
      }
    }

    // A feasible crawl keeps moving between same-phase iterates; the settled
    // infeasible limit cycle does not. The rejection rule demands that the
    // same-phase drift has died relative to the half-cycle gap.
    const double drift = frobenius_norm(st.g - prev);
    prev = st.g;
    const bool parked = drift <= 1e-3 * gap;

    gaps.push_back(gap);
    if (static_cast<int>(gaps.size()) > window) gaps.pop_front();
    if (static_cast<int>(gaps.size()) == window && st.iteration >= 2 * window && parked) {
      const auto [mn, mx] = std::minmax_element(gaps.begin(), gaps.end());
      if (*mn > cfg.reject_gap && (*mx - *mn) <= 1e-4 * (*mx) &&
          st.residual > 10.0 * cfg.accept_tol) {
        v.decision = CoexDecision::NotCoexistent;
        v.residual = gap;
        return v;
      }
    }

    v.residual = st.residual;
  }
  v.decision = CoexDecision::Undecided;
  return v;
}

}  // namespace

CoexVerdict dykstra_feasible(const Effect& a, const Effect& b, const SolverConfig& cfg) {
  require_same_dim(a.matrix(), b.matrix());
  CoexVerdict v = dykstra_run(a, b, cfg);
  if (v.decision != CoexDecision::Undecided) return v;

  // A ~ B iff A ~ B-perp iff A-perp ~ B. Complementing an operand swaps a
  // thin operator interval [0, C] for the fat [0, C-perp], which turns the
  // degenerate geometries that stall the base system into well-separated
  // ones. Decisions transfer; witnesses map back through the exact triple
  // transforms.
  struct Variant {
    bool comp_a;
    bool comp_b;
  };
  for (const Variant var : {Variant{false, true}, Variant{true, false}, Variant{true, true}}) {
    const Effect aa = var.comp_a ? ortho_complement(a) : a;
    const Effect bb = var.comp_b ? ortho_complement(b) : b;
    CoexVerdict w = dykstra_run(aa, bb, cfg);
    if (w.decision == CoexDecision::Undecided) continue;
    if (w.witness) {
      try {
        if (var.comp_b) w.witness = complement_second_witness(aa, *w.witness);
        if (var.comp_a) {
          w.witness = swap_witness(complement_second_witness(b, swap_witness(*w.witness)));
        }
        if (!check_witness(a, b, *w.witness, kWitnessTol)) continue;
      } catch (const CoexError&) {
        continue;
      }
    }
    return w;
  }
  return v;
}

CoexVerdict coexist(const Effect& a, const Effect& b, const SolverConfig& cfg) {
  require_same_dim(a.matrix(), b.matrix());
  const Classification ca = classify(a);
  const Classification cb = classify(b);

  // Scalar effects coexist with everything; both shortcuts land on the
  // commuting witness.
  const bool either_scalar =
      ca.kind == Classification::Kind::Scalar || cb.kind == Classification::Kind::Scalar;
  if (either_scalar || commutes(a, b)) {
    if (auto w = commuting_witness(a, b)) {
      CoexVerdict v;
      v.decision = CoexDecision::Coexistent;
      v.method = CoexMethod::Commuting;
      v.witness = std::move(*w);
      return v;
    }
  }

  // A projection coexists exactly with its commutant; past the commuting
  // branch the pair cannot coexist.
  if (ca.kind == Classification::Kind::Projection || cb.kind == Classification::Kind::Projection) {
    CoexVerdict v;
    v.decision = CoexDecision::NotCoexistent;
    v.method = CoexMethod::Commuting;
    v.residual = max_abs(a.matrix() * b.matrix() - b.matrix() * a.matrix());
    return v;
  }

  const auto ra = as_rank_one(a);
  const auto rb = as_rank_one(b);

  // Exact qubit threshold when both operands reduce to rank-one effects.
  if (a.dim() == 2 && ra && rb && ra->t < 1.0 - 1e-12 && rb->t < 1.0 - 1e-12) {
    CoexVerdict v = coexist_qubit_rank1_pair(ra->t, *ra->projection, rb->t, *rb->projection);
    if (v.witness) {
      // The formula certifies (A', B') with the complemented operands; fold
      // the complements back one side at a time.
      try {
        if (rb->complemented) {
          const Effect a_used = ra->complemented ? ortho_complement(a) : a;
          v.witness = complement_second_witness(a_used, *v.witness);
        }
        if (ra->complemented) {
          v.witness = swap_witness(complement_second_witness(b, swap_witness(*v.witness)));
        }
        if (!check_witness(a, b, *v.witness, kWitnessTol)) v.witness.reset();
      } catch (const CoexError&) {
        v.witness.reset();
      }
    }
    if (v.decision != CoexDecision::Coexistent || v.witness) return v;
  }

  // Strength criterion with whichever side reduces to a rank-one probe.
  if (ra || rb) {
    const bool probe_is_b = static_cast<bool>(rb);
    const auto& probe = probe_is_b ? *rb : *ra;
    const Effect& subject = probe_is_b ? a : b;
    CoexVerdict v = coexist_rank_one(subject, probe.t, *probe.projection);
    if (v.witness) {
      // The criterion certifies (subject, tP); fold complements and operand
      // order back into a witness for (a, b).
      try {
        if (probe.complemented) {
          v.witness = complement_second_witness(subject, *v.witness);
        }
        if (!probe_is_b) v.witness = swap_witness(*v.witness);
        if (!check_witness(a, b, *v.witness, kWitnessTol)) v.witness.reset();
      } catch (const CoexError&) {
        v.witness.reset();
      }
    }
    if (v.decision != CoexDecision::Coexistent || v.witness) return v;
  }

  return dykstra_feasible(a, b, cfg);
}

CoexVerdict coexist_blockwise(const Effect& a, const Effect& b,
                              const std::vector<std::vector<int>>& blocks,
                              const SolverConfig& cfg) {
  require_same_dim(a.matrix(), b.matrix());
  const int n = a.dim();
  std::vector<int> owner(static_cast<size_t>(n), -1);
  for (size_t bk = 0; bk < blocks.size(); ++bk) {
    for (int i : blocks[bk]) {
      if (i < 0 || i >= n || owner[static_cast<size_t>(i)] != -1) {
        throw CoexError(Errc::BadInput, "blocks must partition the basis indices");
      }
      owner[static_cast<size_t>(i)] = static_cast<int>(bk);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (owner[static_cast<size_t>(i)] == -1) {
      throw CoexError(Errc::BadInput, "blocks must partition the basis indices");
    }
    for (int j = 0; j < n; ++j) {
      if (owner[static_cast<size_t>(i)] != owner[static_cast<size_t>(j)] &&
          (std::abs(a.matrix().at(i, j)) > 1e-9 || std::abs(b.matrix().at(i, j)) > 1e-9)) {
        throw CoexError(Errc::NotBlockDiagonal, "off-block entry above 1e-9");
      }
    }
  }

  CoexVerdict out;
  out.decision = CoexDecision::Coexistent;
  out.method = CoexMethod::Commuting;
  Matrix we(n), wf(n), wg(n);
  bool have_witness = true;
  for (const auto& idx : blocks) {
    const int m = static_cast<int>(idx.size());
    Matrix sa(m), sb(m);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        sa.at(r, c) = a.matrix().at(idx[static_cast<size_t>(r)], idx[static_cast<size_t>(c)]);
        sb.at(r, c) = b.matrix().at(idx[static_cast<size_t>(r)], idx[static_cast<size_t>(c)]);
      }
    }
    const Effect ea(HermitianMatrix::from_hermitian_expr(sa), kWitnessTol);
    const Effect eb(HermitianMatrix::from_hermitian_expr(sb), kWitnessTol);
    const CoexVerdict bv = coexist(ea, eb, cfg);
    if (static_cast<int>(bv.method) > static_cast<int>(out.method)) out.method = bv.method;
    out.residual = std::max(out.residual, bv.residual);
    if (bv.decision == CoexDecision::NotCoexistent) {
      out.decision = CoexDecision::NotCoexistent;
      out.witness.reset();
      return out;
    }
    if (bv.decision == CoexDecision::Undecided) {
      out.decision = CoexDecision::Undecided;
      have_witness = false;
      continue;
    }
    if (bv.witness && have_witness) {
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
          const int i = idx[static_cast<size_t>(r)];
          const int j = idx[static_cast<size_t>(c)];
          we.at(i, j) = bv.witness->e.matrix().at(r, c);
          wf.at(i, j) = bv.witness->f.matrix().at(r, c);
          wg.at(i, j) = bv.witness->g.matrix().at(r, c);
        }
      }
    } else {
      have_witness = false;
    }
  }
  if (out.decision == CoexDecision::Coexistent && have_witness) {
    out.witness = make_witness(we, wf, wg);
  }
  return out;
}

}  // namespace coexkit
