#include "twistcoh/weights.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "twistcoh/charpoly.hpp"
#include "twistcoh/linalg.hpp"

namespace twistcoh {

namespace {

Vec flatten(const Matrix& m) {
  Vec out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

Matrix unflatten(const Vec& v, std::size_t d) {
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = v[i * d + j];
  return m;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vecs, std::size_t len) {
  std::vector<Vec> nonzero;
  for (const auto& v : vecs)
    if (!is_zero_vec(v)) nonzero.push_back(v);
  if (nonzero.empty()) return {};
  return row_space_basis(Matrix::from_rows(nonzero, len));
}

// Eigenvalue of op on the (claimed) eigenvector v: ratio at the first nonzero
// coordinate, then the whole relation re-verified exactly.
Rational eigenvalue_on(const Matrix& op, const Vec& v) {
  std::size_t i0 = 0;
  while (v[i0] == 0) ++i0;
  const Vec w = op * v;
  const Rational mu(w[i0] / v[i0]);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (Rational(mu * v[i]) != w[i])
      throw std::logic_error("claimed common eigenvector fails verification");
  return mu;
}

// Common eigenvector over ℚ of a family of operators on a d-dimensional
// space whose span is a solvable Lie algebra. Classical recursion: peel a
// codimension-one ideal of the span containing all commutators, take its
// common weight space (induction), and diagonalize the leftover operator on
// that space — the weight space is invariant by the characteristic-zero trace
// lemma. The only step that can fail over ℚ is the final eigenvalue, which
// surfaces as RationalSpectrumRequired.
Vec common_eigenvector(const std::vector<Matrix>& ops, std::size_t d) {
  std::vector<Vec> flat;
  flat.reserve(ops.size());
  for (const auto& op : ops) flat.push_back(flatten(op));
  const std::vector<Vec> h = span_basis(flat, d * d);
  if (h.empty()) {
    Vec v(d);
    v[0] = 1;
    return v;
  }

  std::vector<Matrix> hmats;
  for (const auto& row : h) hmats.push_back(unflatten(row, d));

  std::vector<Vec> comm;
  for (std::size_t i = 0; i < hmats.size(); ++i)
    for (std::size_t j = i + 1; j < hmats.size(); ++j)
      comm.push_back(flatten(hmats[i] * hmats[j] - hmats[j] * hmats[i]));
  const std::vector<Vec> derived = span_basis(comm, d * d);
  if (derived.size() >= h.size()) throw std::logic_error("operator span is not solvable");

  // complete the commutator span to the full operator span with members of
  // the original family, so the leftover operator (and the char poly any
  // diagnostics report) is an honest restricted adjoint, not a row-reduced
  // rescaling of one
  std::vector<std::size_t> extra;
  {
    std::vector<Vec> pool = derived;
    for (std::size_t i = 0; i < ops.size() && derived.size() + extra.size() < h.size(); ++i) {
      std::vector<Vec> trial = pool;
      trial.push_back(flat[i]);
      if (rank(Matrix::from_rows(trial, d * d)) == trial.size()) {
        pool.push_back(flat[i]);
        extra.push_back(i);
      }
    }
    if (derived.size() + extra.size() != h.size())
      throw std::logic_error("operator family failed to span its own echelon span");
  }

  const Matrix& z = ops[extra.front()];
  std::vector<Matrix> ideal;
  for (const auto& row : derived) ideal.push_back(unflatten(row, d));
  for (std::size_t t = 1; t < extra.size(); ++t) ideal.push_back(ops[extra[t]]);

  const Vec v0 = common_eigenvector(ideal, d);

  // weight space of the ideal through v0
  std::vector<Vec> stacked;
  for (const auto& a : ideal) {
    const Matrix shifted = a.plus_scaled_identity(Rational(-eigenvalue_on(a, v0)));
    for (std::size_t r = 0; r < d; ++r) stacked.push_back(shifted.row(r));
  }
  const std::vector<Vec> wb = kernel_basis(Matrix::from_rows(stacked, d));
  if (wb.empty()) throw std::logic_error("weight space lost its seed vector");
  const Matrix wmat = Matrix::from_columns(wb, d);

  Matrix zw(wb.size(), wb.size());
  for (std::size_t j = 0; j < wb.size(); ++j) {
    const auto c = solve(wmat, z * wb[j]);
    if (!c) throw std::logic_error("weight space not invariant under the leftover operator");
    for (std::size_t i = 0; i < wb.size(); ++i) zw.at(i, j) = (*c)[i];
  }

  const CharPolyFactorization fact = char_poly_rational_roots(zw);
  if (fact.rational_roots.empty())
    throw RationalSpectrumRequired(
        "triangularization requires an eigenvalue of an operator whose characteristic "
        "polynomial has no rational root (residual factor: " +
            poly_to_string(fact.residual) + "); refusing to approximate",
        poly_to_string(fact.residual));
  const Rational mu = fact.rational_roots.front().first;  // smallest rational root
  const auto eig = kernel_basis(zw.plus_scaled_identity(Rational(-mu)));
  if (eig.empty()) throw std::logic_error("rational eigenvalue without eigenvector");
  return wmat * eig.front();
}

struct FlagStep {
  Vec vector;      // flag member in original g coordinates
  Covector alpha;  // its weight, original dual coordinates
};

// ops: the adjoint action of each original generator on the current space V
// (dim d); lift: V-coordinates → original g-coordinates. Returns the flag
// with the common eigenvector of the whole family LAST, so every tail span is
// invariant.
std::vector<FlagStep> build_flag(const std::vector<Matrix>& ops, const Matrix& lift) {
  const std::size_t d = lift.cols();
  if (d == 0) return {};

  const Vec v = common_eigenvector(ops, d);
  Covector alpha(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) alpha[i] = eigenvalue_on(ops[i], v);

  // coordinate vectors completing v to a basis of V, earliest indices first
  std::vector<Vec> cbasis;
  {
    std::vector<Vec> pool = {v};
    for (std::size_t i = 0; i < d && cbasis.size() + 1 < d; ++i) {
      Vec e(d);
      e[i] = 1;
      std::vector<Vec> trial = pool;
      trial.push_back(e);
      if (rank(Matrix::from_rows(trial, d)) == trial.size()) {
        pool.push_back(e);
        cbasis.push_back(std::move(e));
      }
    }
  }

  std::vector<Vec> full = cbasis;
  full.push_back(v);
  const Matrix basis_cols = Matrix::from_columns(full, d);
  std::vector<Matrix> qops;  // action on V / ℚv in the cbasis images
  for (const auto& op : ops) {
    Matrix q(d - 1, d - 1);
    for (std::size_t j = 0; j + 1 < d; ++j) {
      const auto c = solve(basis_cols, op * cbasis[j]);
      if (!c) throw std::logic_error("quotient action has no coordinates");
      for (std::size_t i = 0; i + 1 < d; ++i) q.at(i, j) = (*c)[i];
    }
    qops.push_back(std::move(q));
  }

  std::vector<FlagStep> flag = build_flag(qops, lift * Matrix::from_columns(cbasis, d));
  flag.push_back(FlagStep{lift * v, std::move(alpha)});
  return flag;
}

// Recompute the structure constants in the adapted basis and hold them to the
// triangular shape; fills the equations and cross-checks each diagonal line
// against the weight pulled back through the change of basis.
void verify_structure_equations(const LieAlgebra& L, AdaptedBasis& ab) {
  const std::size_t n = L.dim();
  const std::size_t k = ab.k;
  const LieAlgebra lp = change_basis(L, ab.change_of_basis);
  const Matrix d1 = differential_wedge_form(lp, 1, Twist::untwisted(lp)).matrix;
  const MonomialBasis pairs(n, 2);
  const Matrix pt = ab.change_of_basis.transpose();

  for (std::size_t j = 1; j <= n; ++j) {  // 1-based adapted index
    StructureEquation eq;
    eq.j = j;
    eq.alpha_primed.assign(n, Rational(0));
    for (std::size_t row = 0; row < pairs.size(); ++row) {
      const auto idx = mask_indices(pairs[row]);
      const std::size_t a = idx[0] + 1, b = idx[1] + 1;
      const Rational& coeff = d1.at(row, j - 1);
      if (coeff == 0) continue;
      if (j <= k) throw std::logic_error("complement dual form failed to be closed");
      if (b > j) throw std::logic_error("structure equation leaks past its own index");
      if (b == j) {
        if (a > k) throw std::logic_error("weight line touches the derived flag");
        eq.alpha_primed[a - 1] = coeff;
      } else {
        eq.quadratic.emplace_back(a, b, coeff);
      }
    }
    if (j <= k) continue;
    if (eq.alpha_primed != pt * ab.weights[j - k - 1])
      throw std::logic_error("structure-equation weight disagrees with the flag weight");
    ab.equations.push_back(std::move(eq));
  }
}

}  // namespace

AdaptedBasis adapted_basis(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  if (!classify(L).solvable)
    throw NotSolvable("weight construction needs a solvable algebra");

  const std::vector<Vec> m_rows = derived_subalgebra(L);
  const std::size_t d = m_rows.size();
  const std::size_t k = n - d;
  const Matrix mcols = Matrix::from_columns(m_rows, n);

  std::vector<Matrix> ops;  // ad(e_i) restricted to [g,g], column basis m_rows
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei(n);
    ei[i] = 1;
    Matrix t(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const auto c = solve(mcols, L.bracket(ei, m_rows[j]));
      if (!c) throw std::logic_error("adjoint action escaped the derived subalgebra");
      for (std::size_t r = 0; r < d; ++r) t.at(r, j) = (*c)[r];
    }
    ops.push_back(std::move(t));
  }

  const std::vector<FlagStep> flag = build_flag(ops, mcols);

  std::vector<Vec> pcols;  // earliest coordinate vectors independent of [g,g]
  {
    std::vector<Vec> pool = m_rows;
    for (std::size_t i = 0; i < n && pcols.size() < k; ++i) {
      Vec e(n);
      e[i] = 1;
      std::vector<Vec> trial = pool;
      trial.push_back(e);
      if (rank(Matrix::from_rows(trial, n)) == trial.size()) {
        pool.push_back(e);
        pcols.push_back(std::move(e));
      }
    }
  }
  for (const auto& step : flag) pcols.push_back(step.vector);

  AdaptedBasis out;
  out.change_of_basis = Matrix::from_columns(pcols, n);
  out.k = k;
  for (const auto& step : flag) out.weights.push_back(step.alpha);
  verify_structure_equations(L, out);
  return out;
}

std::vector<Covector> omega_set(const std::vector<Covector>& weights) {
  if (weights.empty()) return {};
  const std::size_t d = weights.size();
  const std::size_t n = weights.front().size();
  std::set<Covector> sums;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << d); ++mask) {
    Covector s(n);
    for (std::size_t t = 0; t < d; ++t) {
      if (!(mask & (std::uint64_t(1) << t))) continue;
      for (std::size_t i = 0; i < n; ++i) s[i] += weights[t][i];
    }
    sums.insert(std::move(s));
  }
  return {sums.begin(), sums.end()};
}

std::vector<Covector> omega_tilde(const LieAlgebra& L, const std::vector<Covector>& omega_set) {
  std::vector<Covector> out;
  for (const auto& theta : omega_set) {
    if (is_zero_vec(theta)) continue;
    if (!betti(L, Twist(L, theta, Rational(-1))).all_zero()) out.push_back(theta);
  }
  return out;
}

WeightSystem weight_system(const LieAlgebra& L) {
  WeightSystem ws;
  ws.basis = adapted_basis(L);
  ws.weights = ws.basis.weights;
  ws.omega_set = omega_set(ws.weights);
  ws.omega_tilde = omega_tilde(L, ws.omega_set);
  ws.sum_of_all.assign(L.dim(), Rational(0));
  for (const auto& a : ws.weights)
    for (std::size_t i = 0; i < a.size(); ++i) ws.sum_of_all[i] += a[i];
  return ws;
}

VanishingReport verify_vanishing(const LieAlgebra& L, const std::vector<Twist>& probes,
                                 const std::vector<Covector>& omega_set) {
  VanishingReport report;
  for (const auto& t : probes) {
    if (t.effective_zero()) throw ProbeInExceptionalSet("probe has λω = 0");
    Covector neg(t.effective.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = Rational(-t.effective[i]);
    if (std::find(omega_set.begin(), omega_set.end(), neg) != omega_set.end())
      throw ProbeInExceptionalSet("probe has -λω inside the weight sum set");
    VanishingVerdict verdict{t, betti(L, t).all_zero()};
    if (!verdict.all_zero) report.pass = false;
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace twistcoh
