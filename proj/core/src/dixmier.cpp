#include "twistcoh/dixmier.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "twistcoh/charpoly.hpp"
#include "twistcoh/linalg.hpp"

namespace twistcoh {

namespace {

Vec coords_in_columns(const Matrix& columns, const Vec& v, const char* what) {
  auto c = solve(columns, v);
  if (!c) throw std::logic_error(std::string("vector escaped its span: ") + what);
  return *c;
}

}  // namespace

SubalgebraView split(const LieAlgebra& L, const Covector& omega,
                     std::optional<std::size_t> x_index) {
  const std::size_t n = L.dim();
  if (omega.size() != n) throw Error("1-form has wrong length");
  if (is_zero_vec(omega)) throw OmegaZero("cannot split along the zero 1-form");
  if (!is_closed_one_form(L, omega)) throw OmegaNotClosed("splitting 1-form is not closed");

  const Matrix inclusion =
      Matrix::from_columns(kernel_basis(Matrix::from_rows({omega}, n)), n);

  std::size_t xi = 0;
  if (x_index) {
    xi = *x_index;
    if (xi >= n || omega[xi] == 0) throw Error("requested transversal index lies in ker ω");
  } else {
    while (omega[xi] == 0) ++xi;
  }
  Vec X(n);
  X[xi] = Rational(1 / omega[xi]);

  const std::size_t m = n - 1;
  LieAlgebra::BracketMap induced_brackets;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vec w = L.bracket(inclusion.col(a), inclusion.col(b));
      if (is_zero_vec(w)) continue;
      induced_brackets[{a, b}] = coords_in_columns(inclusion, w, "[b,b] outside ker ω");
    }

  Matrix adx(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const Vec w = L.bracket(X, inclusion.col(j));
    if (is_zero_vec(w)) continue;
    const Vec c = coords_in_columns(inclusion, w, "[X,b] outside ker ω");
    for (std::size_t i = 0; i < m; ++i) adx.at(i, j) = c[i];
  }

  return SubalgebraView{L, omega, inclusion, LieAlgebra(m, std::move(induced_brackets)),
                        std::move(X), std::move(adx)};
}

CohomologyOperator ad_star_on_cohomology(const SubalgebraView& view, std::size_t k) {
  const std::size_t m = view.induced.dim();
  const Matrix seed = view.adx.transpose();  // dual action on 1-form coordinates
  const Matrix a_k = derivation_matrix(seed, MonomialBasis(m, k));
  const Matrix a_next = derivation_matrix(seed, MonomialBasis(m, k + 1));
  const Twist none = Twist::untwisted(view.induced);
  const Matrix d_k = differential_wedge_form(view.induced, k, none).matrix;
  if (d_k * a_k != a_next * d_k)
    throw std::logic_error("transversal action fails to commute with the differential");

  CohomologyOperator out;
  out.degree = k;
  out.representatives = cohomology_space(view.induced, none, k).representatives;
  const std::size_t s = out.representatives.size();
  out.op = Matrix(s, s);
  if (s == 0) return out;

  // Express A·r_i as Σ c_j r_j + (exact form); the representative block of any
  // solution is unique because the representatives meet the image trivially.
  std::vector<Vec> cols = out.representatives;
  const Matrix d_prev = (k == 0) ? Matrix(binomial(m, k), 0)
                                 : differential_wedge_form(view.induced, k - 1, none).matrix;
  for (std::size_t j = 0; j < d_prev.cols(); ++j) cols.push_back(d_prev.col(j));
  const Matrix decomp = Matrix::from_columns(cols, binomial(m, k));
  for (std::size_t i = 0; i < s; ++i) {
    const Vec c = coords_in_columns(decomp, a_k * out.representatives[i],
                                    "action image not a cocycle class");
    for (std::size_t j = 0; j < s; ++j) out.op.at(j, i) = c[j];
  }
  return out;
}

OperatorSpectrum operator_spectrum(const SubalgebraView& view) {
  OperatorSpectrum out;
  std::set<Rational> all;
  for (std::size_t k = 0; k <= view.induced.dim(); ++k) {
    const CohomologyOperator co = ad_star_on_cohomology(view, k);
    const CharPolyFactorization fact = char_poly_rational_roots(co.op);
    SpectrumEntry entry;
    entry.degree = k;
    entry.op = co.op;
    entry.eigenvalues = fact.rational_roots;
    for (const auto& [root, mult] : fact.rational_roots) all.insert(root);
    entry.residual = poly_to_string(fact.residual);
    entry.complete = poly_degree(fact.residual) == 0;
    out.complete = out.complete && entry.complete;
    out.degrees.push_back(std::move(entry));
  }
  out.spec_union.assign(all.begin(), all.end());
  return out;
}

NontrivialitySet nontriviality_set(const LieAlgebra& L, const Covector& omega,
                                   std::optional<std::size_t> x_index) {
  const SubalgebraView view = split(L, omega, x_index);
  const OperatorSpectrum spec = operator_spectrum(view);

  NontrivialitySet out;
  out.omega = omega;
  out.complete = spec.complete;
  for (const auto& entry : spec.degrees)
    if (!entry.complete) {
      std::ostringstream msg;
      msg << "degree " << entry.degree << ": irrational spectrum factor " << entry.residual
          << "; only the rational eigenvalues are listed";
      out.warnings.push_back(msg.str());
    }

  for (const auto& mu : spec.spec_union) out.lambdas.push_back(Rational(-mu));
  std::sort(out.lambdas.begin(), out.lambdas.end());
  for (const auto& lam : out.lambdas) {
    BettiTable table = betti(L, Twist(L, omega, lam));
    if (table.all_zero())
      throw std::logic_error("spectrum route claims nontriviality but the Betti table is zero");
    out.certificates.push_back(NontrivialityCertificate{lam, std::move(table)});
  }
  return out;
}

LESReport verify_les(const LieAlgebra& L, const Covector& omega, const Rational& lambda,
                     std::optional<std::size_t> x_index) {
  const SubalgebraView view = split(L, omega, x_index);
  const std::size_t n = L.dim();

  LESReport out;
  out.lambda = lambda;
  out.kernel_dims.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const CohomologyOperator co = ad_star_on_cohomology(view, i);
    const std::size_t s = co.representatives.size();
    out.kernel_dims[i] = s - rank(co.op.plus_scaled_identity(lambda));
  }
  out.predicted.assign(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t ki = (i < n) ? out.kernel_dims[i] : 0;
    const std::size_t kprev = (i == 0) ? 0 : out.kernel_dims[i - 1];
    out.predicted[i] = ki + kprev;
  }
  out.actual = betti(L, Twist(L, omega, lambda)).betti;
  out.all_equal = true;
  out.equal_by_degree.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    out.equal_by_degree[i] = out.predicted[i] == out.actual[i];
    if (!out.equal_by_degree[i]) out.all_equal = false;
  }
  return out;
}

ContractionReport contraction_identity_check(const LieAlgebra& L, const Covector& omega,
                                             std::size_t max_degree,
                                             std::optional<std::size_t> x_index) {
  const SubalgebraView view = split(L, omega, x_index);
  const std::size_t n = L.dim();
  const std::size_t m = n - 1;

  std::vector<Vec> pcols;
  for (std::size_t j = 0; j < m; ++j) pcols.push_back(view.inclusion.col(j));
  pcols.push_back(view.X);
  const Matrix pinv = inverse(Matrix::from_columns(pcols, n));
  std::vector<Covector> eta;  // duals of the kernel columns, extended to kill X
  for (std::size_t a = 0; a < m; ++a) eta.push_back(pinv.row(a));

  ContractionReport out;
  out.max_degree = max_degree;
  const Twist none = Twist::untwisted(L);
  const Matrix seed = view.adx.transpose();

  for (std::size_t q = 0; q <= std::min(max_degree, m); ++q) {
    out.checked_degrees.push_back(q);
    const MonomialBasis small(m, q), big(n, q);

    // Embedding Λ^q(b*) → Λ^q(g*): wedge the extended duals factor by factor.
    Matrix embed(big.size(), small.size());
    for (std::size_t col = 0; col < small.size(); ++col) {
      Vec v{Rational(1)};
      const auto idx = mask_indices(small[col]);
      for (std::size_t t = idx.size(); t-- > 0;)
        v = wedge_one_form_matrix(n, idx.size() - 1 - t, eta[idx[t]]) * v;
      for (std::size_t r = 0; r < big.size(); ++r) embed.at(r, col) = v[r];
    }

    // Restriction Λ^q(g*) → Λ^q(b*): evaluate on tuples of kernel columns.
    Matrix restrict(small.size(), big.size());
    for (std::size_t r = 0; r < small.size(); ++r) {
      const auto acols = mask_indices(small[r]);
      for (std::size_t c = 0; c < big.size(); ++c) {
        const auto trows = mask_indices(big[c]);
        Matrix sub(q, q);
        for (std::size_t i = 0; i < q; ++i)
          for (std::size_t j = 0; j < q; ++j) sub.at(i, j) = view.inclusion.at(trows[i], acols[j]);
        restrict.at(r, c) = determinant(sub);
      }
    }

    if (!(restrict * embed == Matrix::identity(small.size()))) out.embedding_restricts = false;
    if (q > 0 && !(contraction_matrix(n, q, view.X) * embed).is_zero())
      out.contraction_vanishes = false;

    const Matrix lhs = restrict * contraction_matrix(n, q + 1, view.X) *
                       differential_wedge_form(L, q, none).matrix * embed;
    if (lhs != derivation_matrix(seed, small)) out.identity_holds = false;
  }
  return out;
}

}  // namespace twistcoh
