#include "twistcoh/differential.hpp"

#include <bit>

namespace twistcoh {

Matrix wedge_one_form_matrix(std::size_t n, std::size_t q, const Covector& w) {
  if (w.size() != n) throw Error("1-form has wrong length");
  MonomialBasis src(n, q), dst(n, q + 1);
  Matrix out(dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const Mask s = src[col];
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] == 0 || (s & (Mask(1) << i))) continue;
      const int sg = merge_sign(Mask(1) << i, s);
      out.at(dst.index_of(s | (Mask(1) << i)), col) += sg * w[i];
    }
  }
  return out;
}

Matrix contraction_matrix(std::size_t n, std::size_t q, const Vec& x) {
  if (x.size() != n) throw Error("vector has wrong length");
  if (q == 0) return Matrix(0, 1);
  MonomialBasis src(n, q), dst(n, q - 1);
  Matrix out(dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const auto idx = mask_indices(src[col]);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (x[idx[p]] == 0) continue;
      const Rational term = (p % 2 == 0) ? x[idx[p]] : Rational(-x[idx[p]]);
      out.at(dst.index_of(src[col] & ~(Mask(1) << idx[p])), col) += term;
    }
  }
  return out;
}

Matrix derivation_matrix(const Matrix& m, const MonomialBasis& basis) {
  const std::size_t n = basis.n();
  if (m.rows() != n || m.cols() != n) throw Error("derivation seed has wrong shape");
  Matrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto idx = mask_indices(basis[col]);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const Mask rest = basis[col] & ~(Mask(1) << idx[p]);
      for (std::size_t b = 0; b < n; ++b) {
        if (m.at(b, idx[p]) == 0 || (rest & (Mask(1) << b))) continue;
        const int sg = ((p % 2 == 0) ? 1 : -1) * merge_sign(Mask(1) << b, rest);
        out.at(basis.index_of(rest | (Mask(1) << b)), col) += sg * m.at(b, idx[p]);
      }
    }
  }
  return out;
}

DifferentialMatrix differential_wedge_form(const LieAlgebra& L, std::size_t q, const Twist& t) {
  const std::size_t n = L.dim();
  MonomialBasis src(n, q), dst(n, q + 1);
  Matrix out(dst.size(), src.size());
  // Graded-derivation assembly from the generator rule
  // d w^k = Σ_{i<j} c_{ij}^k w^i ∧ w^j; slot p of the monomial picks up (-1)^p.
  for (std::size_t col = 0; col < src.size(); ++col) {
    const auto idx = mask_indices(src[col]);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const Mask rest = src[col] & ~(Mask(1) << idx[p]);
      for (const auto& [key, value] : L.brackets()) {
        const Rational& c = value[idx[p]];
        if (c == 0) continue;
        const Mask pair = (Mask(1) << key.first) | (Mask(1) << key.second);
        const int ms = merge_sign(pair, rest);
        if (ms == 0) continue;
        const int sg = (p % 2 == 0) ? ms : -ms;
        out.at(dst.index_of(rest | pair), col) += sg * c;
      }
    }
  }
  if (!t.effective_zero()) out = out + wedge_one_form_matrix(n, q, t.effective);
  return DifferentialMatrix{q, std::move(out), t};
}

DifferentialMatrix differential_rep_form(const LieAlgebra& L, std::size_t q, const Twist& t) {
  const std::size_t n = L.dim();
  MonomialBasis src(n, q), dst(n, q + 1);
  Matrix out(dst.size(), src.size());
  // Evaluate (d w_S)(e_{t_1}, …, e_{t_{q+1}}) literally: a rank-one action
  // term ξ ↦ λ w(ξ) over omitted slots, plus bracket insertions resorted into
  // ascending order.
  for (std::size_t row = 0; row < dst.size(); ++row) {
    const Mask tmask = dst[row];
    const auto tt = mask_indices(tmask);
    for (std::size_t p = 0; p < tt.size(); ++p) {
      const Rational& act = t.effective[tt[p]];
      if (act == 0) continue;
      const std::size_t col = src.index_of(tmask & ~(Mask(1) << tt[p]));
      out.at(row, col) += (p % 2 == 0) ? act : Rational(-act);
    }
    for (std::size_t pa = 0; pa + 1 < tt.size(); ++pa) {
      for (std::size_t pb = pa + 1; pb < tt.size(); ++pb) {
        const Vec v = L.bracket_basis(tt[pa], tt[pb]);
        if (is_zero_vec(v)) continue;
        const Mask rest = tmask & ~(Mask(1) << tt[pa]) & ~(Mask(1) << tt[pb]);
        const int sg_ab = ((pa + pb + 1) % 2 == 0) ? 1 : -1;
        for (std::size_t k = 0; k < n; ++k) {
          if (v[k] == 0 || (rest & (Mask(1) << k))) continue;
          const int below = std::popcount(rest & ((Mask(1) << k) - 1));
          const int sg = (below % 2 == 0) ? sg_ab : -sg_ab;
          out.at(row, src.index_of(rest | (Mask(1) << k))) += sg * v[k];
        }
      }
    }
  }
  return DifferentialMatrix{q, std::move(out), t};
}

}  // namespace twistcoh
