#include "twistcoh/cohomology.hpp"

#include <algorithm>

#include "twistcoh/linalg.hpp"

namespace twistcoh {

BettiTable betti(const LieAlgebra& L, const Twist& t) {
  const std::size_t n = L.dim();
  std::vector<std::size_t> ranks(n + 1, 0);
  for (std::size_t q = 0; q < n; ++q)  // d_n lands in the zero space
    ranks[q] = rank(differential_wedge_form(L, q, t).matrix);
  BettiTable out{t, std::vector<std::size_t>(n + 1, 0), 0};
  for (std::size_t q = 0; q <= n; ++q) {
    const std::size_t prev = (q == 0) ? 0 : ranks[q - 1];
    out.betti[q] = binomial(n, q) - ranks[q] - prev;
    out.euler += (q % 2 == 0) ? static_cast<long long>(out.betti[q])
                              : -static_cast<long long>(out.betti[q]);
  }
  return out;
}

CohomologySpace cohomology_space(const LieAlgebra& L, const Twist& t, std::size_t q) {
  const std::size_t n = L.dim();
  CohomologySpace out{q, 0, {}};
  if (q > n) return out;
  const auto cocycles = kernel_basis(differential_wedge_form(L, q, t).matrix);
  std::vector<Vec> image_rows;
  if (q > 0)
    image_rows = row_space_basis(differential_wedge_form(L, q - 1, t).matrix.transpose());
  std::vector<Vec> reduced;
  for (const auto& z : cocycles) {
    Vec r = reduce_against(z, image_rows);
    if (!is_zero_vec(r)) reduced.push_back(std::move(r));
  }
  if (!reduced.empty())
    out.representatives = row_space_basis(Matrix::from_rows(reduced, binomial(n, q)));
  out.dimension = out.representatives.size();
  return out;
}

std::vector<BettiTable> scan_line(const LieAlgebra& L, const Covector& omega,
                                  const std::vector<Rational>& lambdas) {
  std::vector<BettiTable> out;
  out.reserve(lambdas.size());
  for (const auto& lam : lambdas) out.push_back(betti(L, Twist(L, omega, lam)));
  return out;
}

NovikovReport novikov_report(const LieAlgebra& L, const Covector& omega,
                             std::vector<Rational> candidate_lambdas,
                             const std::vector<Covector>& exceptional_covectors) {
  std::sort(candidate_lambdas.begin(), candidate_lambdas.end());
  candidate_lambdas.erase(std::unique(candidate_lambdas.begin(), candidate_lambdas.end()),
                          candidate_lambdas.end());

  const std::size_t n = L.dim();
  const auto hits_exceptional = [&](const Rational& lam) {
    Covector neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = Rational(-(lam * omega[i]));
    return std::find(exceptional_covectors.begin(), exceptional_covectors.end(), neg) !=
           exceptional_covectors.end();
  };
  Rational generic = 1;
  while (std::binary_search(candidate_lambdas.begin(), candidate_lambdas.end(), generic) ||
         hits_exceptional(generic))
    generic += 1;

  NovikovReport out{omega, generic, betti(L, Twist(L, omega, generic)), {}, {}, {}};
  for (const auto& lam : candidate_lambdas) {
    BettiTable table = betti(L, Twist(L, omega, lam));
    if (!table.all_zero()) out.exceptional.push_back(std::move(table));
  }
  out.morse_lower_bounds.assign(n + 1, 0);
  for (std::size_t q = 0; q <= n; ++q) {
    std::size_t m = out.generic.betti[q];
    for (const auto& table : out.exceptional) m = std::max(m, table.betti[q]);
    out.morse_lower_bounds[q] = m;
  }
  out.note =
      "lower bounds assume a closed 1-form with commensurable periods in the class of omega; "
      "each value bounds the count of index-q critical points from below";
  return out;
}

}  // namespace twistcoh
