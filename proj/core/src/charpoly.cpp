#include "twistcoh/charpoly.hpp"

#include <map>
#include <optional>
#include <set>

#include "twistcoh/errors.hpp"

namespace twistcoh {

Poly char_poly(const Matrix& a) {
  if (a.rows() != a.cols()) throw NonSquare("char_poly of non-square matrix");
  const std::size_t n = a.rows();
  Poly p(n + 1);
  p[n] = 1;
  if (n == 0) return p;
  // Faddeev-LeVerrier: M_1 = I; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
  Matrix am(n, n);  // A * M_k, carried between steps
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix m = (k == 1) ? Matrix::identity(n) : am;
    if (k > 1) m = m.plus_scaled_identity(p[n - k + 1]);
    am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
    p[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return p;
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::size_t poly_degree(const Poly& p) {
  std::size_t d = p.size();
  while (d > 1 && p[d - 1] == 0) --d;
  return d - 1;
}

std::string poly_to_string(const Poly& p) {
  const std::size_t deg = poly_degree(p);
  if (deg == 0) return to_string(p.empty() ? Rational(0) : p[0]);
  std::string out;
  for (std::size_t i = deg + 1; i-- > 0;) {
    const Rational& c = p[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = (mag == 1);
    if (i == 0) {
      out += to_string(mag);
    } else {
      if (!unit) out += to_string(mag) + "*";
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

namespace {

// x - root division, monic-friendly; remainder is checked by the caller.
Poly deflate(const Poly& p, const Rational& root) {
  const std::size_t deg = poly_degree(p);
  Poly q(deg);
  Rational carry = p[deg];
  for (std::size_t i = deg; i-- > 0;) {
    q[i] = carry;
    carry = p[i] + root * carry;
  }
  // carry is p(root); callers only deflate at exact roots
  return q;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> divs;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      divs.push_back(i);
      mpz_class j = n / i;
      if (j != i) divs.push_back(j);
    }
  }
  return divs;
}

// First (smallest) rational root of p, or nullopt. Candidates come from the
// rational-root theorem applied to the primitive integer form of p.
std::optional<Rational> smallest_rational_root(const Poly& p) {
  const std::size_t deg = poly_degree(p);
  if (deg == 0) return std::nullopt;
  // clear denominators
  mpz_class lcm = 1;
  for (std::size_t i = 0; i <= deg; ++i) {
    mpz_class den = p[i].get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<mpz_class> z(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) z[i] = mpz_class(p[i].get_num() * (lcm / p[i].get_den()));
  const mpz_class a0 = z[0];  // caller guarantees nonzero (0-roots stripped)
  const mpz_class ad = z[deg];
  std::set<Rational> candidates;
  for (const auto& num : positive_divisors(a0))
    for (const auto& den : positive_divisors(ad)) {
      Rational c(num, den);
      c.canonicalize();
      candidates.insert(c);
      candidates.insert(Rational(-c));
    }
  for (const auto& c : candidates)
    if (poly_eval(p, c) == 0) return c;
  return std::nullopt;
}

}  // namespace

CharPolyFactorization char_poly_rational_roots(const Matrix& m) {
  CharPolyFactorization out;
  out.polynomial = char_poly(m);
  Poly p = out.polynomial;
  std::map<Rational, std::size_t> roots;
  while (poly_degree(p) > 0 && p[0] == 0) {
    ++roots[Rational(0)];
    p.erase(p.begin());
  }
  while (poly_degree(p) > 0) {
    const auto r = smallest_rational_root(p);
    if (!r) break;
    while (poly_degree(p) > 0 && poly_eval(p, *r) == 0) {
      p = deflate(p, *r);
      ++roots[*r];
    }
  }
  out.rational_roots.assign(roots.begin(), roots.end());
  p.resize(poly_degree(p) + 1);
  out.residual = std::move(p);
  return out;
}

}  // namespace twistcoh
