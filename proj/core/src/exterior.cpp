#include "twistcoh/exterior.hpp"

#include <bit>

#include "twistcoh/errors.hpp"

namespace twistcoh {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t acc = 1;
  for (std::size_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; m >> i; ++i)
    if ((m >> i) & 1u) idx.push_back(i);
  return idx;
}

int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // inversions: pairs (x in a, y in b) with x > y
  int inversions = 0;
  for (Mask rest = b; rest;) {
    const int bit = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(a >> (bit + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

MonomialBasis::MonomialBasis(std::size_t n, std::size_t q) : n_(n), q_(q) {
  if (n >= 32) throw Error("exterior algebra limited to 31 generators");
  if (q > n) return;  // empty basis
  // enumerate q-combinations of {0..n-1} in lexicographic tuple order
  std::vector<std::size_t> tuple(q);
  for (std::size_t i = 0; i < q; ++i) tuple[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : tuple) m |= Mask(1) << i;
    index_[m] = masks_.size();
    masks_.push_back(m);
    if (q == 0) break;
    // advance: rightmost position that can move right
    std::size_t t = q;
    while (t > 0 && tuple[t - 1] == n - q + (t - 1)) --t;
    if (t == 0) break;
    ++tuple[t - 1];
    for (std::size_t s = t; s < q; ++s) tuple[s] = tuple[s - 1] + 1;
  }
}

std::size_t MonomialBasis::index_of(Mask m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) throw Error("monomial not in basis");
  return it->second;
}

}  // namespace twistcoh
