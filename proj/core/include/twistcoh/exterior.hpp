#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace twistcoh {

// Basis monomial of the exterior algebra on n generators: the set of dual
// indices as an n-bit mask (bit i = generator i, 0-based).
using Mask = std::uint32_t;

std::size_t binomial(std::size_t n, std::size_t k);

std::vector<std::size_t> mask_indices(Mask m);  // ascending bit positions

// sign of sorting w_A ^ w_B into the monomial w_{A|B}; 0 if A and B overlap.
// Both factors are taken with their indices ascending.
int merge_sign(Mask a, Mask b);

// Degree-q monomials in n generators, ordered lexicographically by the sorted
// index tuple. This is NOT numeric mask order: {1,4} precedes {2,3} while
// 0b1001 > 0b0110.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, std::size_t q);

  std::size_t n() const { return n_; }
  std::size_t degree() const { return q_; }
  std::size_t size() const { return masks_.size(); }
  Mask operator[](std::size_t idx) const { return masks_[idx]; }
  const std::vector<Mask>& masks() const { return masks_; }
  std::size_t index_of(Mask m) const;  // throws on non-member

 private:
  std::size_t n_, q_;
  std::vector<Mask> masks_;
  std::unordered_map<Mask, std::size_t> index_;
};

}  // namespace twistcoh
