#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twistcoh/cohomology.hpp"

namespace twistcoh {

// Frozen expected values for a zoo entry. Every field is an assertion the
// test suite recomputes from scratch; absent fields assert nothing.
struct ExpectedBetti {
  Covector omega;
  Rational lambda;
  std::vector<std::size_t> table;
};

struct CertifiedPair {
  Rational lambda;
  std::array<std::size_t, 2> degrees{};  // the two adjacent nonzero degrees
  std::size_t value = 0;                 // common size of both Betti numbers
};

struct ZooFixture {
  std::vector<ExpectedBetti> betti;
  std::optional<Covector> probe_omega;  // canonical closed 1-form for spectra
  std::optional<std::vector<Covector>> weights;
  std::optional<std::vector<std::vector<Rational>>> spectra;  // distinct values per degree
  std::optional<std::vector<Rational>> nontrivial_lambdas;
  std::vector<CertifiedPair> certified_pairs;
};

struct ZooEntry {
  std::string name;  // e.g. "torus(3)", "g0"
  std::string base;  // constructor family
  LieAlgebra algebra;
  std::string provenance;
  std::optional<ZooFixture> expected;
};

// Constructors validate their own structure constants against the Jacobi
// identity; a failure is a hard bug, not an input error.
ZooEntry torus(std::size_t n);       // abelian, n ≥ 1
ZooEntry heisenberg();               // [e1,e2] = e3
ZooEntry v_family(std::size_t n);    // [e_i,e_j] = (j-i) e_{i+j} while i+j ≤ n, n ≥ 3
ZooEntry g0();                       // [e1,e2] = e2, [e1,e3] = -e3
ZooEntry diag_example(std::size_t n);  // dim n+1, X first, [X,e_i] = e_i

std::vector<std::string> zoo_base_names();

// Lookup by family name with an optional size (defaults: torus 3, v_family 6,
// diag_example 3). Throws Error on unknown names or out-of-range sizes.
ZooEntry zoo_entry(const std::string& base, std::optional<std::size_t> n = std::nullopt);

// The fixed roster driven through the property sweeps.
std::vector<ZooEntry> zoo_sample();

// Load expected values from the shared fixtures file, matching on name.
void attach_fixtures(std::vector<ZooEntry>& entries, const std::string& json_path);

}  // namespace twistcoh
