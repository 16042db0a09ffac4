#pragma once

#include <string>
#include <vector>

#include "twistcoh/cohomology.hpp"
#include "twistcoh/dixmier.hpp"
#include "twistcoh/weights.hpp"

namespace twistcoh {

// Input documents are JSON:
//   { "dim": 3,
//     "basis": ["e1","e2","e3"],            // optional
//     "brackets": [ { "i": 1, "j": 2, "terms": [ { "k": 3, "c": "1" } ] } ] }
// Indices are 1-based with i < j; coefficients are exact rational strings
// "p/q" (the "/q" may be omitted). Duplicate (i,j) pairs and duplicate k
// within one bracket are rejected. Throws ParseError with a field diagnostic.
LieAlgebra parse_algebra_spec(const std::string& json_text);
LieAlgebra load_algebra_file(const std::string& path);

// Canonical emission: brackets ascending by (i,j), terms ascending by k, zero
// coefficients dropped, basis names always present. indent < 0 → compact.
std::string emit_algebra_spec(const LieAlgebra& L, int indent = 2);

// 64-bit FNV-1a of the compact canonical emission, as 16 hex digits.
// Parse → emit → parse is digest-stable.
std::string algebra_digest(const LieAlgebra& L);

struct CheckReport {
  std::size_t dim = 0;
  JacobiReport jacobi;
  Classification cls;
  bool unimodular = false;
  std::size_t derived_dim = 0;
};

CheckReport check_algebra(const LieAlgebra& L);

// JSON payload renderers. Deterministic key order, rationals as strings,
// compact by default; these return serialized text so the JSON library stays
// out of the public headers.
std::string to_json(const CheckReport& r, int indent = -1);
std::string to_json(const BettiTable& t, int indent = -1);
std::string to_json(const std::vector<BettiTable>& tables, int indent = -1);
std::string to_json(const NovikovReport& r, int indent = -1);
std::string to_json(const OperatorSpectrum& s, int indent = -1);
std::string to_json(const NontrivialitySet& s, int indent = -1);
std::string to_json(const WeightSystem& w, int indent = -1);
std::string to_json(const LESReport& r, int indent = -1);
std::string to_json(const std::vector<LESReport>& reports, int indent = -1);

// Plain-text renderers for terminal tables.
std::string to_text(const CheckReport& r);
std::string to_text(const BettiTable& t);
std::string to_text(const std::vector<BettiTable>& tables);
std::string to_text(const NovikovReport& r);
std::string to_text(const OperatorSpectrum& s);
std::string to_text(const NontrivialitySet& s);
std::string to_text(const WeightSystem& w);
std::string to_text(const std::vector<LESReport>& reports);

std::string format_covector(const Covector& w);  // "(1,0,-1/2)"

// Stable output envelope wrapped around a payload produced by to_json:
//   { "command": ..., "input": { "source": ..., "digest": ... },
//     "warnings": [...], "result": <payload> }
std::string render_document(const std::string& command, const std::string& source,
                            const std::string& digest, const std::vector<std::string>& warnings,
                            const std::string& payload_json, int indent = 2);

}  // namespace twistcoh
