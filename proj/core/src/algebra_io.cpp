#include "twistcoh/algebra_io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace twistcoh {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

// The monomial masks are 32-bit; anything near that size is astronomically
// out of reach anyway, so the input gate stops at 32.
constexpr std::size_t kMaxDim = 32;

std::size_t index_field(const json& node, const std::string& path, const char* key,
                        std::size_t dim) {
  if (!node.contains(key)) throw ParseError(path + ": missing \"" + key + "\"");
  const json& v = node.at(key);
  if (!v.is_number_integer())
    throw ParseError(path + "." + key + ": expected a 1-based integer index");
  const long long raw = v.get<long long>();
  if (raw < 1 || static_cast<std::size_t>(raw) > dim)
    throw ParseError(path + "." + key + ": index " + std::to_string(raw) + " out of range 1.." +
                     std::to_string(dim));
  return static_cast<std::size_t>(raw) - 1;
}

}  // namespace

LieAlgebra parse_algebra_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  if (!doc.contains("dim")) throw ParseError("top level: missing \"dim\"");
  if (!doc.at("dim").is_number_integer() || doc.at("dim").get<long long>() < 1)
    throw ParseError("dim: expected a positive integer");
  const std::size_t dim = doc.at("dim").get<std::size_t>();
  if (dim > kMaxDim)
    throw ParseError("dim: " + std::to_string(dim) + " exceeds the supported maximum " +
                     std::to_string(kMaxDim));

  std::vector<std::string> names;
  if (doc.contains("basis")) {
    const json& basis = doc.at("basis");
    if (!basis.is_array() || basis.size() != dim)
      throw ParseError("basis: expected an array of " + std::to_string(dim) + " names");
    for (std::size_t i = 0; i < dim; ++i) {
      if (!basis.at(i).is_string())
        throw ParseError("basis[" + std::to_string(i) + "]: expected a string");
      names.push_back(basis.at(i).get<std::string>());
    }
  }

  LieAlgebra::BracketMap brackets;
  if (doc.contains("brackets")) {
    const json& list = doc.at("brackets");
    if (!list.is_array()) throw ParseError("brackets: expected an array");
    for (std::size_t bi = 0; bi < list.size(); ++bi) {
      const std::string path = "brackets[" + std::to_string(bi) + "]";
      const json& item = list.at(bi);
      if (!item.is_object()) throw ParseError(path + ": expected an object");
      const std::size_t i = index_field(item, path, "i", dim);
      const std::size_t j = index_field(item, path, "j", dim);
      if (i >= j)
        throw ParseError(path + ": requires i < j (store [e_j,e_i] as -[e_i,e_j])");
      if (brackets.count({i, j}))
        throw ParseError(path + ": duplicate bracket for (i,j) = (" + std::to_string(i + 1) +
                         "," + std::to_string(j + 1) + ")");
      if (!item.contains("terms") || !item.at("terms").is_array())
        throw ParseError(path + ": missing \"terms\" array");
      Vec value(dim, Rational(0));
      std::vector<bool> seen(dim, false);
      const json& terms = item.at("terms");
      for (std::size_t ti = 0; ti < terms.size(); ++ti) {
        const std::string tpath = path + ".terms[" + std::to_string(ti) + "]";
        const json& term = terms.at(ti);
        if (!term.is_object()) throw ParseError(tpath + ": expected an object");
        const std::size_t k = index_field(term, tpath, "k", dim);
        if (seen[k]) throw ParseError(tpath + ": duplicate k = " + std::to_string(k + 1));
        seen[k] = true;
        if (!term.contains("c") || !term.at("c").is_string())
          throw ParseError(tpath + ": coefficient \"c\" must be a rational string like \"p/q\"");
        try {
          value[k] = parse_rational(term.at("c").get<std::string>());
        } catch (const ParseError& e) {
          throw ParseError(tpath + ".c: " + e.what());
        }
      }
      if (!is_zero_vec(value)) brackets[{i, j}] = std::move(value);
    }
  }
  return LieAlgebra(dim, std::move(brackets), std::move(names));
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra_spec(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

std::vector<std::string> canonical_names(const LieAlgebra& L) {
  if (!L.basis_names().empty()) return L.basis_names();
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= L.dim(); ++i) names.push_back("e" + std::to_string(i));
  return names;
}

ordered spec_json(const LieAlgebra& L) {
  ordered doc;
  doc["dim"] = L.dim();
  doc["basis"] = canonical_names(L);
  ordered brackets = ordered::array();
  for (const auto& [key, value] : L.brackets()) {
    ordered terms = ordered::array();
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (value[k] == 0) continue;
      terms.push_back(ordered{{"k", k + 1}, {"c", to_string(value[k])}});
    }
    if (terms.empty()) continue;
    brackets.push_back(
        ordered{{"i", key.first + 1}, {"j", key.second + 1}, {"terms", std::move(terms)}});
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

}  // namespace

std::string emit_algebra_spec(const LieAlgebra& L, int indent) {
  return spec_json(L).dump(indent);
}

std::string algebra_digest(const LieAlgebra& L) {
  const std::string canon = emit_algebra_spec(L, -1);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

CheckReport check_algebra(const LieAlgebra& L) {
  CheckReport r;
  r.dim = L.dim();
  r.jacobi = jacobi_check(L);
  r.cls = classify(L);
  r.unimodular = is_unimodular(L);
  r.derived_dim = derived_subalgebra(L).size();
  return r;
}

// ---------------------------------------------------------------- rendering

namespace {

ordered j_covector(const Covector& w) {
  ordered arr = ordered::array();
  for (const auto& c : w) arr.push_back(to_string(c));
  return arr;
}

ordered j_covector_list(const std::vector<Covector>& ws) {
  ordered arr = ordered::array();
  for (const auto& w : ws) arr.push_back(j_covector(w));
  return arr;
}

ordered j_betti(const BettiTable& t) {
  ordered doc;
  doc["omega"] = j_covector(t.twist.omega);
  doc["lambda"] = to_string(t.twist.lambda);
  doc["effective"] = j_covector(t.twist.effective);
  doc["betti"] = t.betti;
  doc["euler"] = t.euler;
  doc["all_zero"] = t.all_zero();
  return doc;
}

ordered j_les(const LESReport& r) {
  ordered doc;
  doc["lambda"] = to_string(r.lambda);
  doc["kernel_dims"] = r.kernel_dims;
  doc["predicted"] = r.predicted;
  doc["actual"] = r.actual;
  doc["equal_by_degree"] = r.equal_by_degree;
  doc["all_equal"] = r.all_equal;
  return doc;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string format_set(const std::vector<Rational>& vals) {
  std::vector<std::string> parts;
  for (const auto& v : vals) parts.push_back(to_string(v));
  return "{" + join(parts, ", ") + "}";
}

std::string format_covector_set(const std::vector<Covector>& ws) {
  std::vector<std::string> parts;
  for (const auto& w : ws) parts.push_back(format_covector(w));
  return "{" + join(parts, ", ") + "}";
}

std::string format_counts(const std::vector<std::size_t>& xs) {
  std::vector<std::string> parts;
  for (auto x : xs) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

}  // namespace

std::string format_covector(const Covector& w) {
  std::vector<std::string> parts;
  for (const auto& c : w) parts.push_back(to_string(c));
  return "(" + join(parts, ",") + ")";
}

std::string to_json(const CheckReport& r, int indent) {
  ordered doc;
  doc["dim"] = r.dim;
  ordered violations = ordered::array();
  for (const auto& v : r.jacobi.violations) {
    violations.push_back(ordered{{"triple", {v.i + 1, v.j + 1, v.k + 1}},
                                 {"residual", j_covector(v.residual)}});
  }
  doc["jacobi"] = ordered{{"pass", r.jacobi.pass}, {"violations", std::move(violations)}};
  doc["classification"] = classification_label(r.cls);
  doc["unimodular"] = r.unimodular;
  doc["derived_dim"] = r.derived_dim;
  return doc.dump(indent);
}

std::string to_json(const BettiTable& t, int indent) { return j_betti(t).dump(indent); }

std::string to_json(const std::vector<BettiTable>& tables, int indent) {
  ordered arr = ordered::array();
  for (const auto& t : tables) arr.push_back(j_betti(t));
  return ordered{{"tables", std::move(arr)}}.dump(indent);
}

std::string to_json(const NovikovReport& r, int indent) {
  ordered doc;
  doc["omega"] = j_covector(r.omega);
  doc["generic_lambda"] = to_string(r.generic_lambda);
  doc["generic_betti"] = r.generic.betti;
  ordered lambdas = ordered::array();
  ordered tables = ordered::array();
  for (const auto& t : r.exceptional) {
    lambdas.push_back(to_string(t.twist.lambda));
    tables.push_back(j_betti(t));
  }
  doc["exceptional_lambdas"] = std::move(lambdas);
  doc["exceptional"] = std::move(tables);
  doc["morse_lower_bounds"] = r.morse_lower_bounds;
  doc["note"] = r.note;
  return doc.dump(indent);
}

std::string to_json(const OperatorSpectrum& s, int indent) {
  ordered degrees = ordered::array();
  for (const auto& e : s.degrees) {
    ordered eig = ordered::array();
    for (const auto& [value, mult] : e.eigenvalues)
      eig.push_back(ordered{{"value", to_string(value)}, {"multiplicity", mult}});
    degrees.push_back(ordered{{"degree", e.degree},
                              {"space_dim", e.space_dim()},
                              {"eigenvalues", std::move(eig)},
                              {"residual", e.residual},
                              {"complete", e.complete}});
  }
  ordered uni = ordered::array();
  for (const auto& v : s.spec_union) uni.push_back(to_string(v));
  ordered doc;
  doc["degrees"] = std::move(degrees);
  doc["spec_union"] = std::move(uni);
  doc["complete"] = s.complete;
  return doc.dump(indent);
}

std::string to_json(const NontrivialitySet& s, int indent) {
  ordered lambdas = ordered::array();
  for (const auto& l : s.lambdas) lambdas.push_back(to_string(l));
  ordered certs = ordered::array();
  for (const auto& c : s.certificates)
    certs.push_back(ordered{{"lambda", to_string(c.lambda)}, {"betti", c.table.betti}});
  ordered doc;
  doc["omega"] = j_covector(s.omega);
  doc["lambdas"] = std::move(lambdas);
  doc["certificates"] = std::move(certs);
  doc["complete"] = s.complete;
  doc["warnings"] = s.warnings;
  return doc.dump(indent);
}

std::string to_json(const WeightSystem& w, int indent) {
  ordered rows = ordered::array();
  for (std::size_t i = 0; i < w.basis.change_of_basis.rows(); ++i)
    rows.push_back(j_covector(w.basis.change_of_basis.row(i)));
  ordered doc;
  doc["k"] = w.basis.k;
  doc["change_of_basis"] = std::move(rows);
  doc["weights"] = j_covector_list(w.weights);
  doc["omega_set"] = j_covector_list(w.omega_set);
  doc["omega_tilde"] = j_covector_list(w.omega_tilde);
  doc["sum_of_weights"] = j_covector(w.sum_of_all);
  return doc.dump(indent);
}

std::string to_json(const LESReport& r, int indent) { return j_les(r).dump(indent); }

std::string to_json(const std::vector<LESReport>& reports, int indent) {
  bool all = true;
  ordered arr = ordered::array();
  for (const auto& r : reports) {
    all = all && r.all_equal;
    arr.push_back(j_les(r));
  }
  ordered doc;
  doc["reports"] = std::move(arr);
  doc["all_equal"] = all;
  return doc.dump(indent);
}

std::string to_text(const CheckReport& r) {
  std::ostringstream os;
  os << "dim:         " << r.dim << '\n';
  os << "jacobi:      " << (r.jacobi.pass ? "pass" : "FAIL") << '\n';
  for (const auto& v : r.jacobi.violations)
    os << "  violation at (" << v.i + 1 << "," << v.j + 1 << "," << v.k + 1 << "): residual "
       << format_covector(v.residual) << '\n';
  os << "class:       " << classification_label(r.cls) << '\n';
  os << "unimodular:  " << (r.unimodular ? "yes" : "no") << '\n';
  os << "dim [g,g]:   " << r.derived_dim << '\n';
  return os.str();
}

std::string to_text(const BettiTable& t) {
  std::ostringstream os;
  os << "omega: " << format_covector(t.twist.omega) << "   lambda: " << to_string(t.twist.lambda)
     << '\n';
  std::ostringstream qs, bs;
  qs << "q:    ";
  bs << "b^q:  ";
  for (std::size_t q = 0; q < t.betti.size(); ++q) {
    const std::string b = std::to_string(t.betti[q]);
    const std::size_t w = std::max(b.size(), std::to_string(q).size()) + 2;
    qs << std::setw(static_cast<int>(w)) << q;
    bs << std::setw(static_cast<int>(w)) << b;
  }
  os << qs.str() << '\n' << bs.str() << '\n';
  os << "euler: " << t.euler << '\n';
  return os.str();
}

std::string to_text(const std::vector<BettiTable>& tables) {
  std::ostringstream os;
  if (!tables.empty())
    os << "omega: " << format_covector(tables.front().twist.omega) << '\n';
  for (const auto& t : tables)
    os << "lambda " << to_string(t.twist.lambda) << ": " << format_counts(t.betti) << '\n';
  return os.str();
}

std::string to_text(const NovikovReport& r) {
  std::ostringstream os;
  os << "omega: " << format_covector(r.omega) << '\n';
  os << "generic lambda: " << to_string(r.generic_lambda) << '\n';
  os << "generic betti:  " << format_counts(r.generic.betti) << '\n';
  os << "exceptional values:" << (r.exceptional.empty() ? " none" : "") << '\n';
  for (const auto& t : r.exceptional)
    os << "  lambda " << to_string(t.twist.lambda) << ": " << format_counts(t.betti) << '\n';
  os << "morse lower bounds: " << format_counts(r.morse_lower_bounds) << '\n';
  os << "note: " << r.note << '\n';
  return os.str();
}

std::string to_text(const OperatorSpectrum& s) {
  std::ostringstream os;
  for (const auto& e : s.degrees) {
    std::vector<std::string> vals;
    for (const auto& [value, mult] : e.eigenvalues) {
      std::string item = to_string(value);
      if (mult > 1) item += " (x" + std::to_string(mult) + ")";
      vals.push_back(std::move(item));
    }
    os << "degree " << e.degree << ": dim " << e.space_dim() << ", spec {" << join(vals, ", ")
       << "}";
    if (!e.complete) os << "  [incomplete; residual factor " << e.residual << "]";
    os << '\n';
  }
  os << "union: " << format_set(s.spec_union) << (s.complete ? "" : "  [partial]") << '\n';
  return os.str();
}

std::string to_text(const NontrivialitySet& s) {
  std::ostringstream os;
  os << "omega: " << format_covector(s.omega) << '\n';
  os << "nontrivial lambdas: " << format_set(s.lambdas) << (s.complete ? "" : "  [partial]")
     << '\n';
  for (const auto& c : s.certificates)
    os << "  lambda " << to_string(c.lambda) << ": betti " << format_counts(c.table.betti)
       << '\n';
  for (const auto& w : s.warnings) os << "warning: " << w << '\n';
  return os.str();
}

std::string to_text(const WeightSystem& w) {
  std::ostringstream os;
  os << "complement dim k: " << w.basis.k << '\n';
  os << "weights:" << (w.weights.empty() ? " none (abelian)" : "") << '\n';
  for (std::size_t i = 0; i < w.weights.size(); ++i)
    os << "  alpha_" << w.basis.k + i + 1 << " = " << format_covector(w.weights[i]) << '\n';
  os << "sum of weights: " << format_covector(w.sum_of_all) << '\n';
  os << "omega_set:   " << format_covector_set(w.omega_set) << '\n';
  os << "omega_tilde: " << format_covector_set(w.omega_tilde) << '\n';
  return os.str();
}

std::string to_text(const std::vector<LESReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports)
    os << "lambda " << to_string(r.lambda) << ": predicted " << format_counts(r.predicted)
       << "  actual " << format_counts(r.actual) << (r.all_equal ? "  ok" : "  MISMATCH")
       << '\n';
  return os.str();
}

std::string render_document(const std::string& command, const std::string& source,
                            const std::string& digest, const std::vector<std::string>& warnings,
                            const std::string& payload_json, int indent) {
  ordered doc;
  doc["command"] = command;
  doc["input"] = ordered{{"source", source}, {"digest", digest}};
  doc["warnings"] = warnings;
  doc["result"] = ordered::parse(payload_json);
  return doc.dump(indent);
}

}  // namespace twistcoh
