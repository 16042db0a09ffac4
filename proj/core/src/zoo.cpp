#include "twistcoh/zoo.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace twistcoh {

namespace {

std::string sized_name(const std::string& base, std::size_t n) {
  std::ostringstream os;
  os << base << '(' << n << ')';
  return os.str();
}

std::vector<std::string> numbered_names(std::size_t n, const std::string& stem = "e") {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

ZooEntry finish(std::string name, std::string base, LieAlgebra algebra, std::string provenance) {
  if (!jacobi_check(algebra).pass)
    throw std::logic_error("zoo constructor produced a non-Lie bracket: " + name);
  return ZooEntry{std::move(name), std::move(base), std::move(algebra), std::move(provenance),
                  std::nullopt};
}

}  // namespace

ZooEntry torus(std::size_t n) {
  if (n < 1) throw Error("torus requires n >= 1");
  LieAlgebra L(n, {}, numbered_names(n));
  return finish(sized_name("torus", n), "torus", std::move(L),
                "abelian algebra underlying the n-torus");
}

ZooEntry heisenberg() {
  LieAlgebra::BracketMap b;
  b[{0, 1}] = Vec{Rational(0), Rational(0), Rational(1)};
  LieAlgebra L(3, std::move(b), numbered_names(3));
  return finish("heisenberg", "heisenberg", std::move(L),
                "three-dimensional Heisenberg algebra, [e1,e2] = e3");
}

ZooEntry v_family(std::size_t n) {
  if (n < 3) throw Error("v_family requires n >= 3");
  LieAlgebra::BracketMap b;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; i + j <= n; ++j) {
      Vec v(n, Rational(0));
      v[i + j - 1] = Rational(static_cast<long>(j - i));
      b[{i - 1, j - 1}] = std::move(v);
    }
  }
  LieAlgebra L(n, std::move(b), numbered_names(n));
  return finish(sized_name("v_family", n), "v_family", std::move(L),
                "nilpotent truncation of the Witt algebra: [e_i,e_j] = (j-i) e_{i+j} while i+j <= n");
}

ZooEntry g0() {
  LieAlgebra::BracketMap b;
  b[{0, 1}] = Vec{Rational(0), Rational(1), Rational(0)};
  b[{0, 2}] = Vec{Rational(0), Rational(0), Rational(-1)};
  LieAlgebra L(3, std::move(b), numbered_names(3));
  return finish("g0", "g0", std::move(L),
                "completely solvable dimension-3 algebra with ad(e1) weights +1 and -1");
}

ZooEntry diag_example(std::size_t n) {
  if (n < 1) throw Error("diag_example requires n >= 1");
  const std::size_t dim = n + 1;
  LieAlgebra::BracketMap b;
  for (std::size_t i = 1; i <= n; ++i) {
    Vec v(dim, Rational(0));
    v[i] = Rational(1);
    b[{0, i}] = std::move(v);  // [X, e_i] = e_i
  }
  std::vector<std::string> names = numbered_names(n);
  names.insert(names.begin(), "X");
  LieAlgebra L(dim, std::move(b), std::move(names));
  return finish(sized_name("diag_example", n), "diag_example", std::move(L),
                "rank-one solvable extension acting as the identity on an abelian ideal");
}

std::vector<std::string> zoo_base_names() {
  return {"torus", "heisenberg", "v_family", "g0", "diag_example"};
}

ZooEntry zoo_entry(const std::string& base, std::optional<std::size_t> n) {
  const bool sized = n.has_value();
  if (base == "torus") return torus(sized ? *n : 3);
  if (base == "v_family") return v_family(sized ? *n : 6);
  if (base == "diag_example") return diag_example(sized ? *n : 3);
  if (sized) throw Error("zoo family \"" + base + "\" does not take a size");
  if (base == "heisenberg") return heisenberg();
  if (base == "g0") return g0();
  throw Error("unknown zoo algebra: \"" + base + "\"");
}

std::vector<ZooEntry> zoo_sample() {
  std::vector<ZooEntry> out;
  out.push_back(torus(1));
  out.push_back(torus(3));
  out.push_back(heisenberg());
  out.push_back(v_family(4));
  out.push_back(v_family(6));
  out.push_back(g0());
  out.push_back(diag_example(2));
  out.push_back(diag_example(5));
  return out;
}

namespace {

using nlohmann::json;

Rational rational_of(const json& node) { return parse_rational(node.get<std::string>()); }

Covector covector_of(const json& node) {
  Covector w;
  for (const auto& c : node) w.push_back(rational_of(c));
  return w;
}

ZooFixture fixture_of(const json& node) {
  ZooFixture f;
  if (node.contains("betti")) {
    for (const auto& item : node.at("betti")) {
      ExpectedBetti eb;
      eb.omega = covector_of(item.at("omega"));
      eb.lambda = rational_of(item.at("lambda"));
      for (const auto& b : item.at("table")) eb.table.push_back(b.get<std::size_t>());
      f.betti.push_back(std::move(eb));
    }
  }
  if (node.contains("probe_omega")) f.probe_omega = covector_of(node.at("probe_omega"));
  if (node.contains("weights")) {
    std::vector<Covector> ws;
    for (const auto& w : node.at("weights")) ws.push_back(covector_of(w));
    f.weights = std::move(ws);
  }
  if (node.contains("spectra")) {
    std::vector<std::vector<Rational>> sp;
    for (const auto& degree : node.at("spectra")) {
      std::vector<Rational> vals;
      for (const auto& v : degree) vals.push_back(rational_of(v));
      sp.push_back(std::move(vals));
    }
    f.spectra = std::move(sp);
  }
  if (node.contains("nontrivial_lambdas")) {
    std::vector<Rational> ls;
    for (const auto& l : node.at("nontrivial_lambdas")) ls.push_back(rational_of(l));
    f.nontrivial_lambdas = std::move(ls);
  }
  if (node.contains("certified_pairs")) {
    for (const auto& item : node.at("certified_pairs")) {
      CertifiedPair p;
      p.lambda = rational_of(item.at("lambda"));
      p.degrees[0] = item.at("degrees").at(0).get<std::size_t>();
      p.degrees[1] = item.at("degrees").at(1).get<std::size_t>();
      p.value = item.at("value").get<std::size_t>();
      f.certified_pairs.push_back(std::move(p));
    }
  }
  return f;
}

}  // namespace

void attach_fixtures(std::vector<ZooEntry>& entries, const std::string& json_path) {
  std::ifstream in(json_path);
  if (!in) throw Error("cannot open fixtures file: " + json_path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("fixtures file is not valid JSON: ") + e.what());
  }
  for (auto& entry : entries) {
    if (!doc.contains(entry.name)) continue;
    try {
      entry.expected = fixture_of(doc.at(entry.name));
    } catch (const json::exception& e) {
      throw ParseError("malformed fixture for \"" + entry.name + "\": " + e.what());
    }
  }
}

}  // namespace twistcoh
