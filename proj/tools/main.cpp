#include <cstddef>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "twistcoh/algebra_io.hpp"
#include "twistcoh/zoo.hpp"

namespace {

using namespace twistcoh;
using ordered = nlohmann::ordered_json;

// Bad --omega / --lambda / --lambda-grid values: "invalid form", exit 3.
struct FormArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SourceOpts {
  std::string file;
  std::string zoo;
  long long n = -1;  // <0: not given
};

struct Loaded {
  LieAlgebra algebra;
  std::string source;
};

std::pair<std::string, std::optional<std::size_t>> parse_zoo_ref(const std::string& name,
                                                                 long long n_flag) {
  std::string base = name;
  std::optional<std::size_t> n;
  const auto open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')') throw Error("malformed zoo name: \"" + name + "\"");
    base = name.substr(0, open);
    const std::string inner = name.substr(open + 1, name.size() - open - 2);
    try {
      n = std::stoul(inner);
    } catch (const std::exception&) {
      throw Error("malformed zoo size in \"" + name + "\"");
    }
  }
  if (n_flag >= 0) {
    if (n) throw Error("give the zoo size either in the name or via --n, not both");
    n = static_cast<std::size_t>(n_flag);
  }
  return {base, n};
}

Loaded load_source(const SourceOpts& s, bool require_jacobi = true) {
  std::optional<Loaded> loaded;
  if (!s.file.empty()) loaded = Loaded{load_algebra_file(s.file), s.file};
  if (!s.zoo.empty()) {
    auto [base, n] = parse_zoo_ref(s.zoo, s.n);
    ZooEntry entry = zoo_entry(base, n);
    loaded = Loaded{std::move(entry.algebra), "zoo:" + entry.name};
  }
  if (!loaded) throw ParseError("no input algebra: pass --algebra FILE or --zoo NAME");
  if (require_jacobi && !jacobi_check(loaded->algebra).pass)
    throw ParseError(loaded->source +
                     ": structure constants fail the Jacobi identity (run `check` for details)");
  return std::move(*loaded);
}

Covector parse_covector_arg(const std::string& text, std::size_t dim) {
  Covector w;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      w.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw FormArgError(std::string("--omega: ") + e.what());
    }
  }
  if (w.size() != dim)
    throw FormArgError("--omega: got " + std::to_string(w.size()) + " components, algebra has " +
                       std::to_string(dim));
  return w;
}

Rational parse_lambda_arg(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw FormArgError(std::string("--lambda: ") + e.what());
  }
}

std::vector<Rational> parse_grid_arg(const std::string& text) {
  std::vector<Rational> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    long a = 0, b = 0;
    try {
      a = std::stol(text.substr(0, dots));
      b = std::stol(text.substr(dots + 2));
    } catch (const std::exception&) {
      throw FormArgError("--lambda-grid: expected an integer range like -3..3");
    }
    if (a > b) throw FormArgError("--lambda-grid: empty range");
    for (long l = a; l <= b; ++l) out.push_back(Rational(l));
    return out;
  }
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw FormArgError(std::string("--lambda-grid: ") + e.what());
    }
  }
  if (out.empty()) throw FormArgError("--lambda-grid: no values");
  return out;
}

// c with theta == c * omega, if the two are parallel.
std::optional<Rational> scalar_multiple(const Covector& theta, const Covector& omega) {
  std::size_t pivot = omega.size();
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (omega[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == omega.size()) return std::nullopt;
  Rational c = theta[pivot] / omega[pivot];
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (theta[i] != c * omega[i]) return std::nullopt;
  return c;
}

void require_line_form(const LieAlgebra& L, const Covector& omega) {
  if (is_zero_vec(omega)) throw OmegaZero("this command needs a nonzero --omega");
  if (!is_closed_one_form(L, omega)) throw OmegaNotClosed("--omega is not closed");
}

int emit(const std::string& format, const std::string& command, const Loaded& in,
         const std::vector<std::string>& warnings, const std::string& payload_json,
         const std::string& text) {
  if (format == "json") {
    std::cout << render_document(command, in.source, algebra_digest(in.algebra), warnings,
                                 payload_json)
              << '\n';
  } else {
    std::cout << text;
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact twisted cohomology of rational Lie algebras"};
  app.require_subcommand(1);
  int rc = 0;

  SourceOpts src;
  std::string format = "table";
  std::string omega_str, lambda_str = "0", grid_str = "-3..3";

  auto attach_source = [&](CLI::App* sub) {
    auto* fa = sub->add_option("--algebra", src.file, "AlgebraSpec JSON file");
    auto* fz = sub->add_option("--zoo", src.zoo, "built-in algebra, e.g. g0 or torus(4)");
    fa->excludes(fz);
    fz->excludes(fa);
    sub->add_option("--n", src.n, "size for sized zoo families")->needs(fz);
  };
  auto attach_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
  };

  // ---- check ----
  auto* c_check = app.add_subcommand("check", "validate an algebra: Jacobi, class, unimodularity");
  attach_source(c_check);
  attach_format(c_check);
  c_check->callback([&] {
    Loaded in = load_source(src, /*require_jacobi=*/false);
    CheckReport r = check_algebra(in.algebra);
    emit(format, "check", in, {}, to_json(r), to_text(r));
    if (!r.jacobi.pass) rc = 2;
  });

  // ---- betti ----
  auto* c_betti = app.add_subcommand("betti", "twisted Betti table for a twist lambda*omega");
  attach_source(c_betti);
  attach_format(c_betti);
  c_betti->add_option("--omega", omega_str, "closed 1-form, dual coordinates a1,a2,...");
  c_betti->add_option("--lambda", lambda_str, "rational scale factor (default 0)");
  c_betti->callback([&] {
    Loaded in = load_source(src);
    const std::size_t n = in.algebra.dim();
    Covector omega =
        omega_str.empty() ? Covector(n, Rational(0)) : parse_covector_arg(omega_str, n);
    Twist t(in.algebra, std::move(omega), parse_lambda_arg(lambda_str));
    BettiTable table = betti(in.algebra, t);
    rc = emit(format, "betti", in, {}, to_json(table), to_text(table));
  });

  // ---- spectrum ----
  auto* c_spec = app.add_subcommand(
      "spectrum", "transversal-action spectrum on H(ker omega) plus the nontrivial lambda set");
  attach_source(c_spec);
  attach_format(c_spec);
  c_spec->add_option("--omega", omega_str, "nonzero closed 1-form")->required();
  c_spec->callback([&] {
    Loaded in = load_source(src);
    Covector omega = parse_covector_arg(omega_str, in.algebra.dim());
    SubalgebraView view = split(in.algebra, omega);
    OperatorSpectrum spec = operator_spectrum(view);
    NontrivialitySet nset = nontriviality_set(in.algebra, omega);
    ordered payload;
    payload["spectrum"] = ordered::parse(to_json(spec));
    payload["nontriviality"] = ordered::parse(to_json(nset));
    rc = emit(format, "spectrum", in, nset.warnings, payload.dump(),
              to_text(spec) + to_text(nset));
  });

  // ---- weights / omega-set ----
  for (const char* name : {"weights", "omega-set"}) {
    auto* sub = app.add_subcommand(
        name, std::string(name) == "weights"
                  ? "triangularized adjoint weights in an adapted basis"
                  : "subset-sum set of the weights and its certified-nonzero part");
    attach_source(sub);
    attach_format(sub);
    sub->callback([&, name] {
      Loaded in = load_source(src);
      WeightSystem ws = weight_system(in.algebra);
      rc = emit(format, name, in, {}, to_json(ws), to_text(ws));
    });
  }

  // ---- nontrivial-set (weights route) ----
  auto* c_nset = app.add_subcommand(
      "nontrivial-set", "lambdas with nonzero cohomology along omega, from the weight sums");
  attach_source(c_nset);
  attach_format(c_nset);
  c_nset->add_option("--omega", omega_str, "nonzero closed 1-form")->required();
  c_nset->callback([&] {
    Loaded in = load_source(src);
    Covector omega = parse_covector_arg(omega_str, in.algebra.dim());
    require_line_form(in.algebra, omega);
    WeightSystem ws = weight_system(in.algebra);
    std::set<Rational> lambdas{Rational(0)};
    for (const Covector& theta : ws.omega_tilde)
      if (auto c = scalar_multiple(theta, omega)) lambdas.insert(Rational(-*c));
    ordered jl = ordered::array();
    std::vector<std::string> parts;
    for (const auto& l : lambdas) {
      jl.push_back(to_string(l));
      parts.push_back(to_string(l));
    }
    ordered payload;
    payload["omega"] = ordered::array();
    for (const auto& c : omega) payload["omega"].push_back(to_string(c));
    payload["lambdas"] = std::move(jl);
    payload["weight_system"] = ordered::parse(to_json(ws));
    std::string line;
    for (std::size_t i = 0; i < parts.size(); ++i) line += (i ? ", " : "") + parts[i];
    std::string text = "omega: " + format_covector(omega) + "\nnontrivial lambdas: {" + line +
                       "}\n";
    rc = emit(format, "nontrivial-set", in, {}, payload.dump(), text);
  });

  // ---- les-verify ----
  auto* c_les = app.add_subcommand(
      "les-verify", "check b^i = k^i + k^{i-1} between the algebra and ker omega, per lambda");
  attach_source(c_les);
  attach_format(c_les);
  c_les->add_option("--omega", omega_str, "nonzero closed 1-form")->required();
  c_les->add_option("--lambda-grid", grid_str, "integer range a..b or comma list (default -3..3)");
  c_les->callback([&] {
    Loaded in = load_source(src);
    Covector omega = parse_covector_arg(omega_str, in.algebra.dim());
    std::vector<LESReport> reports;
    bool all = true;
    for (const Rational& l : parse_grid_arg(grid_str)) {
      reports.push_back(verify_les(in.algebra, omega, l));
      all = all && reports.back().all_equal;
    }
    rc = emit(format, "les-verify", in, {}, to_json(reports), to_text(reports));
    if (!all) {
      std::cerr << "error: dimension bookkeeping failed on at least one lambda\n";
      rc = 1;
    }
  });

  // ---- novikov ----
  auto* c_nov = app.add_subcommand(
      "novikov", "generic Betti numbers along omega and the exceptional lambda values");
  attach_source(c_nov);
  attach_format(c_nov);
  c_nov->add_option("--omega", omega_str, "nonzero closed 1-form")->required();
  c_nov->callback([&] {
    Loaded in = load_source(src);
    Covector omega = parse_covector_arg(omega_str, in.algebra.dim());
    require_line_form(in.algebra, omega);
    WeightSystem ws = weight_system(in.algebra);
    std::vector<Rational> candidates{Rational(0)};
    for (const Covector& theta : ws.omega_set)
      if (auto c = scalar_multiple(theta, omega)) candidates.push_back(Rational(-*c));
    NovikovReport report = novikov_report(in.algebra, omega, candidates, ws.omega_set);
    rc = emit(format, "novikov", in, {}, to_json(report), to_text(report));
  });

  // ---- zoo ----
  auto* c_zoo = app.add_subcommand("zoo", "list built-in algebras or emit one as AlgebraSpec");
  std::string zoo_name;
  long long zoo_n = -1;
  attach_format(c_zoo);
  c_zoo->add_option("--name", zoo_name, "emit this algebra as AlgebraSpec JSON");
  c_zoo->add_option("--n", zoo_n, "size for sized families");
  c_zoo->callback([&] {
    if (!zoo_name.empty()) {
      auto [base, n] = parse_zoo_ref(zoo_name, zoo_n);
      std::cout << emit_algebra_spec(zoo_entry(base, n).algebra) << '\n';
      return;
    }
    if (format == "json") {
      ordered families = ordered::array();
      for (const auto& base : zoo_base_names()) {
        ZooEntry e = zoo_entry(base);
        families.push_back(ordered{{"base", base},
                                   {"default", e.name},
                                   {"provenance", e.provenance}});
      }
      ordered sample = ordered::array();
      for (const auto& e : zoo_sample()) sample.push_back(e.name);
      std::cout << ordered{{"families", std::move(families)}, {"sample", std::move(sample)}}.dump(2)
                << '\n';
    } else {
      for (const auto& base : zoo_base_names()) {
        ZooEntry e = zoo_entry(base);
        std::cout << e.name << "\n    " << e.provenance << '\n';
      }
      std::cout << "sample roster:";
      for (const auto& e : zoo_sample()) std::cout << ' ' << e.name;
      std::cout << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const RationalSpectrumRequired& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cerr << "residual factor: " << e.residual << '\n';
    return 4;
  } catch (const OmegaNotClosed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const OmegaZero& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const FormArgError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NotSolvable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
