// thomkit command-line front end: exact Thom series, Thom polynomials,
// lowering operators, twist expansions, Schur conversion, and the built-in
// verification suites.
//
// Exit codes: 0 success, 1 parse error, 2 precondition violation,
// 3 verification or positivity failure.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "thomkit/json_io.hpp"
#include "thomkit/thomkit.hpp"

namespace {

using namespace thomkit;
using nlohmann::json;

Polynomial read_input(const std::string& inline_poly) {
  if (!inline_poly.empty()) return parse_polynomial(inline_poly);
  const std::string text(std::istreambuf_iterator<char>(std::cin), {});
  return parse_polynomial(text);
}

void emit_polynomial(const Polynomial& p, bool json_terms) {
  if (json_terms) {
    std::cout << to_json_terms(p).dump() << '\n';
  } else {
    std::cout << print(p) << '\n';
  }
}

json catalog_document() {
  json entries = json::array();
  for (const ThomSeriesEntry& e : catalog()) {
    json entry{{"name", std::string(e.algebra.name)},
               {"delta", e.algebra.delta},
               {"gamma", e.algebra.gamma},
               {"presentation", std::string(e.algebra.presentation)},
               {"k_eta", e.algebra.k_eta},
               {"notes", std::string(e.notes)}};
    if (e.algebra.defect) entry["defect"] = *e.algebra.defect;
    if (e.anchored_window) {
      entry["anchored_window"] = *e.anchored_window;
    } else {
      entry["anchored_window"] = nullptr;
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

void emit_catalog(bool json_terms) {
  if (json_terms) {
    std::cout << catalog_document().dump() << '\n';
    return;
  }
  for (const ThomSeriesEntry& e : catalog()) {
    std::cout << e.algebra.name << ": delta=" << e.algebra.delta << " gamma=" << e.algebra.gamma
              << " presentation=" << e.algebra.presentation << " k_eta=" << e.algebra.k_eta;
    if (e.algebra.defect) std::cout << " defect=" << *e.algebra.defect;
    if (e.anchored_window) {
      std::cout << " anchored_window=" << *e.anchored_window;
    } else {
      std::cout << " anchored_window=unbounded";
    }
    std::cout << "\n  " << e.notes << '\n';
  }
}

json report_to_json(const CheckReport& r) {
  return json{{"name", r.name},     {"passed", r.passed}, {"details", r.details},
              {"anchor", r.anchor}, {"source", r.source}, {"seed", r.seed}};
}

int run(int argc, char** argv) {
  CLI::App app{"thomkit: exact Thom series and Thom polynomial calculus"};
  app.require_subcommand(1);
  bool json_terms = false;
  app.add_flag("--json-terms", json_terms, "machine-readable output");
  bool strict = false;
  app.add_flag("--strict", strict, "refuse windows beyond the validated range")
      ->envname("THOMKIT_STRICT");
  bool extrapolate = false;
  app.add_flag("--extrapolate", extrapolate, "allow windows beyond the validated range");

  int window = 4;
  std::string name;
  int reldim = 0;
  std::string poly, num_text, den_text("1");
  int lower_i = 0;
  int cap = -1;
  bool require_positive = false, list_catalog = false, cohomological = false;
  std::string algebra_name, sigma_text, suite("all");
  std::uint64_t seed = 1;
  int aij_i = 0, aij_j = 0;

  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window,-w", window, "largest |index| kept in series terms")
        ->envname("THOMKIT_WINDOW");
  };

  CLI::App* ts = app.add_subcommand("ts", "Thom series terms of a catalog algebra");
  ts->add_option("name", name, "algebra name (A0, A1, A2, A3, I22)");
  ts->add_flag("--list", list_catalog, "list the catalog instead");
  add_window(ts);
  ts->fallthrough();

  CLI::App* tp = app.add_subcommand("tp", "Thom polynomial at a relative dimension");
  tp->add_option("name", name)->required();
  tp->add_option("--reldim,-k", reldim, "relative dimension m - n")->required();
  add_window(tp);
  tp->fallthrough();

  CLI::App* lower_cmd = app.add_subcommand("lower", "apply the lowering operator");
  lower_cmd->add_option("--i", lower_i, "lowering order")->required();
  lower_cmd->add_option("--poly", poly, "inline polynomial (default: stdin)");
  lower_cmd->fallthrough();

  CLI::App* twist = app.add_subcommand("twist", "expand a cs-polynomial under a twist");
  twist->add_option("--num", num_text, "twist numerator, polynomial in y")->required();
  twist->add_option("--den", den_text, "twist denominator, polynomial in y");
  twist->add_option("--poly", poly, "inline polynomial (default: stdin)");
  twist->add_option("--cap", cap, "series cap (default: the polynomial degree)");
  twist->fallthrough();

  CLI::App* spec_cmd = app.add_subcommand("specialize", "substitute d[i] -> c[i+k+1]");
  spec_cmd->add_option("--reldim,-k", reldim)->required();
  spec_cmd->add_option("--poly", poly, "inline polynomial (default: stdin)");
  spec_cmd->fallthrough();

  CLI::App* schur_cmd = app.add_subcommand("schur", "Schur expansion and positivity verdict");
  schur_cmd->add_flag("--require-positive", require_positive, "exit 3 on a negative coefficient");
  schur_cmd->add_option("--poly", poly, "inline polynomial (default: stdin)");
  schur_cmd->fallthrough();

  CLI::App* codim = app.add_subcommand("codim", "codimension of a singularity locus");
  auto* alg_opt = codim->add_option("--algebra", algebra_name, "catalog algebra name");
  auto* sig_opt = codim->add_option("--sigma", sigma_text, "Thom-Boardman symbol I or I,J");
  codim->add_option("--reldim,-k", reldim)->required();
  codim->add_flag("--cohomological", cohomological, "report doubled (cohomological) degree");
  alg_opt->excludes(sig_opt);
  codim->fallthrough();

  CLI::App* aij_cmd = app.add_subcommand("aij", "generating-function coefficient a_{i,j}");
  aij_cmd->add_option("i", aij_i)->required();
  aij_cmd->add_option("j", aij_j)->required();
  aij_cmd->fallthrough();

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("suite", suite, "all|flat|tpflat|shapes|schur|masik|catalog");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const bool strict_now = strict && !extrapolate;

  if (ts->parsed()) {
    if (list_catalog) {
      emit_catalog(json_terms);
      return 0;
    }
    if (name.empty()) throw precondition_error("ts needs an algebra name (or --list)");
    emit_polynomial(ts_terms(name, Window(window), strict_now), json_terms);
    return 0;
  }
  if (tp->parsed()) {
    emit_polynomial(thom_polynomial(name, reldim, Window(window), strict_now), json_terms);
    return 0;
  }
  if (lower_cmd->parsed()) {
    emit_polynomial(lower(read_input(poly), lower_i), json_terms);
    return 0;
  }
  if (twist->parsed()) {
    const Polynomial p = read_input(poly);
    const int use_cap = cap >= 0 ? cap : p.degree().value_or(0);
    const TruncatedSeries num = TruncatedSeries::from_y_total(parse_polynomial(num_text), use_cap);
    const TruncatedSeries den = TruncatedSeries::from_y_total(parse_polynomial(den_text), use_cap);
    const YExpansion exp = twist_expand(p, num, den, use_cap);
    if (json_terms) {
      json parts = json::object();
      for (const auto& [e, q] : exp.parts) parts[std::to_string(e)] = to_json_terms(q);
      std::cout << json{{"top_degree", exp.top_degree}, {"parts", std::move(parts)}}.dump()
                << '\n';
    } else {
      for (int e = exp.top_degree; e >= 0; --e) {
        std::cout << "y^" << e << ": " << print(exp.part(e)) << '\n';
      }
    }
    return 0;
  }
  if (spec_cmd->parsed()) {
    emit_polynomial(specialize(read_input(poly), reldim), json_terms);
    return 0;
  }
  if (schur_cmd->parsed()) {
    const SchurExpansion exp = schur_positive(read_input(poly));
    if (json_terms) {
      json terms = json::array();
      for (const auto& [lam, c] : exp.coefficients) {
        terms.push_back({{"partition", lam.parts()}, {"coeff", to_string(c)}});
      }
      std::cout << json{{"expansion", std::move(terms)}, {"positive", exp.positive}}.dump()
                << '\n';
    } else {
      for (const auto& [lam, c] : exp.coefficients) {
        std::cout << print(lam) << ": " << to_string(c) << '\n';
      }
      std::cout << "positive: " << (exp.positive ? "yes" : "no") << '\n';
    }
    return require_positive && !exp.positive ? 3 : 0;
  }
  if (codim->parsed()) {
    int value = 0;
    if (!algebra_name.empty()) {
      value = codim_contact(catalog_entry(algebra_name).algebra, reldim, strict_now);
    } else if (!sigma_text.empty()) {
      const auto comma = sigma_text.find(',');
      const int i = std::stoi(sigma_text.substr(0, comma));
      const int j = comma == std::string::npos ? 0 : std::stoi(sigma_text.substr(comma + 1));
      value = codim_sigma_ij(BoardmanSymbol(i, j), reldim);
    } else {
      throw precondition_error("codim needs --algebra or --sigma");
    }
    std::cout << (cohomological ? 2 * value : value) << '\n';
    return 0;
  }
  if (aij_cmd->parsed()) {
    std::cout << to_string(aij(aij_i, aij_j)) << '\n';
    return 0;
  }
  if (verify->parsed()) {
    const std::vector<CheckReport> reports = run_suite(suite, seed);
    for (const CheckReport& r : reports) {
      if (json_terms) {
        std::cout << report_to_json(r).dump() << '\n';
      } else {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.anchor << " | "
                  << r.source << (r.seed ? " | seed " + std::to_string(r.seed) : "") << "]";
        if (!r.details.empty()) std::cout << "  " << r.details;
        std::cout << '\n';
      }
    }
    return all_passed(reports) ? 0 : 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const thomkit::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
