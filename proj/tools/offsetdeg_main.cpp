// offsetdeg: partial degrees of the generic offset of a plane curve.

#include <gmpxx.h>

#include <cctype>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "offsetdeg/corpus.hpp"
#include "offsetdeg/errors.hpp"
#include "offsetdeg/formulas.hpp"
#include "offsetdeg/oracle.hpp"
#include "offsetdeg/parser.hpp"

using nlohmann::json;
using namespace offsetdeg;

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDegeneracy = 3;
constexpr int kExitCostGuard = 4;

/// Fixed fallback values assigned to parameters the user left unbound,
/// in order of first appearance.
const char* kDefaultParamValues[] = {"5", "1/2", "3", "7/3", "2", "11/4"};

std::set<std::string> scan_names(const std::string& text) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[j])))
        ++j;
      names.insert(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return names;
}

mpq_class parse_rational_arg(const std::string& text) {
  mpq_class q;
  try {
    q = mpq_class(text);
  } catch (const std::invalid_argument&) {
    throw Error("bad rational value: " + text);
  }
  q.canonicalize();
  return q;
}

struct ParamArgs {
  std::vector<std::string> raw;  // NAME=RAT entries
  bool symbolic = false;

  std::map<std::string, mpq_class> parse() const {
    std::map<std::string, mpq_class> out;
    for (const std::string& s : raw) {
      auto eq = s.find('=');
      if (eq == std::string::npos || eq == 0)
        throw Error("--param expects NAME=RATIONAL, got: " + s);
      out[s.substr(0, eq)] = parse_rational_arg(s.substr(eq + 1));
    }
    return out;
  }
};

/// Parses an implicit curve source, binding parameters to user-supplied or
/// fixed default rationals unless symbolic mode keeps them as variables.
Polynomial parse_implicit_input(const std::string& text, VarTable& vars,
                                const ParamArgs& params) {
  std::set<std::string> allowed = {"y1", "y2"};
  for (const std::string& n : scan_names(text))
    if (!VarTable::is_reserved(n)) allowed.insert(n);
  Polynomial f = parse_polynomial(text, vars, allowed);
  if (params.symbolic) return f;

  std::map<std::string, mpq_class> given = params.parse();
  std::map<VarId, Binding> binds;
  std::size_t next_default = 0;
  for (VarId v = kFirstParam; v < kMaxVars; ++v) {
    if (!f.vars().contains(v)) continue;
    std::string name = vars.name(v);
    auto it = given.find(name);
    if (it != given.end()) {
      binds.emplace(v, Binding::rational(it->second));
    } else {
      const char* val =
          kDefaultParamValues[next_default % std::size(kDefaultParamValues)];
      ++next_default;
      std::cerr << "note: parameter " << name << " = " << val
                << " (override with --param " << name << "=...)\n";
      binds.emplace(v, Binding::rational(parse_rational_arg(val)));
    }
  }
  return binds.empty() ? f : substitute(f, binds);
}

json report_json(const std::string& name, const DegreeReport& r,
                 std::optional<bool> pass) {
  json j;
  j["schema"] = 1;
  j["name"] = name;
  j["delta1"] = r.delta1;
  j["delta2"] = r.delta2;
  j["delta_d"] = r.delta_d ? json(*r.delta_d) : json(nullptr);
  j["method"] = r.method;
  j["diagnostics"] = {{"resultant_degree", r.diagnostics.resultant_degree},
                      {"content_degree", r.diagnostics.content_degree},
                      {"ms", r.diagnostics.ms}};
  j["pass"] = pass ? json(*pass) : json(nullptr);
  return j;
}

void print_report(const DegreeReport& r) {
  std::cout << "delta1 = " << r.delta1 << "\n"
            << "delta2 = " << r.delta2 << "\n";
  if (r.delta_d)
    std::cout << "delta_d = " << *r.delta_d << "\n";
  else
    std::cout << "delta_d unavailable for parametric input\n";
}

const char* status_str(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::warn: return "WARN";
    default: return "FAIL";
  }
}

int run_corpus_cmd(const std::string& path, const CorpusOptions& opt,
                   bool as_json) {
  std::vector<CorpusEntry> entries = load_corpus(path);
  std::vector<RunRecord> records = run_corpus(entries, opt);

  int failures = 0, warns = 0;
  json out = json::array();
  for (const RunRecord& r : records) {
    if (!r.ok) ++failures;
    bool warned = r.delta1 == Status::warn || r.delta2 == Status::warn ||
                  r.delta_d == Status::warn;
    if (warned && r.ok) ++warns;
    if (as_json) {
      json j = report_json(r.name, r.report, r.ok);
      if (!r.error.empty()) j["error"] = r.error;
      out.push_back(j);
    } else if (!r.error.empty()) {
      std::cout << r.name << ": ERROR " << r.error << "\n";
    } else {
      std::cout << r.name << ": delta1=" << r.report.delta1 << " ["
                << status_str(r.delta1) << "] delta2=" << r.report.delta2
                << " [" << status_str(r.delta2)
                << "] delta_d=" << r.report.delta_d.value_or(-1) << " ["
                << status_str(r.delta_d) << "]";
      if (r.parametric_report)
        std::cout << " parametric=("
                  << r.parametric_report->delta1 << ","
                  << r.parametric_report->delta2 << ")";
      std::cout << (r.ok ? (warned ? " WARN" : " PASS") : " FAIL") << "\n";
    }
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << records.size() << " entries, " << failures << " failed, "
              << warns << " warned\n";
  }
  return failures == 0 ? 0 : kExitValidation;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Partial degrees of the generic offset of a plane curve"};
  app.require_subcommand(1);

  std::string algo_name = "prs";
  app.add_option("--resultant", algo_name, "Resultant algorithm")
      ->check(CLI::IsMember({"prs", "bareiss"}));
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  std::string poly_text;
  ParamArgs params;

  auto* implicit = app.add_subcommand("implicit", "Implicit curve f(y1,y2)");
  implicit->fallthrough();
  implicit->add_option("poly", poly_text, "Curve polynomial")->required();
  implicit->add_option("--param", params.raw, "Parameter value NAME=RAT");
  implicit->add_flag("--symbolic", params.symbolic,
                     "Keep parameters as ring variables");

  std::string x_text, y_text, w_text;
  bool reduce = false;
  auto* parametric =
      app.add_subcommand("parametric", "Rational parametrization (X/W, Y/W)");
  parametric->fallthrough();
  parametric->add_option("--x", x_text, "Numerator X(t)")->required();
  parametric->add_option("--y", y_text, "Numerator Y(t)")->required();
  parametric->add_option("--w", w_text, "Denominator W(t)")->required();
  parametric->add_flag("--reduce", reduce, "Divide out a common factor");

  std::string fixture = "data/corpus.json";
  CorpusOptions copt;
  auto* corpus = app.add_subcommand("corpus", "Run the bundled curve fixture");
  corpus->fallthrough();
  corpus->add_option("fixture", fixture, "Fixture JSON path");
  corpus->add_option("--parallel", copt.parallel, "Worker thread count");
  corpus->add_option("--filter", copt.filter, "Run only the named entry");
  corpus->add_flag("--symbolic", copt.symbolic,
                   "Keep parameters as ring variables");

  bool symbolic_d = false;
  std::string d0_text;
  std::uint64_t seed = 1;
  auto* oracle =
      app.add_subcommand("oracle-check", "Cross-check against elimination");
  oracle->fallthrough();
  oracle->add_option("poly", poly_text, "Curve polynomial")->required();
  oracle->add_option("--param", params.raw, "Parameter value NAME=RAT");
  oracle->add_flag("--symbolic-d", symbolic_d, "Keep d symbolic (degree <= 2)");
  oracle->add_option("--d0", d0_text, "Specialization distance (rational)");
  oracle->add_option("--seed", seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitValidation;
  }

  ResultantAlgo algo =
      algo_name == "bareiss" ? ResultantAlgo::bareiss : ResultantAlgo::prs;

  if (implicit->parsed()) {
    VarTable vars;
    Polynomial f = parse_implicit_input(poly_text, vars, params);
    DegreeReport r = degree_report(validate_implicit(f), algo);
    if (as_json)
      std::cout << report_json(poly_text, r, std::nullopt).dump(2) << "\n";
    else
      print_report(r);
    return 0;
  }

  if (parametric->parsed()) {
    VarTable vars;
    RationalParametrization p =
        parse_parametrization(x_text, y_text, w_text, vars, {}, reduce);
    DegreeReport r = degree_report(p);
    if (as_json)
      std::cout << report_json("parametric", r, std::nullopt).dump(2) << "\n";
    else
      print_report(r);
    return 0;
  }

  if (corpus->parsed()) {
    copt.algo = algo;
    return run_corpus_cmd(fixture, copt, as_json);
  }

  // oracle-check
  VarTable vars;
  params.symbolic = false;
  Polynomial f = parse_implicit_input(poly_text, vars, params);
  ImplicitCurve curve = validate_implicit(f);
  DegreeReport formula = degree_report(curve, algo);
  std::optional<mpq_class> d0;
  if (!d0_text.empty()) d0 = parse_rational_arg(d0_text);
  EliminationResult elim =
      eliminate_offset(curve, symbolic_d, d0, seed,
                       std::make_pair(formula.delta1, formula.delta2));
  OracleDegrees od = oracle_degrees(elim);
  bool agree = od.delta1 == formula.delta1 && od.delta2 == formula.delta2 &&
               (!od.delta_d || *od.delta_d == formula.delta_d.value_or(-1));
  if (as_json) {
    json j = report_json(poly_text, formula, agree);
    j["oracle"] = {{"delta1", od.delta1},
                   {"delta2", od.delta2},
                   {"delta_d", od.delta_d ? json(*od.delta_d) : json(nullptr)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "formula: delta1=" << formula.delta1
              << " delta2=" << formula.delta2
              << " delta_d=" << formula.delta_d.value_or(-1) << "\n"
              << "oracle:  delta1=" << od.delta1 << " delta2=" << od.delta2;
    if (od.delta_d) std::cout << " delta_d=" << *od.delta_d;
    std::cout << "\n" << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  return agree ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UnknownVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CommonFactor& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ZeroDenominator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IsLine& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NotSquarefree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IsotropicDivisor& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CostGuard& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCostGuard;
  } catch (const DegenerateResultant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegeneracy;
  } catch (const DegenerateAuxiliary& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegeneracy;
  } catch (const DegenerateParametrization& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegeneracy;
  } catch (const SampleFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegeneracy;
  } catch (const FormulaMismatch& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
