#include "offsetdeg/corpus.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "offsetdeg/errors.hpp"
#include "offsetdeg/parser.hpp"

namespace offsetdeg {

namespace {

using nlohmann::json;

mpq_class parse_rational(const std::string& text) {
  try {
    mpq_class q(text);
    q.canonicalize();
    if (q.get_den() == 0) throw FixtureError("zero denominator: " + text);
    return q;
  } catch (const std::invalid_argument&) {
    throw FixtureError("bad rational literal: " + text);
  }
}

CorpusEntry entry_from_json(const json& j) {
  if (!j.is_object()) throw FixtureError("entry is not an object");
  CorpusEntry e;
  try {
    e.name = j.at("name").get<std::string>();
    e.implicit_src = j.at("implicit").get<std::string>();
    const json& exp = j.at("expected");
    e.expected_delta1 = exp.at("delta1").get<int>();
    e.expected_delta2 = exp.at("delta2").get<int>();
    e.expected_delta_d = exp.at("delta_d").get<int>();
    e.total_degree = exp.value("total_degree", 0);
    if (j.contains("param")) {
      const json& p = j.at("param");
      e.param_src = {{p.at("x").get<std::string>(),
                      p.at("y").get<std::string>(),
                      p.at("w").get<std::string>()}};
    }
    if (j.contains("substitutions"))
      for (const auto& [name, val] : j.at("substitutions").items())
        e.substitutions[name] = val.get<std::string>();
    e.source_ambiguity = j.value("source_ambiguity", false);
  } catch (const json::exception& ex) {
    throw FixtureError(std::string("bad entry: ") + ex.what());
  }
  return e;
}

Status judge(int got, int want, bool ambiguous) {
  if (got == want) return Status::pass;
  return ambiguous ? Status::warn : Status::fail;
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot read fixture: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& ex) {
    throw FixtureError(std::string("fixture is not valid JSON: ") + ex.what());
  }
  if (!doc.is_array()) throw FixtureError("fixture must be a JSON array");
  std::vector<CorpusEntry> out;
  for (const json& j : doc) out.push_back(entry_from_json(j));
  return out;
}

RunRecord run_entry(const CorpusEntry& e, const CorpusOptions& opt) {
  RunRecord r;
  r.name = e.name;
  try {
    VarTable vars;
    std::set<std::string> allowed = {"y1", "y2"};
    for (const auto& [name, val] : e.substitutions) allowed.insert(name);
    Polynomial f = parse_polynomial(e.implicit_src, vars, allowed);

    if (!opt.symbolic && !e.substitutions.empty()) {
      std::map<VarId, Binding> binds;
      for (const auto& [name, val] : e.substitutions) {
        VarId v = vars.lookup(name);
        if (v == kMaxVars) continue;  // parameter unused in the source
        binds.emplace(v, Binding::rational(parse_rational(val)));
      }
      f = substitute(f, binds);
    }

    ImplicitCurve curve = validate_implicit(f);
    r.report = degree_report(curve, opt.algo);
    r.delta1 = judge(r.report.delta1, e.expected_delta1, e.source_ambiguity);
    r.delta2 = judge(r.report.delta2, e.expected_delta2, e.source_ambiguity);
    r.delta_d = judge(r.report.delta_d.value_or(-1), e.expected_delta_d,
                      e.source_ambiguity);
    r.ok = r.delta1 != Status::fail && r.delta2 != Status::fail &&
           r.delta_d != Status::fail;

    if (e.param_src) {
      RationalParametrization p = parse_parametrization(
          (*e.param_src)[0], (*e.param_src)[1], (*e.param_src)[2], vars);
      r.parametric_report = degree_report(p);
      if (r.parametric_report->delta1 != r.report.delta1 ||
          r.parametric_report->delta2 != r.report.delta2)
        r.ok = false;
    }
  } catch (const std::exception& ex) {
    r.error = ex.what();
    r.ok = false;
  }
  return r;
}

std::vector<RunRecord> run_corpus(const std::vector<CorpusEntry>& entries,
                                  const CorpusOptions& opt) {
  std::vector<const CorpusEntry*> selected;
  for (const CorpusEntry& e : entries)
    if (opt.filter.empty() || e.name == opt.filter) selected.push_back(&e);

  std::vector<RunRecord> records(selected.size());
  int workers = std::max(1, opt.parallel);
  if (workers == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i)
      records[i] = run_entry(*selected[i], opt);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= selected.size()) return;
          records[i] = run_entry(*selected[i], opt);
        }
      });
    for (std::thread& th : pool) th.join();
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const RunRecord& a, const RunRecord& b) {
                     return a.name < b.name;
                   });
  return records;
}

}  // namespace offsetdeg
