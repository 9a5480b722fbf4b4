#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "bratteli/samplers.hpp"
#include "bratteli/verify.hpp"

namespace bratteli {

using Json = nlohmann::ordered_json;

// All rationals serialize as exact "num/den" strings; the only floating-point
// columns are sampler summaries, and their keys carry an "approx" suffix.

inline Json partition_json(const Partition& lam) {
  Json arr = Json::array();
  for (int p : lam.parts()) arr.push_back(p);
  return arr;
}

inline Json rat_json(const Rat& v) { return to_fraction_string(v); }

inline Json laurent_json(const LaurentPoly& poly) {
  Json arr = Json::array();
  for (const auto& [e, c] : poly.terms())
    arr.push_back(Json{{"eq", e.q}, {"et", e.t}, {"coeff", rat_json(c)}});
  return arr;
}

// Univariate view for polynomials whose only variable sits in the q slot.
inline Json univariate_json(const LaurentPoly& poly, const std::string& variable) {
  Json terms = Json::array();
  for (const auto& [e, c] : poly.terms()) {
    if (e.t != 0) throw std::logic_error("polynomial is not univariate in " + variable);
    terms.push_back(Json{{"degree", e.q}, {"coeff", rat_json(c)}});
  }
  return Json{{"variable", variable}, {"terms", terms}};
}

inline Json rational_function_json(const RationalFunction& f) {
  return Json{{"num", laurent_json(f.num())}, {"den", laurent_json(f.den())}};
}

inline Json meta_json(const DistributionMeta& meta) {
  Json j = Json::object();
  if (meta.q) j["q"] = rat_json(*meta.q);
  if (meta.t) j["t"] = rat_json(*meta.t);
  if (meta.alphabet) j["alphabet"] = meta.alphabet->describe();
  j["source"] = meta.source;
  if (meta.trials) j["trials"] = *meta.trials;
  if (meta.seed) j["seed"] = *meta.seed;
  return j;
}

inline Json distribution_json(const Distribution& dist) {
  Json j = Json::object();
  j["n"] = dist.n();
  Json meta = meta_json(dist.meta());
  for (auto& [key, value] : meta.items()) j[key] = value;
  Json entries = Json::array();
  for (const auto& [lam, p] : dist.entries())
    entries.push_back(Json{{"partition", partition_json(lam)}, {"prob", rat_json(p)}});
  j["entries"] = entries;
  return j;
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string distribution_csv(const Distribution& dist) {
  std::ostringstream os;
  os << "partition,prob\n";
  for (const auto& [lam, p] : dist.entries())
    os << csv_quote(partition_to_string(lam)) << "," << to_fraction_string(p) << "\n";
  return os.str();
}

inline Json verify_report_json(const VerifyReport& report) {
  Json j = Json::object();
  j["identity"] = report.identity;
  j["status"] = report.ok ? "ok" : "violated";
  j["checked"] = report.checked;
  j["detail"] = report.detail;
  if (report.counterexample) j["counterexample"] = *report.counterexample;
  return j;
}

inline std::string verify_report_csv(const VerifyReport& report) {
  std::ostringstream os;
  os << "identity,status,checked,detail,counterexample\n";
  os << csv_quote(report.identity) << "," << (report.ok ? "ok" : "violated") << ","
     << report.checked << "," << csv_quote(report.detail) << ","
     << csv_quote(report.counterexample.value_or("")) << "\n";
  return os.str();
}

inline Json suite_json(const SuiteReport& suite) {
  Json arr = Json::array();
  for (const VerifyReport& r : suite.reports) arr.push_back(verify_report_json(r));
  return Json{{"status", suite.ok ? "ok" : "violated"}, {"reports", arr}};
}

inline std::string suite_csv(const SuiteReport& suite) {
  std::ostringstream os;
  os << "identity,status,checked,detail,counterexample\n";
  for (const VerifyReport& r : suite.reports)
    os << csv_quote(r.identity) << "," << (r.ok ? "ok" : "violated") << "," << r.checked << ","
       << csv_quote(r.detail) << "," << csv_quote(r.counterexample.value_or("")) << "\n";
  return os.str();
}

inline Json sample_run_json(const SampleRun& run) {
  Json j = Json::object();
  j["sampler"] = run.sampler;
  j["n"] = run.n;
  j["trials"] = run.trials;
  j["seed"] = run.seed;
  if (run.params) {
    j["q"] = rat_json(run.params->q);
    j["t"] = rat_json(run.params->t);
  }
  if (run.alphabet) j["alphabet"] = run.alphabet->describe();
  if (run.p) j["p"] = *run.p;
  std::map<Partition, long, EnumLess> counts;
  for (const Partition& lam : run.endpoints) ++counts[lam];
  Json freq = Json::array();
  for (const auto& [lam, c] : counts)
    freq.push_back(Json{{"partition", partition_json(lam)}, {"count", c}});
  j["frequencies"] = freq;
  if (run.record_paths) {
    Json paths = Json::array();
    for (const GrowthPath& path : run.paths) {
      Json cols = Json::array();
      for (int c : path.added_columns()) cols.push_back(c);
      paths.push_back(cols);
    }
    j["paths"] = paths;
  }
  return j;
}

inline std::string sample_run_csv(const SampleRun& run) {
  std::ostringstream os;
  std::map<Partition, long, EnumLess> counts;
  for (const Partition& lam : run.endpoints) ++counts[lam];
  os << "partition,count\n";
  for (const auto& [lam, c] : counts) os << csv_quote(partition_to_string(lam)) << "," << c << "\n";
  return os.str();
}

inline Json profile_json(const ProfileReport& report) {
  Json rows = Json::array();
  for (const ProfileRow& row : report.rows)
    rows.push_back(Json{{"part", row.index},
                        {"mean_approx", row.mean},
                        {"stderr_approx", row.stderr_},
                        {"limit", rat_json(row.limit)}});
  return Json{{"n", report.n}, {"p", report.p},      {"trials", report.trials},
              {"seed", report.seed}, {"rows", rows}};
}

inline std::string profile_csv(const ProfileReport& report) {
  std::ostringstream os;
  os << "part,mean_approx,stderr_approx,limit\n";
  for (const ProfileRow& row : report.rows)
    os << row.index << "," << row.mean << "," << row.stderr_ << ","
       << to_fraction_string(row.limit) << "\n";
  return os.str();
}

inline Json compare_json(const std::string& label, const Distribution& reference,
                         const Distribution& observed, const Rat& tv, const Rat& tol) {
  return Json{{"comparison", label},
              {"n", reference.n()},
              {"tv_distance", rat_json(tv)},
              {"tolerance", rat_json(tol)},
              {"status", tv <= tol ? "ok" : "violated"},
              {"reference", distribution_json(reference)},
              {"observed", distribution_json(observed)}};
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace bratteli
