#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bratteli/serialize.hpp"

using namespace bratteli;

namespace {

struct Output {
  std::string format = "json";  // json | csv
  std::string path;             // empty = stdout

  int emit(const Json& j, const std::string& csv) const {
    const std::string text = format == "json" ? dump_json(j) : csv;
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot open output file: " + path);
      f << text;
    }
    return 0;
  }
};

Partition parse_partition_flag(const std::string& s) {
  if (s.empty() || s.front() != '[') return partition_from_string("[" + s + "]");
  return partition_from_string(s);
}

Rat parse_rat_flag(const std::string& s) { return rat_from_string(s); }

// A cover step named by the column that receives the new cell.
CoverStep step_from_column(const Partition& parent, int col) {
  if (col < 1) throw std::invalid_argument("invalid-step: column must be >= 1");
  long row = column_length(parent, col) + 1;
  CoverStep step = make_cover_step(parent, static_cast<int>(row));
  if (step.added.col != col)
    throw std::invalid_argument("invalid-step: column " + std::to_string(col) +
                                " is not addable to " + partition_to_string(parent));
  return step;
}

// Exactly one parameter flavor must be selected on kappa/dim.
struct Flavor {
  std::string q, t;          // general two-parameter point
  int hl_p = 0;              // q = 0, t = 1/p closed forms
  std::string schur_q;       // equal-parameter closed forms
  std::string jack_theta;    // one-parameter limit
  bool symbolic = false;

  std::string kind() const {
    int picked = 0;
    std::string k;
    if (!q.empty() || !t.empty()) { ++picked; k = "qt"; }
    if (hl_p != 0) { ++picked; k = "hl"; }
    if (!schur_q.empty()) { ++picked; k = "schur"; }
    if (!jack_theta.empty()) { ++picked; k = "jack"; }
    if (symbolic) { ++picked; k = "symbolic"; }
    if (picked != 1)
      throw CLI::ValidationError(
          "choose exactly one of --q/--t, --hl-p, --schur-q, --jack-theta, --symbolic");
    if (k == "qt" && (q.empty() || t.empty()))
      throw CLI::ValidationError("--q and --t must be given together");
    return k;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "parameter q as an exact rational");
    cmd->add_option("--t", t, "parameter t as an exact rational");
    cmd->add_option("--hl-p", hl_p, "evaluate at q=0, t=1/p via the closed forms");
    cmd->add_option("--schur-q", schur_q, "evaluate at equal parameters via the hook closed forms");
    cmd->add_option("--jack-theta", jack_theta, "evaluate the one-parameter limit weight");
    cmd->add_flag("--symbolic", symbolic, "return the two-parameter rational function");
  }
};

int run_enumerate(int n, const Output& out) {
  Json arr = Json::array();
  std::ostringstream csv;
  csv << "partition\n";
  for (const Partition& lam : enumerate_partitions(n)) {
    arr.push_back(partition_json(lam));
    csv << csv_quote(partition_to_string(lam)) << "\n";
  }
  return out.emit(arr, csv.str());
}

int run_kappa(const std::string& parent_s, int col, const Flavor& flavor, const Output& out) {
  Partition parent = parse_partition_flag(parent_s);
  CoverStep step = step_from_column(parent, col);
  Json j = Json::object();
  j["parent"] = partition_json(step.from);
  j["child"] = partition_json(step.to);
  j["col"] = col;
  std::string kind = flavor.kind(), value_text;
  if (kind == "qt") {
    QT params{parse_rat_flag(flavor.q), parse_rat_flag(flavor.t)};
    j["q"] = rat_json(params.q);
    j["t"] = rat_json(params.t);
    Rat v = kappa(step, params);
    j["value"] = rat_json(v);
    value_text = to_fraction_string(v);
  } else if (kind == "hl") {
    j["p"] = flavor.hl_p;
    Int v = hl_kappa(step, flavor.hl_p);
    j["value"] = to_fraction_string(Rat(v));
    value_text = to_fraction_string(Rat(v));
  } else if (kind == "schur") {
    Rat q = parse_rat_flag(flavor.schur_q);
    j["q"] = rat_json(q);
    Rat v = schur_kappa<Rat>(step, q);
    j["value"] = rat_json(v);
    value_text = to_fraction_string(v);
  } else if (kind == "jack") {
    Rat theta = parse_rat_flag(flavor.jack_theta);
    j["theta"] = rat_json(theta);
    Rat v = jack_kappa(step, theta);
    j["value"] = rat_json(v);
    value_text = to_fraction_string(v);
  } else {
    RationalFunction f = kappa_symbolic(step);
    j["value"] = rational_function_json(f);
    value_text = csv_quote(f.to_text());
  }
  return out.emit(j, "value\n" + value_text + "\n");
}

int run_dim(const std::string& partition_s, const Flavor& flavor, const Output& out) {
  Partition lam = parse_partition_flag(partition_s);
  Json j = Json::object();
  j["partition"] = partition_json(lam);
  std::string kind = flavor.kind(), value_text;
  if (kind == "qt") {
    QT params{parse_rat_flag(flavor.q), parse_rat_flag(flavor.t)};
    j["q"] = rat_json(params.q);
    j["t"] = rat_json(params.t);
    Rat v = dimension(lam, params);
    j["value"] = rat_json(v);
    value_text = to_fraction_string(v);
  } else if (kind == "hl") {
    j["p"] = flavor.hl_p;
    Rat v = green_value(lam, flavor.hl_p);
    j["value"] = rat_json(v);
    value_text = to_fraction_string(v);
  } else if (kind == "schur") {
    Rat q = parse_rat_flag(flavor.schur_q);
    j["q"] = rat_json(q);
    Rat v = schur_dimension(lam, q);
    j["value"] = rat_json(v);
    value_text = to_fraction_string(v);
  } else if (kind == "jack") {
    Rat theta = parse_rat_flag(flavor.jack_theta);
    j["theta"] = rat_json(theta);
    Rat v = jack_dimension(lam, theta);
    j["value"] = rat_json(v);
    value_text = to_fraction_string(v);
  } else {
    RationalFunction f = dimension_symbolic(lam);
    j["value"] = rational_function_json(f);
    value_text = csv_quote(f.to_text());
  }
  return out.emit(j, "value\n" + value_text + "\n");
}

int run_measure(int n, const std::string& q, const std::string& t, const std::string& alphabet,
                int hl_p, bool schur, const Output& out) {
  std::optional<Distribution> dist;
  if (hl_p != 0) {
    if (!q.empty() || !t.empty() || schur || !alphabet.empty())
      throw CLI::ValidationError("--hl-p excludes the other measure flags");
    dist = jordan_measure(n, hl_p);
  } else if (schur) {
    if (!q.empty() || !t.empty())
      throw CLI::ValidationError("--schur takes --alphabet only");
    Alphabet x = Alphabet::parse(alphabet);
    if (x.kind() != Alphabet::Kind::finite)
      throw CLI::ValidationError("--schur needs a finite alphabet");
    dist = schur_measure(n, x.weights());
  } else {
    if (q.empty() || t.empty() || alphabet.empty())
      throw CLI::ValidationError("measure needs --q --t --alphabet (or --hl-p, or --schur)");
    dist = measure(n, Alphabet::parse(alphabet), QT{parse_rat_flag(q), parse_rat_flag(t)});
  }
  return out.emit(distribution_json(*dist), distribution_csv(*dist));
}

int run_sample(int n, long trials, std::uint64_t seed, int bk_p, const std::string& q,
               const std::string& t, const std::string& alphabet, bool paths, const Output& out) {
  std::optional<SampleRun> run;
  if (bk_p != 0) {
    if (!q.empty() || !t.empty() || !alphabet.empty())
      throw CLI::ValidationError("--bk-p excludes --q/--t/--alphabet");
    run = run_bk_sampler(n, bk_p, trials, seed, paths);
  } else {
    if (q.empty() || t.empty() || alphabet.empty())
      throw CLI::ValidationError("sample needs --bk-p or all of --q --t --alphabet");
    run = run_generic_sampler(n, Alphabet::parse(alphabet),
                              QT{parse_rat_flag(q), parse_rat_flag(t)}, trials, seed, paths);
  }
  return out.emit(sample_run_json(*run), sample_run_csv(*run));
}

int run_verify(const std::string& mode, int n, const std::string& q, const std::string& t,
               const std::string& alphabet, const Output& out) {
  auto point_or_grid = [&](auto fn) {
    // With an explicit point, verify just there; otherwise sweep the grid.
    SuiteReport suite;
    if (!q.empty() || !t.empty()) {
      if (q.empty() || t.empty() || alphabet.empty())
        throw CLI::ValidationError("give all of --q --t --alphabet, or none for the default grid");
      suite.add(fn(QT{parse_rat_flag(q), parse_rat_flag(t)}, Alphabet::parse(alphabet)));
    } else {
      for (const auto& [params, x] : default_grid()) suite.add(fn(params, x));
    }
    return suite;
  };

  std::optional<VerifyReport> report;
  std::optional<SuiteReport> suite;
  if (mode == "coherence") {
    suite = point_or_grid([&](const QT& p, const Alphabet& x) { return verify_coherence(n, p, x); });
  } else if (mode == "pieri") {
    suite = point_or_grid([&](const QT& p, const Alphabet& x) { return verify_pieri(n, p, x); });
  } else if (mode == "exchangeability") {
    report = verify_exchangeability_all(n);
  } else if (mode == "kappa-forms") {
    report = verify_kappa_forms(n);
  } else if (mode == "green-charge") {
    report = verify_green_charge(n);
  } else if (mode == "hook-dim") {
    report = verify_hook_dim(n);
  } else if (mode == "relative-dim") {
    report = verify_relative_dim(n);
  } else if (mode == "jack-limit") {
    report = verify_jack_limit(n);
  } else if (mode == "suite") {
    suite = verify_suite(n);
  } else {
    throw CLI::ValidationError("unknown verify mode: " + mode);
  }

  if (report) {
    if (suite) throw std::logic_error("ambiguous verify outcome");
    out.emit(verify_report_json(*report), verify_report_csv(*report));
    return report->ok ? 0 : 1;
  }
  if (suite->reports.size() == 1) {
    const VerifyReport& single = suite->reports.front();
    out.emit(verify_report_json(single), verify_report_csv(single));
    return single.ok ? 0 : 1;
  }
  out.emit(suite_json(*suite), suite_csv(*suite));
  return suite->ok ? 0 : 1;
}

int run_compare(const std::string& mode, int n, int p, const std::string& alphabet, long trials,
                std::uint64_t seed, const std::string& tol_s, const Output& out) {
  if (mode == "asymptotic") {
    Rat tol = tol_s.empty() ? Rat(1, 50) : parse_rat_flag(tol_s);
    ProfileReport pr = asymptotic_profile(n, p, trials, seed);
    bool ok = true;
    for (const ProfileRow& row : pr.rows)
      if (row.index <= 2) {
        double dev = row.mean - to_double(row.limit);
        if (dev < 0) dev = -dev;
        if (dev > to_double(tol)) ok = false;
      }
    Json j = profile_json(pr);
    j["tolerance"] = rat_json(tol);
    j["status"] = ok ? "ok" : "violated";
    out.emit(j, profile_csv(pr));
    return ok ? 0 : 1;
  }

  std::optional<Distribution> reference, observed;
  std::string label;
  Rat tol = tol_s.empty() ? Rat(1, 100) : parse_rat_flag(tol_s);
  if (mode == "matrix-exhaustive") {
    label = "unipotent Jordan types, exhaustive, vs the geometric-alphabet measure";
    if (tol_s.empty()) tol = 0;  // exhaustive counting is exact
    reference = jordan_measure(n, p);
    observed = jordan_distribution_exhaustive(n, p);
  } else if (mode == "matrix-mc") {
    label = "unipotent Jordan types, sampled, vs the geometric-alphabet measure";
    reference = jordan_measure(n, p);
    std::mt19937_64 rng = make_engine(seed, 0);
    observed = jordan_distribution_mc(n, p, trials, rng);
  } else if (mode == "rsk") {
    label = "RSK insertion shapes vs the equal-parameter measure";
    Alphabet x = Alphabet::parse(alphabet);
    if (x.kind() != Alphabet::Kind::finite)
      throw CLI::ValidationError("compare rsk needs a finite alphabet");
    reference = schur_measure(n, x.weights());
    if (trials == 0) {
      if (tol_s.empty()) tol = 0;
      observed = rsk_distribution_exhaustive(n, x.weights());
    } else {
      std::mt19937_64 rng = make_engine(seed, 0);
      observed = rsk_distribution_mc(n, x.weights(), trials, rng);
    }
  } else {
    throw CLI::ValidationError("unknown compare mode: " + mode);
  }

  Rat tv = tv_distance(*reference, *observed);
  Json j = compare_json(label, *reference, *observed, tv, tol);
  std::ostringstream csv;
  csv << "comparison,tv_distance,tolerance,status\n"
      << csv_quote(label) << "," << to_fraction_string(tv) << "," << to_fraction_string(tol)
      << "," << (tv <= tol ? "ok" : "violated") << "\n";
  out.emit(j, csv.str());
  return tv <= tol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partition-branching toolkit: multiplicities, dimensions, coherent "
               "measures, growth samplers, identity verifiers, and brute-force cross-checks."};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out.path, "write output to a file instead of stdout");

  int n = 0, col = 0, hl_p = 0, bk_p = 0, p = 2;
  long trials = 0;
  std::uint64_t seed = 0;
  bool paths = false, schur = false;
  std::string parent, partition, q, t, alphabet, mode, tol;
  Flavor kappa_flavor, dim_flavor;

  CLI::App* c_enum = app.add_subcommand("enumerate", "list the partitions at one level");
  c_enum->add_option("--n", n, "level")->required();

  CLI::App* c_kappa = app.add_subcommand("kappa", "multiplicity of a single cover step");
  c_kappa->add_option("--parent", parent, "partition the cell is added to")->required();
  c_kappa->add_option("--col", col, "column receiving the new cell")->required();
  kappa_flavor.attach(c_kappa);

  CLI::App* c_dim = app.add_subcommand("dim", "weighted path count from the empty partition");
  c_dim->add_option("--partition", partition, "target partition")->required();
  dim_flavor.attach(c_dim);

  CLI::App* c_measure = app.add_subcommand("measure", "exact level distribution");
  c_measure->add_option("--n", n, "level")->required();
  c_measure->add_option("--q", q, "parameter q");
  c_measure->add_option("--t", t, "parameter t");
  c_measure->add_option("--alphabet", alphabet,
                        "comma list of rationals summing to 1, or geometric:P");
  c_measure->add_option("--hl-p", hl_p, "q=0, t=1/p specialization");
  c_measure->add_flag("--schur", schur, "equal-parameter specialization (needs --alphabet)");

  CLI::App* c_sample = app.add_subcommand("sample", "grow random partitions step by step");
  c_sample->add_option("--n", n, "number of growth steps")->required();
  c_sample->add_option("--trials", trials, "number of independent paths")->required();
  c_sample->add_option("--seed", seed, "base seed; trial k uses stream (seed, k)")->required();
  c_sample->add_option("--bk-p", bk_p, "column sampler at q=0, t=1/p");
  c_sample->add_option("--q", q, "parameter q");
  c_sample->add_option("--t", t, "parameter t");
  c_sample->add_option("--alphabet", alphabet, "alphabet for the generic sampler");
  c_sample->add_flag("--paths", paths, "record full paths as column sequences");

  CLI::App* c_verify = app.add_subcommand("verify", "prove an identity exactly at desk scale");
  c_verify
      ->add_option("mode", mode,
                   "coherence|exchangeability|pieri|kappa-forms|green-charge|hook-dim|"
                   "relative-dim|jack-limit|suite")
      ->required();
  c_verify->add_option("--n", n, "level cap")->required();
  c_verify->add_option("--q", q, "parameter q (else: default grid)");
  c_verify->add_option("--t", t, "parameter t (else: default grid)");
  c_verify->add_option("--alphabet", alphabet, "alphabet (else: default grid)");

  CLI::App* c_compare = app.add_subcommand("compare", "cross-check against brute-force oracles");
  c_compare->add_option("mode", mode, "matrix-exhaustive|matrix-mc|rsk|asymptotic")->required();
  c_compare->add_option("--n", n, "level / matrix size / growth steps")->required();
  c_compare->add_option("--p", p, "base for the finite-field and column samplers");
  c_compare->add_option("--alphabet", alphabet, "letter law for rsk");
  c_compare->add_option("--trials", trials, "sample count (rsk: 0 = exhaustive words)");
  c_compare->add_option("--seed", seed, "base seed");
  c_compare->add_option("--tol", tol, "acceptance tolerance as an exact rational");

  for (CLI::App* sub : {c_enum, c_kappa, c_dim, c_measure, c_sample, c_verify, c_compare})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(c_enum)) return run_enumerate(n, out);
    if (app.got_subcommand(c_kappa)) return run_kappa(parent, col, kappa_flavor, out);
    if (app.got_subcommand(c_dim)) return run_dim(partition, dim_flavor, out);
    if (app.got_subcommand(c_measure)) return run_measure(n, q, t, alphabet, hl_p, schur, out);
    if (app.got_subcommand(c_sample))
      return run_sample(n, trials, seed, bk_p, q, t, alphabet, paths, out);
    if (app.got_subcommand(c_verify)) return run_verify(mode, n, q, t, alphabet, out);
    if (app.got_subcommand(c_compare))
      return run_compare(mode, n, p, alphabet, trials, seed, tol, out);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
