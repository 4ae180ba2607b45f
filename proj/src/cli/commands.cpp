#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricert/classifier.hpp"
#include "tricert/cli.hpp"
#include "tricert/errors.hpp"
#include "tricert/jacobsthal.hpp"
#include "tricert/lemmas.hpp"
#include "tricert/line_search.hpp"
#include "tricert/manifest.hpp"
#include "tricert/moments.hpp"
#include "tricert/parallel.hpp"

namespace tricert {

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

std::string triple_text(const Int3& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? " " : "") + args[i];
  return s;
}

void write_text(const fs::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw InputError("cannot write " + file.string());
  out << text;
}

// ---------------------------------------------------------------- stage summaries

ojson moments_summary() {
  const auto tab = cached_coef_table(12);
  const auto sums = line_sums(*tab);
  const auto distinct = distinct_line_sums(sums);
  const auto rows = exceptional_hyperplanes(*tab, default_moment_threshold());
  ojson j;
  j["c0"] = tab->at({0, 0, 0}).get_str();
  j["total"] = tab->total().get_str();
  j["support"] = tab->support_size();
  j["directions"] = sums.size();
  j["distinct_sums"] = distinct.size();
  auto& smallest = j["smallest_sums"] = ojson::array();
  for (std::size_t i = 0; i < 16 && i < distinct.size(); ++i) smallest.push_back(distinct[i].get_str());
  auto& hyper = j["hyperplanes"] = ojson::array();
  for (const auto& r : rows) hyper.push_back(triple_text(r.triple));
  return j;
}

ojson failures_json(const std::vector<TripleFailure>& fs) {
  ojson arr = ojson::array();
  for (const auto& f : fs) {
    arr.push_back({{"triple", triple_text(f.triple)},
                   {"max", to_string(f.best.distance)},
                   {"t", to_string(f.best.t)}});
  }
  return arr;
}

ojson hyperplanes_summary(const HyperplaneReport& rep) {
  ojson j;
  j["height_cutoff"] = rep.projected.height_cutoff;
  j["lines_per_hyperplane"] = rep.projected.lines_per_hyperplane;
  j["projected_nonzero"] = rep.projected.distinct_nonzero;
  j["special_closed_form_ok"] = rep.special.closed_form_ok;
  j["codim2_pairs"] = rep.codim2.pairs;
  j["codim2_distinct"] = rep.codim2.distinct_sorted;
  j["exceptions"] = failures_json(rep.exceptions);
  return j;
}

ojson sweep_json(const SweepResult& res, SweepProfile profile, std::int64_t lo, std::int64_t hi) {
  ojson j;
  j["profile"] = to_string(profile);
  j["p_lo"] = lo;
  j["p_hi"] = hi;
  j["units"] = res.units;
  j["triples_checked"] = res.triples_checked;
  j["triples_skipped"] = res.triples_skipped;
  std::size_t non_hilbert = 0;
  auto& arr = j["failures"] = ojson::array();
  for (const auto& f : res.failures) {
    const Triple t = Triple::make(f.p, f.a * f.d, f.b * f.d);
    const bool member = in_hilbert_series(t.p, t.q, t.r);
    non_hilbert += !member;
    arr.push_back({{"p", f.p},
                   {"a", f.a},
                   {"b", f.b},
                   {"d", f.d},
                   {"triple", triple_text({t.p, t.q, t.r})},
                   {"reason", "NoWitnessFound"},
                   {"hilbert", member}});
  }
  j["non_hilbert_failures"] = non_hilbert;
  return j;
}

ojson batch_summary(const BatchReport& rep) {
  ojson j;
  j["max_param"] = rep.max_param;
  j["triples"] = rep.triples;
  j["witnesses"] = rep.witnesses;
  auto& ex = j["exhausted"] = ojson::array();
  for (const auto& t : rep.exhausted) ex.push_back(triple_text({t.p, t.q, t.r}));
  j["matches_hilbert"] = rep.matches_hilbert;
  return j;
}

ojson final_json(const FinalAssemblyReport& rep) {
  ojson j;
  j["B"] = rep.B;
  auto& steps = j["steps"] = ojson::array();
  for (const auto& s : rep.steps) steps.push_back({{"label", s.label}, {"value", s.value}, {"holds", s.holds}});
  j["all_hold"] = rep.all_hold();
  return j;
}

// What verify-all compares against when no --expected file is given.
ojson default_expected() {
  ojson e;
  e["moments"] = {{"c0", "48938065973953984"},
                  {"total", "36520347436056576"},
                  {"directions", 6337},
                  {"distinct_sums", 334},
                  {"min_sum", "14495307580935536"},
                  {"hyperplanes", 16}};
  e["hyperplanes"] = {{"exceptions",
                       {"(1,2,6) 6/5 12/5", "(2,3,6) 6/5 6/5", "(3,4,12) 6/5 24/5"}}};
  e["sweeps"] = {{"non_hilbert_failures", 0}};
  e["batch"] = {{"exhausted",
                 {"(2,4,6)", "(2,6,6)", "(2,6,10)", "(3,4,4)", "(3,6,6)", "(3,10,10)", "(4,6,12)",
                  "(5,6,6)", "(6,9,18)", "(6,10,15)", "(14,21,42)"}}};
  e["final"] = {{"all_hold", true}};
  return e;
}

// ---------------------------------------------------------------- commands

struct Common {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 0;
  std::string out_path;
};

int cmd_classify(std::int64_t p, std::int64_t q, std::int64_t r, const Common& c, std::ostream& out) {
  const Certificate cert = classify(p, q, r, c.seed);
  if (c.json) {
    out << serialize(cert) << "\n";
  } else if (const auto* w = std::get_if<WitnessK>(&cert.verdict)) {
    out << triple_name(cert.triple) << ": witness k=" << w->k << " distance=" << to_string(w->distance)
        << " (n=" << cert.triple.n << ")\n";
  } else {
    const auto& e = std::get<ExhaustedNoK>(cert.verdict);
    out << triple_name(cert.triple) << ": no witness, " << e.residues_scanned
        << " residues scanned mod " << e.n << " (Hilbert Series member)\n";
  }
  return cert.has_witness() ? kExitOk : kExitHilbert;
}

int cmd_batch(std::int64_t max_param, const Common& c, std::ostream& out) {
  const bool keep = !c.out_path.empty();
  const BatchReport rep = batch_verify(max_param, resolve_jobs(c.jobs), keep, c.seed);
  if (keep) {
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw InputError("cannot write " + c.out_path);
    for (const auto& cert : rep.certificates) f << serialize(cert) << "\n";
  }
  if (c.json) {
    out << batch_summary(rep).dump(2) << "\n";
  } else {
    out << "triples: " << rep.triples << ", witnesses: " << rep.witnesses
        << ", exhausted: " << rep.exhausted.size() << "\n";
    for (const auto& t : rep.exhausted) out << "  " << triple_name(t) << "\n";
    out << (rep.matches_hilbert ? "exhausted set equals the Hilbert Series members\n"
                                : "MISMATCH with the Hilbert Series\n");
  }
  return rep.matches_hilbert ? kExitOk : kExitMismatch;
}

int cmd_replay(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::string line;
  std::size_t ok = 0, bad = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto res = replay_json(line);
    if (res.ok) {
      ++ok;
    } else {
      ++bad;
      err << "rejected: " << res.reason << ": " << line << "\n";
    }
  }
  out << "replayed " << ok + bad << " certificates, " << bad << " rejected\n";
  return bad == 0 ? kExitOk : kExitMismatch;
}

int cmd_jacobsthal(std::int64_t n, const Common& c, std::ostream& out) {
  if (n < 1) throw InputError("n must be positive");
  if (radical(n) > 100000000) throw InputError("radical too large for an exact gap scan");
  const std::int64_t J = jacobsthal_exact(n);
  const auto ub = jacobsthal_upper(n);
  if (c.json) {
    ojson j{{"n", n}, {"omega", omega(n)}, {"J", J}, {"upper", ub.value}, {"source", std::string(to_string(ub.source))}};
    out << j.dump() << "\n";
  } else {
    out << "J(" << n << ") = " << J << ", omega = " << omega(n) << ", upper bound " << ub.value << " ("
        << to_string(ub.source) << ")\n";
  }
  return kExitOk;
}

int cmd_moments(const Common& c, std::ostream& out) {
  const ojson j = moments_summary();
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "C0 = " << j["c0"].get<std::string>() << "\ntotal = " << j["total"].get<std::string>()
        << "\nsupport = " << j["support"] << "\ndirections = " << j["directions"]
        << "\ndistinct line sums = " << j["distinct_sums"] << "\nexceptional hyperplanes:";
    for (const auto& h : j["hyperplanes"]) out << " " << h.get<std::string>();
    out << "\n";
  }
  return kExitOk;
}

int cmd_hyperplanes(std::int64_t height, int budget, std::int64_t special_max, const Common& c,
                    std::ostream& out) {
  const auto rep = run_hyperplane_checks(height, budget, c.seed, resolve_jobs(c.jobs), special_max);
  const std::string problems = hyperplane_problems(rep);
  const ojson j = hyperplanes_summary(rep);
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "triples below " << to_string(rep.target) << ":\n";
    for (const auto& f : rep.exceptions) {
      out << "  " << triple_text(f.triple) << " max " << to_string(f.best.distance) << " at t = "
          << to_string(f.best.t) << "\n";
    }
    if (!problems.empty()) out << problems << "\n";
  }
  return problems.empty() ? kExitOk : kExitMismatch;
}

int cmd_sweep(const std::string& profile_name, std::int64_t lo, std::int64_t hi, const Common& c,
              const std::vector<std::string>& args, std::ostream& out) {
  SweepProfile profile;
  if (profile_name == "medium") {
    profile = SweepProfile::Medium;
  } else if (profile_name == "mediumplus") {
    profile = SweepProfile::MediumPlus;
  } else {
    throw InputError("--profile must be medium or mediumplus");
  }
  const int jobs = resolve_jobs(c.jobs);
  const auto start = std::chrono::steady_clock::now();
  const SweepResult res = sweep_small_min(lo, hi, profile, jobs);
  ojson j = sweep_json(res, profile, lo, hi);

  RunManifest m;
  m.command_line = join_args(args);
  m.seed = c.seed;
  m.workers = jobs;
  m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  m.stages["sweep"] = {{"units", res.units}, {"triples_checked", res.triples_checked}, {"failures", res.failures.size()}};
  if (!c.out_path.empty()) {
    fs::create_directories(c.out_path);
    write_text(fs::path(c.out_path) / "sweep.json", j.dump(2) + "\n");
    m.add_output(c.out_path, "sweep.json");
    m.write(fs::path(c.out_path) / "manifest.json");
  }
  j["manifest"] = m.to_json();
  out << j.dump(2) << "\n";
  return j["non_hilbert_failures"].get<std::size_t>() == 0 ? kExitOk : kExitMismatch;
}

int cmd_final_report(const Common& c, std::ostream& out) {
  const auto rep = final_assembly_report();
  if (c.json) {
    out << final_json(rep).dump(2) << "\n";
  } else {
    for (const auto& s : rep.steps) out << (s.holds ? "ok   " : "FAIL ") << s.label << ": " << s.value << "\n";
  }
  return rep.all_hold() ? kExitOk : kExitMismatch;
}

// Picks the fields of `actual` that `expected` names and compares them.
bool stage_matches(const ojson& expected, const ojson& actual, std::string& detail) {
  for (const auto& [key, value] : expected.items()) {
    if (!actual.contains(key) || actual[key] != value) {
      detail = key + ": expected " + value.dump() + ", got " + (actual.contains(key) ? actual[key].dump() : "nothing");
      return false;
    }
  }
  return true;
}

int cmd_verify_all(const std::string& scale, const std::string& expected_path, const std::string& only,
                   const Common& c, const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  if (scale != "desk" && scale != "full") throw InputError("--scale must be desk or full");
  const bool full = scale == "full";
  ojson expected = default_expected();
  if (!expected_path.empty()) {
    std::ifstream in(expected_path);
    if (!in) throw InputError("cannot read " + expected_path);
    try {
      expected = ojson::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("expected file: ") + e.what());
    }
  }
  std::vector<std::string> stages = {"moments", "hyperplanes", "sweeps", "batch", "final"};
  if (!only.empty()) {
    std::vector<std::string> picked;
    std::stringstream ss(only);
    for (std::string s; std::getline(ss, s, ',');) {
      if (std::find(stages.begin(), stages.end(), s) == stages.end()) throw InputError("unknown stage " + s);
      picked.push_back(s);
    }
    stages = picked;
  }
  const int jobs = resolve_jobs(c.jobs);
  const fs::path dir = c.out_path.empty() ? fs::path() : fs::path(c.out_path);
  if (!dir.empty()) fs::create_directories(dir);

  RunManifest m;
  m.command_line = join_args(args);
  m.seed = c.seed;
  m.workers = jobs;
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> failed;

  for (const auto& stage : stages) {
    ojson actual, counts;
    std::string extra;  // additional file content
    if (stage == "moments") {
      actual = moments_summary();
      counts = {{"directions", actual["directions"]}, {"distinct_sums", actual["distinct_sums"]}};
      actual["min_sum"] = actual["smallest_sums"][0];
      actual["hyperplanes"] = actual["hyperplanes"].size();
    } else if (stage == "hyperplanes") {
      const auto rep = run_hyperplane_checks(70, kDefaultBudget, c.seed, jobs, 10000);
      actual = hyperplanes_summary(rep);
      ojson ex = ojson::array();
      for (const auto& f : rep.exceptions)
        ex.push_back(triple_text(f.triple) + " " + to_string(f.best.distance) + " " + to_string(f.best.t));
      actual["exceptions"] = ex;
      counts = {{"codim2_pairs", rep.codim2.pairs}, {"codim2_checked", rep.codim2.triples_checked},
                {"projected_checked", rep.projected.triples_checked}};
    } else if (stage == "sweeps") {
      const auto med = sweep_small_min(2, 33, SweepProfile::Medium, jobs);
      const auto plus = sweep_small_min(34, full ? 885 : 60, SweepProfile::MediumPlus, jobs);
      const ojson mj = sweep_json(med, SweepProfile::Medium, 2, 33);
      const ojson pj = sweep_json(plus, SweepProfile::MediumPlus, 34, full ? 885 : 60);
      actual = {{"medium", mj}, {"mediumplus", pj},
                {"non_hilbert_failures", mj["non_hilbert_failures"].get<std::size_t>() + pj["failures"].size()}};
      counts = {{"medium_checked", med.triples_checked}, {"mediumplus_checked", plus.triples_checked}};
    } else if (stage == "batch") {
      const auto small = batch_verify(42, jobs, true, c.seed);
      const auto large = batch_verify(full ? 300 : 120, jobs, false, c.seed);
      actual = batch_summary(small);
      actual["exhausted_large"] = batch_summary(large)["exhausted"];
      if (large.exhausted != small.exhausted) actual["exhausted"] = actual["exhausted_large"];
      for (const auto& cert : small.certificates) extra += serialize(cert) + "\n";
      counts = {{"triples_42", small.triples}, {"triples_large", large.triples}};
    } else {
      actual = final_json(final_assembly_report());
      counts = {{"steps", actual["steps"].size()}};
    }
    std::string detail;
    const bool ok = expected.contains(stage) && stage_matches(expected[stage], actual, detail);
    if (!expected.contains(stage)) detail = "no expected values";
    counts["ok"] = ok;
    m.stages[stage] = counts;
    out << (ok ? "ok   " : "FAIL ") << stage << (ok ? "" : ": " + detail) << "\n";
    if (!ok) failed.push_back(stage);
    if (!dir.empty()) {
      write_text(dir / (stage + ".json"), actual.dump(2) + "\n");
      m.add_output(dir, stage + ".json");
      if (!extra.empty()) {
        write_text(dir / "certs.jsonl", extra);
        m.add_output(dir, "certs.jsonl");
      }
    }
  }
  m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!dir.empty()) m.write(dir / "manifest.json");
  if (!failed.empty()) {
    err << "stage mismatch:";
    for (const auto& s : failed) err << " " << s;
    err << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_check_manifest(const std::string& path, std::ostream& out) {
  const auto m = RunManifest::load_verified(path);
  out << "manifest ok, " << m.outputs.size() << " outputs verified\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert Series verifier for hyperbolic triangle groups", "tricert"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", c.json, "JSON output");
    sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
    sub->add_option("--jobs", c.jobs, "worker threads (default: TRICERT_JOBS or all cores)");
    sub->add_option("--out", c.out_path, "output path");
  };

  std::int64_t p = 0, q = 0, r = 0;
  auto* classify_cmd = app.add_subcommand("classify", "certificate for one triple");
  classify_cmd->add_option("p", p)->required();
  classify_cmd->add_option("q", q)->required();
  classify_cmd->add_option("r", r)->required();
  add_common(classify_cmd);

  std::int64_t max_param = 42;
  auto* batch_cmd = app.add_subcommand("batch", "classify every hyperbolic triple up to --max");
  batch_cmd->add_option("--max", max_param)->capture_default_str();
  add_common(batch_cmd);

  std::string replay_path;
  auto* replay_cmd = app.add_subcommand("replay", "revalidate certificates from a JSONL file");
  replay_cmd->add_option("file", replay_path)->required();

  std::int64_t jn = 0;
  auto* jac_cmd = app.add_subcommand("jacobsthal", "exact J(n) and the upper bound");
  jac_cmd->add_option("n", jn)->required();
  add_common(jac_cmd);

  auto* mom_cmd = app.add_subcommand("moments", "coefficients and line sums at m = 12");
  add_common(mom_cmd);

  std::int64_t height = 70, special_max = 10000;
  int budget = kDefaultBudget;
  auto* hyp_cmd = app.add_subcommand("hyperplanes", "lines on the exceptional hyperplanes");
  hyp_cmd->add_option("--height", height)->capture_default_str();
  hyp_cmd->add_option("--budget", budget)->capture_default_str();
  hyp_cmd->add_option("--special-p-max", special_max)->capture_default_str();
  add_common(hyp_cmd);

  std::string profile = "medium";
  std::int64_t p_lo = 2, p_hi = 33;
  auto* sweep_cmd = app.add_subcommand("sweep", "triples (p, ad, bd) with a small entry p");
  sweep_cmd->add_option("--profile", profile)->capture_default_str();
  sweep_cmd->add_option("--p-lo", p_lo)->capture_default_str();
  sweep_cmd->add_option("--p-hi", p_hi)->capture_default_str();
  add_common(sweep_cmd);

  std::string step = "1/50", threshold = "6/5";
  std::vector<std::int64_t> line;
  auto* region_cmd = app.add_subcommand("region-dump", "grid points far from Lambda, as CSV");
  region_cmd->add_option("--step", step)->capture_default_str();
  region_cmd->add_option("--threshold", threshold)->capture_default_str();
  region_cmd->add_option("--line", line)->expected(3);
  add_common(region_cmd);

  std::string scale = "desk", expected_path, only;
  auto* verify_cmd = app.add_subcommand("verify-all", "every stage, with a run manifest");
  verify_cmd->add_option("--scale", scale)->capture_default_str();
  verify_cmd->add_option("--expected", expected_path, "JSON file of expected stage values");
  verify_cmd->add_option("--only", only, "comma-separated stages");
  add_common(verify_cmd);

  std::string manifest_path;
  auto* man_cmd = app.add_subcommand("check-manifest", "recompute the digests in a manifest");
  man_cmd->add_option("file", manifest_path)->required();

  auto* final_cmd = app.add_subcommand("final-report", "closing inequality chain");
  add_common(final_cmd);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(p, q, r, c, out);
    if (*batch_cmd) return cmd_batch(max_param, c, out);
    if (*replay_cmd) return cmd_replay(replay_path, out, err);
    if (*jac_cmd) return cmd_jacobsthal(jn, c, out);
    if (*mom_cmd) return cmd_moments(c, out);
    if (*hyp_cmd) return cmd_hyperplanes(height, budget, special_max, c, out);
    if (*sweep_cmd) return cmd_sweep(profile, p_lo, p_hi, c, args, out);
    if (*region_cmd) {
      RegionDumpOptions opts;
      opts.step = parse_rational(step);
      opts.threshold = parse_rational(threshold);
      if (!line.empty()) opts.line = Int3{line[0], line[1], line[2]};
      if (c.out_path.empty()) {
        region_dump(opts, out);
      } else {
        std::ofstream f(c.out_path, std::ios::binary);
        if (!f) throw InputError("cannot write " + c.out_path);
        const auto counts = region_dump(opts, f);
        out << counts.grid_rows << " of " << counts.grid_points << " grid points written\n";
      }
      return kExitOk;
    }
    if (*verify_cmd) return cmd_verify_all(scale, expected_path, only, c, args, out, err);
    if (*man_cmd) return cmd_check_manifest(manifest_path, out);
    if (*final_cmd) return cmd_final_report(c, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitInput;
}

}  // namespace tricert
