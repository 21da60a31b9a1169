#include "commlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "commlab/braid.hpp"
#include "commlab/homotopy.hpp"
#include "commlab/reports.hpp"
#include "commlab/trials.hpp"

namespace commlab {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out_dir = "reports";
  std::string format = "text";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out_dir, "Report directory (empty disables writing)")->capture_default_str();
  sub->add_option("--format", c.format, "Console output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void emit(const Common& c, std::ostream& out, const std::string& subcommand, std::uint64_t seed,
          const Json& payload, const Json& timing, const std::string& text) {
  if (c.format == "json")
    out << payload.dump(2) << "\n";
  else
    out << text;
  if (!c.out_dir.empty()) {
    const auto path = write_report(c.out_dir, subcommand, seed, payload, timing);
    if (c.format == "text") out << "report " << path.string() << "\n";
  }
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

// ---- verify-finite ---------------------------------------------------------

struct FiniteConfig {
  std::size_t trials = 200;
  int n = 0;
  std::uint64_t seed = 7;
  int weight_cap = 0;
  std::size_t max_order = 2000;
  int max_degree = 10;
  std::size_t triples = 0;
  std::uint64_t budget = 0;
};

int cmd_verify_finite(const FiniteConfig& cfg, const Common& common, std::ostream& out) {
  if (cfg.n < 0 || cfg.n > 4) throw UsageError("--n must be 0 (mixed 2/3) or in 1..4");
  if (cfg.max_degree < 3 || cfg.max_degree > 16) throw UsageError("--max-degree must be in 3..16");
  if (cfg.max_order < 2 || cfg.max_order > 20000) throw UsageError("--max-order must be in 2..20000");
  if (cfg.weight_cap < 0 || (cfg.weight_cap > 0 && cfg.weight_cap < std::max(cfg.n, 1)))
    throw UsageError("--weight-cap must be 0 (meaning 2n) or at least n");
  if (cfg.weight_cap > 0 && cfg.n == 0 && cfg.weight_cap < 3)
    throw UsageError("--weight-cap must be at least 3 when n is mixed");

  TrialOptions opts;
  opts.instance.n = cfg.n;
  opts.instance.max_order = cfg.max_order;
  opts.instance.max_degree = cfg.max_degree;
  opts.weight_cap = cfg.weight_cap;
  opts.budget = cfg.budget > 0 ? cfg.budget : default_fat_budget();

  const auto start = std::chrono::steady_clock::now();
  const auto trials = run_finite_trials(cfg.seed, cfg.trials, opts);
  const auto triples = run_triple_trials(cfg.seed, cfg.triples, opts);
  const double total_ms = ms_since(start);

  std::size_t passed = 0, inconclusive = 0, conn_checked = 0, conn_held = 0, conn_connected = 0;
  Json rows = Json::array(), timing_rows = Json::array();
  std::ostringstream text;
  text << "verify-finite seed=" << cfg.seed << " trials=" << cfg.trials << " n="
       << (cfg.n ? std::to_string(cfg.n) : std::string("mixed")) << " weight_cap="
       << (cfg.weight_cap ? std::to_string(cfg.weight_cap) : std::string("2n")) << "\n";
  if (!trials.empty())
    text << std::left << std::setw(22) << "seed" << std::setw(7) << "deg" << std::setw(7) << "|G|"
         << std::setw(3) << "n" << std::setw(16) << "orders" << std::setw(14) << "fat=sym" << std::setw(8)
         << "fix1" << "conn\n";
  for (const auto& t : trials) {
    if (t.pass()) ++passed;
    if (t.fat_vs_symmetric.verdict == Verdict::inconclusive) ++inconclusive;
    conn_checked += t.connectivity.checked;
    conn_held += t.connectivity.held;
    conn_connected += t.connectivity.connected ? 1 : 0;
    rows.push_back(to_json(t));
    timing_rows.push_back(t.elapsed_ms);
    text << std::left << std::setw(22) << t.seed << std::setw(7) << t.degree << std::setw(7) << t.group_order
         << std::setw(3) << t.n << std::setw(16) << join_sizes(t.subgroup_orders) << std::setw(14)
         << to_string(t.fat_vs_symmetric.verdict) << std::setw(8) << to_string(t.fix_first.verdict)
         << t.connectivity.held << "/" << t.connectivity.checked << "\n";
  }
  std::size_t triples_passed = 0;
  Json triple_rows = Json::array(), triple_timing = Json::array();
  for (const auto& t : triples) {
    if (t.pass()) ++triples_passed;
    triple_rows.push_back(to_json(t));
    triple_timing.push_back(t.elapsed_ms);
  }
  const std::size_t failed = cfg.trials - passed - inconclusive;
  text << "summary pass=" << passed << "/" << cfg.trials << " inconclusive=" << inconclusive
       << " fail=" << failed << " connectivity_held=" << conn_held << "/" << conn_checked;
  if (cfg.triples) text << " triples_pass=" << triples_passed << "/" << cfg.triples;
  text << "\n";

  Json payload{{"config",
                {{"trials", cfg.trials},
                 {"n", cfg.n},
                 {"weight_cap", cfg.weight_cap},
                 {"max_order", cfg.max_order},
                 {"max_degree", cfg.max_degree},
                 {"triples", cfg.triples},
                 {"budget", opts.budget}}},
               {"summary",
                {{"trials", cfg.trials},
                 {"pass", passed},
                 {"inconclusive", inconclusive},
                 {"fail", failed},
                 {"connectivity", {{"checked", conn_checked}, {"held", conn_held}, {"connected_instances", conn_connected}}},
                 {"triples", cfg.triples},
                 {"triples_pass", triples_passed}}},
               {"trials", rows},
               {"triple_trials", triple_rows}};
  Json timing{{"timestamp", utc_timestamp()},
              {"total_ms", total_ms},
              {"trial_elapsed_ms", timing_rows},
              {"triple_elapsed_ms", triple_timing}};
  emit(common, out, "verify-finite", cfg.seed, payload, timing, text.str());
  return passed == cfg.trials && triples_passed == cfg.triples ? kExitPass : kExitFail;
}

// ---- brunnian --------------------------------------------------------------

struct BrunnianConfig {
  int n = 4;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  int conj_depth = 4;
  std::optional<std::string> check;
  int strands = 0;
  std::string corpus;
};

int cmd_brunnian(const BrunnianConfig& cfg, const Common& common, std::ostream& out) {
  if (cfg.conj_depth < 0) throw UsageError("--conj-depth must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  if (cfg.check) {
    int strands = cfg.strands;
    if (strands == 0) {
      // Infer from the largest generator; parse once with a generous bound.
      const Braid probe = parse_braid(*cfg.check, 64);
      strands = std::max(2, probe.word().max_index() + 1);
    }
    if (strands < 1 || strands > 64) throw UsageError("--strands must be in 1..64");
    const Braid b = parse_braid(*cfg.check, strands);
    const bool pure = is_pure(b);
    const bool brunnian = is_brunnian(b);
    Json payload{{"mode", "check"},
                 {"braid", render_braid(b)},
                 {"strands", strands},
                 {"pure", pure},
                 {"brunnian", brunnian}};
    std::ostringstream text;
    text << "braid \"" << render_braid(b) << "\" strands=" << strands << " pure=" << std::boolalpha << pure
         << " brunnian=" << brunnian << "\n";
    emit(common, out, "brunnian", cfg.seed, payload,
         Json{{"timestamp", utc_timestamp()}, {"total_ms", ms_since(start)}}, text.str());
    return brunnian ? kExitPass : kExitFail;
  }

  if (cfg.n < 2 || cfg.n > 12) throw UsageError("--n must be in 2..12");
  const auto braids = sample_brun_generators(cfg.n, cfg.conj_depth, cfg.seed, cfg.samples);
  std::size_t brunnian = 0, max_len = 0, total_len = 0;
  Json failures = Json::array();
  for (std::size_t k = 0; k < braids.size(); ++k) {
    const bool ok = is_brunnian(braids[k]);
    if (ok)
      ++brunnian;
    else
      failures.push_back(k);
    max_len = std::max(max_len, braids[k].length());
    total_len += braids[k].length();
  }
  if (!cfg.corpus.empty()) {
    std::ostringstream corpus;
    write_brunnian_corpus(corpus, cfg.n, cfg.seed, braids);
    write_atomically(cfg.corpus, corpus.str());
  }
  Json payload{{"mode", "sample"},
               {"strands", cfg.n},
               {"conj_depth", cfg.conj_depth},
               {"samples", cfg.samples},
               {"brunnian", brunnian},
               {"max_length", max_len},
               {"total_length", total_len},
               {"failed_samples", failures}};
  std::ostringstream text;
  text << "brunnian strands=" << cfg.n << " seed=" << cfg.seed << " conj_depth=" << cfg.conj_depth
       << " max_length=" << max_len << "\n"
       << "summary brunnian=" << brunnian << "/" << cfg.samples << "\n";
  emit(common, out, "brunnian", cfg.seed, payload,
       Json{{"timestamp", utc_timestamp()}, {"total_ms", ms_since(start)}}, text.str());
  return brunnian == cfg.samples ? kExitPass : kExitFail;
}

// ---- homotopy --------------------------------------------------------------

struct HomotopyConfig {
  int pi = 0;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 3;
  int conj_depth = 4;
  std::size_t fuzz = 1000;
};

int cmd_homotopy(const HomotopyConfig& cfg, const Common& common, std::ostream& out) {
  if (cfg.pi != 2 && cfg.pi != 3) throw UsageError("unsupported: certificates implemented for n ≤ 3");
  if (cfg.conj_depth < 0) throw UsageError("--conj-depth must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  Json payload;
  bool holds = false;
  std::ostringstream text;
  if (cfg.pi == 2) {
    const Pi2Report r = pi2_check(cfg.seed, cfg.fuzz, cfg.samples.value_or(200), cfg.conj_depth);
    payload = to_json(r);
    holds = r.holds;
    text << "pi2 sphere m=2 seed=" << cfg.seed << "\n"
         << "elements in R1 and R2: " << r.elements_in_both << "/" << r.elements_checked << "\n"
         << "trivial commutators: " << r.commutators_trivial << "/" << r.commutators_checked << "\n"
         << "quotient_rank=" << r.quotient_rank << " holds=" << std::boolalpha << holds << "\n";
  } else {
    const Pi3Certificate c = pi3_certificate(cfg.seed, cfg.samples.value_or(500), cfg.conj_depth);
    payload = to_json(c);
    holds = c.holds;
    text << "pi3 sphere m=3 partition=" << c.partition << " seed=" << cfg.seed << "\n"
         << "witness " << to_string(c.witness) << " in_intersection=" << std::boolalpha
         << c.witness_in_intersection << " gamma_level=" << c.witness_gamma_level << "\n"
         << "samples in intersection: " << c.samples_in_intersection << "/" << c.samples << "\n"
         << "samples in gamma3: " << c.samples_in_gamma3 << "/" << c.samples << "\n"
         << "certificate holds=" << holds << "\n";
  }
  payload["pi"] = cfg.pi;
  emit(common, out, "homotopy", cfg.seed, payload,
       Json{{"timestamp", utc_timestamp()}, {"total_ms", ms_since(start)}}, text.str());
  return holds ? kExitPass : kExitFail;
}

// ---- braid-tools -----------------------------------------------------------

struct BraidToolsConfig {
  bool identities = false;
  int max_n = 6;
  std::vector<std::string> print;
};

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("expected an integer, got '" + s + "'");
}

int cmd_braid_tools(const BraidToolsConfig& cfg, const Common& common, std::ostream& out) {
  if (!cfg.identities && cfg.print.empty()) throw UsageError("braid-tools needs --identities or --print");
  if (!cfg.print.empty()) {
    const std::string& kind = cfg.print[0];
    std::vector<int> a;
    for (std::size_t k = 1; k < cfg.print.size(); ++k) a.push_back(parse_int(cfg.print[k]));
    try {
      if (kind == "A" && a.size() == 3) {
        out << render_braid(gen_A(a[0], a[1], a[2])) << "\n";
      } else if (kind == "t" && a.size() == 2) {
        out << render_braid(gen_t(a[0], a[1])) << "\n";
      } else if (kind == "A0" && a.size() == 2) {
        const A0Forms f = gen_A0(a[0], a[1]);
        out << "product: " << render_braid(f.product_form) << "\n"
            << "sigma: " << render_braid(f.sigma_form) << "\n";
      } else {
        throw UsageError("--print expects 'A i j n', 't i n' or 'A0 j n'");
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (!cfg.identities) return kExitPass;
  }

  if (cfg.max_n < 2 || cfg.max_n > 10) throw UsageError("--max-n must be in 2..10");
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0, held = 0;
  Json rows = Json::array();
  std::ostringstream text;
  for (int n = 2; n <= cfg.max_n; ++n) {
    for (int j = 1; j <= n; ++j) {
      const A0Forms f = gen_A0(j, n);
      const bool ok = is_pure(f.product_form) && is_pure(f.sigma_form) &&
                      artin_action(f.product_form) == artin_action(f.sigma_form);
      ++checked;
      held += ok;
      rows.push_back({{"identity", "A0_forms"}, {"j", j}, {"n", n}, {"holds", ok}});
      if (!ok) text << "FAIL A0 forms j=" << j << " n=" << n << "\n";
    }
    for (int i = 1; i <= n - 1; ++i) {
      const bool ok = artin_action(gen_t(i, n)) == artin_action(gen_A(i, n, n));
      ++checked;
      held += ok;
      rows.push_back({{"identity", "t_equals_A"}, {"i", i}, {"n", n}, {"holds", ok}});
      if (!ok) text << "FAIL t = A i=" << i << " n=" << n << "\n";
    }
  }
  text << "braid identities max_n=" << cfg.max_n << "\nsummary holds=" << held << "/" << checked << "\n";
  Json payload{{"max_n", cfg.max_n}, {"checked", checked}, {"held", held}, {"identities", rows}};
  emit(common, out, "braid-tools", 0, payload, Json{{"timestamp", utc_timestamp()}, {"total_ms", ms_since(start)}},
       text.str());
  return held == checked ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"commlab: commutator calculus experiments", "commlab"};
  app.require_subcommand(1);

  Common common;
  FiniteConfig finite;
  auto* vf = app.add_subcommand("verify-finite", "Check commutator-subgroup identities in random finite groups");
  vf->add_option("--trials", finite.trials)->capture_default_str();
  vf->add_option("--n", finite.n, "Number of normal subgroups (0 mixes 2 and 3)")->capture_default_str();
  vf->add_option("--seed", finite.seed)->capture_default_str();
  vf->add_option("--weight-cap", finite.weight_cap, "Largest bracket weight (0 means 2n)")->capture_default_str();
  vf->add_option("--max-order", finite.max_order)->capture_default_str();
  vf->add_option("--max-degree", finite.max_degree)->capture_default_str();
  vf->add_option("--triples", finite.triples, "Extra three-subgroup trials")->capture_default_str();
  vf->add_option("--budget", finite.budget, "Evaluation budget (0 uses COMMLAB_BUDGET or 1e7)");
  add_common(vf, common);

  BrunnianConfig brun;
  auto* br = app.add_subcommand("brunnian", "Sample symmetric-commutator braids and test Brunnianness");
  br->add_option("--n", brun.n, "Strands for sampling")->capture_default_str();
  br->add_option("--samples", brun.samples)->capture_default_str();
  br->add_option("--seed", brun.seed)->capture_default_str();
  br->add_option("--conj-depth", brun.conj_depth)->capture_default_str();
  br->add_option("--check", brun.check, "Test one braid word instead of sampling");
  br->add_option("--strands", brun.strands, "Strands for --check (0 infers)");
  br->add_option("--corpus", brun.corpus, "Write sampled braids to this file");
  add_common(br, common);

  HomotopyConfig hom;
  auto* ho = app.add_subcommand("homotopy", "Sphere quotient certificates");
  ho->add_option("--pi", hom.pi, "Homotopy degree (2 or 3)")->required();
  ho->add_option("--samples", hom.samples);
  ho->add_option("--seed", hom.seed)->capture_default_str();
  ho->add_option("--conj-depth", hom.conj_depth)->capture_default_str();
  ho->add_option("--fuzz", hom.fuzz)->capture_default_str();
  add_common(ho, common);

  BraidToolsConfig bt;
  auto* tools = app.add_subcommand("braid-tools", "Print pure braid generators and check their identities");
  tools->add_flag("--identities", bt.identities);
  tools->add_option("--max-n", bt.max_n)->capture_default_str();
  tools->add_option("--print", bt.print, "A i j n | t i n | A0 j n")->expected(3, 4)->allow_extra_args(false);
  add_common(tools, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*vf) return cmd_verify_finite(finite, common, out);
    if (*br) return cmd_brunnian(brun, common, out);
    if (*ho) return cmd_homotopy(hom, common, out);
    if (*tools) return cmd_braid_tools(bt, common, out);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace commlab
