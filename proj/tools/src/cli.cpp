#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "hookvan/abacus.hpp"
#include "hookvan/blocks.hpp"
#include "hookvan/characters.hpp"
#include "hookvan/errors.hpp"
#include "hookvan/sym_groups.hpp"
#include "hookvan/vanishing.hpp"
#include "hookvan/verify.hpp"

namespace hookvan::cli {

namespace {

using nlohmann::json;

struct Output {
  json data;
  std::string text;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int code = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void render(const Output& o, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << o.data.dump(2) << "\n";
      return;
    case Format::Csv: {
      auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
        out << "\n";
      };
      line(o.header);
      for (const auto& r : o.rows) line(r);
      return;
    }
    case Format::Text:
      out << o.text;
      if (!o.text.empty() && o.text.back() != '\n') out << "\n";
      return;
  }
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("format must be text, json or csv, got '" + s + "'");
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw UsageError("setting " + key + " expects an integer, got '" + value + "'");
  }
  return out;
}

std::string normalize_key(std::string key) {
  for (char& ch : key) {
    if (ch == '-') ch = '_';
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return key;
}

void apply_setting(Config& cfg, const std::string& raw_key, const std::string& value) {
  const std::string key = normalize_key(raw_key);
  if (key == "n_max") {
    cfg.n_max = parse_number<int>(key, value);
  } else if (key == "brute_force_bound") {
    cfg.brute_force_bound = parse_number<int>(key, value);
  } else if (key == "cache_cap") {
    cfg.cache_cap = parse_number<std::int64_t>(key, value);
  } else if (key == "format") {
    cfg.format = parse_format(value);
  } else if (key == "workers") {
    cfg.workers = parse_number<int>(key, value);
  } else if (key == "time_budget_ms") {
    cfg.time_budget_ms = parse_number<std::int64_t>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else {
    throw UsageError("unknown setting '" + raw_key + "'");
  }
}

constexpr const char* kSettingKeys[] = {"n_max",   "brute_force_bound", "cache_cap", "format",
                                        "workers", "time_budget_ms",    "seed"};

void apply_config_file(Config& cfg, const std::string& path) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigBase().from_file(path);
  } catch (const CLI::Error& e) {
    throw UsageError("cannot read config file '" + path + "': " + e.what());
  }
  for (const auto& item : items) {
    if (item.inputs.size() != 1) throw UsageError("setting " + item.fullname() + " needs one value");
    apply_setting(cfg, item.name, item.inputs.front());
  }
}

void apply_environment(Config& cfg) {
  for (const char* key : kSettingKeys) {
    std::string name = "HOOKVAN_";
    for (const char* c = key; *c; ++c) name += static_cast<char>(std::toupper(static_cast<unsigned char>(*c)));
    if (const char* value = std::getenv(name.c_str())) apply_setting(cfg, key, value);
  }
}

void validate(const Config& cfg) {
  if (cfg.n_max < 0) throw UsageError("n_max must be positive");
  if (cfg.brute_force_bound < 1) throw UsageError("brute_force_bound must be positive");
  if (cfg.cache_cap < 1) throw UsageError("cache_cap must be positive");
  if (cfg.workers < 0) throw UsageError("workers must be non-negative (0 uses every core)");
  if (cfg.time_budget_ms < 0) throw UsageError("time_budget_ms must be non-negative");
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

SessionOptions session_options(const Config& cfg) {
  return SessionOptions{static_cast<std::size_t>(cfg.cache_cap)};
}

// ---------------------------------------------------------------- commands

Output cmd_degree(const Partition& lam, bool alt) {
  const BigInt d = alt ? alt_degree(lam) : degree(lam);
  Output o;
  o.data = {{"partition", lam.str()}, {"group", alt ? "A" : "S"}, {"degree", d.str()}};
  o.text = d.str();
  o.header = {"partition", "group", "degree"};
  o.rows = {{lam.str(), alt ? "A" : "S", d.str()}};
  return o;
}

Output cmd_value(const Partition& lam, const CycleType& t, const Config& cfg) {
  CharacterSession session(session_options(cfg));
  const BigInt v = session.value(lam, t);
  Output o;
  o.data = {{"partition", lam.str()}, {"type", t.str()}, {"value", v.str()}};
  o.text = v.str();
  o.header = {"partition", "type", "value"};
  o.rows = {{lam.str(), t.str(), v.str()}};
  return o;
}

Output cmd_core(const Partition& lam, int e) {
  const CoreQuotient cq = core_and_quotient(lam, e);
  Output o;
  o.data = {{"partition", lam.str()}, {"e", e}, {"core", cq.core.str()}, {"weight", cq.weight}};
  o.text = cq.core.str();
  o.header = {"partition", "e", "core", "weight"};
  o.rows = {{lam.str(), std::to_string(e), cq.core.str(), std::to_string(cq.weight)}};
  return o;
}

Output cmd_quotient(const Partition& lam, int e) {
  const CoreQuotient cq = core_and_quotient(lam, e);
  std::vector<std::string> parts;
  for (const auto& q : cq.quotient) parts.push_back(q.str());
  Output o;
  o.data = {{"partition", lam.str()}, {"e", e}, {"core", cq.core.str()}, {"quotient", parts},
            {"weight", cq.weight}};
  o.text = join(parts, " ");
  o.header = {"runner", "component"};
  for (std::size_t r = 0; r < parts.size(); ++r) o.rows.push_back({std::to_string(r), parts[r]});
  return o;
}

Output cmd_tower(const Partition& lam, int e) {
  const CoreTower tower = core_tower(lam, e);
  Output o;
  o.data = tower_to_json(tower);
  o.data["partition"] = lam.str();
  o.header = {"layer", "position", "entry"};
  std::ostringstream text;
  for (std::size_t k = 0; k < tower.layers.size(); ++k) {
    std::vector<std::string> entries;
    for (std::size_t j = 0; j < tower.layers[k].size(); ++j) {
      entries.push_back(tower.layers[k][j].str());
      o.rows.push_back({std::to_string(k), std::to_string(j), entries.back()});
    }
    text << "layer " << k << ": " << join(entries, " ") << "\n";
  }
  o.text = text.str();
  return o;
}

Output weights_output(const Partition& lam, int base, const std::map<int, int>& w) {
  Output o;
  json weights = json::object();
  std::ostringstream text;
  o.header = {"length", "weight"};
  for (auto [i, v] : w) {
    const std::string len = std::to_string(ipow(base, i));
    weights[len] = v;
    text << "w_" << len << " = " << v << "\n";
    o.rows.push_back({len, std::to_string(v)});
  }
  o.data = {{"partition", lam.str()}, {"base", base}, {"weights", weights}};
  o.text = text.str();
  return o;
}

Output cmd_weights(const Partition& lam, int e) {
  if (e < 2) throw DomainError("e must be at least 2");
  return weights_output(lam, e, prime_power_weights(lam, e));
}

Output cmd_block(const Partition& lam, int p, bool alt) {
  const BlockData b = alt ? block_data_alt(lam, p) : block_data_sym(lam, p);
  Output o;
  o.data = block_to_json(b);
  o.data["partition"] = lam.str();
  o.data["group"] = std::string(group_letter(b.group.kind));
  o.data["p"] = p;
  o.data["sylow_log"] = b.sylow_log;
  std::ostringstream text;
  text << "core: " << b.core.str() << "\nweight: " << b.weight << "\ndefect: " << b.defect
       << "\nheight: " << b.height << "\nnu_p_degree: " << b.nu_p_degree << "\nsylow_log: " << b.sylow_log
       << "\n";
  o.text = text.str();
  o.header = {"partition", "group", "p", "core", "weight", "defect", "height", "nu_p_degree", "sylow_log"};
  o.rows = {{lam.str(), std::string(group_letter(b.group.kind)), std::to_string(p), b.core.str(),
             std::to_string(b.weight), std::to_string(b.defect), std::to_string(b.height),
             std::to_string(b.nu_p_degree), std::to_string(b.sylow_log)}};
  return o;
}

VanishingProfile make_profile(const Partition& lam, int p, bool alt, CharacterSession& session) {
  return alt ? profile_alt(lam, p, session) : profile_sym(lam, p, session);
}

Output cmd_profile(const Partition& lam, int p, bool alt, const Config& cfg) {
  CharacterSession session(session_options(cfg));
  const VanishingProfile profile = make_profile(lam, p, alt, session);
  Output o;
  o.data = profile_to_json(profile);
  o.data["partition"] = lam.str();
  std::ostringstream text;
  text << "zeros: " << profile.zero_types.size() << " of " << profile.universe_size << "\n";
  for (const auto& t : profile.zero_types) text << t.str() << "\n";
  o.text = text.str();
  o.header = {"type", "vanishes"};
  for (const auto& t : profile_universe(profile.ctx)) {
    o.rows.push_back({t.str(), profile.zero_types.contains(t) ? "1" : "0"});
  }
  return o;
}

Output cmd_recover_weights(const Partition& lam, int p, const Config& cfg) {
  CharacterSession session(session_options(cfg));
  return weights_output(lam, p, recover_weights_sym(profile_sym(lam, p, session)));
}

std::string options_text(const TwoOptions& o) {
  std::string out = "{" + std::to_string(o.first) + ", " + std::to_string(o.second) + "}";
  if (o.pinned) out += " pinned " + std::to_string(*o.pinned);
  return out;
}

Output cmd_alt_estimate(const Partition& lam, const Config& cfg) {
  CharacterSession session(session_options(cfg));
  const WeightEstimates est = estimate_weights_alt(profile_alt(lam, 2, session));
  const AltDataReport report = determine_alt_data(est, lam.size());
  Output o;
  o.data = {{"partition", lam.str()}, {"estimates", estimates_to_json(est)},
            {"report", alt_report_to_json(report)}};
  std::ostringstream text;
  for (auto [i, w] : est.w_hat) {
    text << "w_hat_" << ipow(2, i) << " = " << w << " (unimproved " << est.w_hat0.at(i) << ")\n";
  }
  text << "nu_hat = " << est.nu_hat << "\nd_hat = " << est.d_hat << "\nh_hat = " << est.h_hat << "\n";
  const json& degree_options = o.data["report"]["nu_degree"]["two_part_options"];
  text << "degree 2-part in {" << degree_options[0].get<std::string>() << ", "
       << degree_options[1].get<std::string>() << "}";
  if (report.nu_degree.pinned) text << " pinned nu = " << *report.nu_degree.pinned;
  text << "\ndefect in " << options_text(report.defect) << "\nheight in " << options_text(report.height) << "\n";
  o.text = text.str();
  o.header = {"statistic", "first", "second", "pinned"};
  auto row = [&](const char* name, const TwoOptions& t) {
    o.rows.push_back({name, std::to_string(t.first), std::to_string(t.second),
                      t.pinned ? std::to_string(*t.pinned) : ""});
  };
  row("nu_degree", report.nu_degree);
  row("defect", report.defect);
  row("height", report.height);
  return o;
}

Output cmd_compare(const Partition& lam, const Partition& mu, int p, bool alt, const Config& cfg) {
  CharacterSession session(session_options(cfg));
  const ProfileComparison cmp =
      compare_profiles(make_profile(lam, p, alt, session), make_profile(mu, p, alt, session));
  const int nu_l = valuation(alt ? alt_degree(lam) : degree(lam), p);
  const int nu_m = valuation(alt ? alt_degree(mu) : degree(mu), p);
  const bool holds = cmp.implication_holds(nu_l, nu_m);
  const bool strict = cmp.strict_analogue_holds(nu_l, nu_m);
  const std::string rel(relation_name(cmp.relation));
  Output o;
  o.data = {{"lambda", lam.str()},      {"mu", mu.str()},
            {"group", alt ? "A" : "S"}, {"p", p},
            {"relation", rel},          {"mandated", cmp.mandated()},
            {"nu_lambda", nu_l},        {"nu_mu", nu_m},
            {"implication_holds", holds}, {"strict_analogue_holds", strict}};
  std::ostringstream text;
  text << "relation: " << rel << "\nmandated: " << cmp.mandated() << "\nnu_p: " << nu_l << " " << nu_m
       << "\nholds: " << (holds ? "yes" : "no") << "\nstrict analogue holds: " << (strict ? "yes" : "no")
       << "\n";
  o.text = text.str();
  o.header = {"lambda", "mu", "group", "p", "relation", "nu_lambda", "nu_mu", "holds", "strict"};
  o.rows = {{lam.str(), mu.str(), alt ? "A" : "S", std::to_string(p), rel, std::to_string(nu_l),
             std::to_string(nu_m), holds ? "1" : "0", strict ? "1" : "0"}};
  return o;
}

Output cmd_vanpow(const Partition& lam, bool alt, const Config& cfg) {
  CharacterSession session(session_options(cfg));
  const auto zeros = van_pow(lam, alt ? GroupKind::Alt : GroupKind::Sym, session);
  Output o;
  std::vector<std::string> types;
  for (const auto& t : zeros) types.push_back(t.str());
  o.data = {{"partition", lam.str()}, {"group", alt ? "A" : "S"}, {"zeros", types}};
  o.text = join(types, "\n");
  o.header = {"type"};
  for (const auto& t : types) o.rows.push_back({t});
  return o;
}

SweepConfig sweep_config(const Config& cfg, const std::vector<int>& primes) {
  SweepConfig sc;
  if (cfg.n_max > 0) sc.n_max = cfg.n_max;
  if (!primes.empty()) sc.primes = primes;
  sc.workers = cfg.workers;
  sc.seed = cfg.seed;
  sc.cache_cap = static_cast<std::size_t>(cfg.cache_cap);
  sc.time_budget_ms = cfg.time_budget_ms;
  sc.brute_force_bound = cfg.brute_force_bound;
  return sc;
}

Output reports_output(const std::vector<SweepReport>& reports) {
  Output o;
  o.header = {"theorem", "n_min", "n_max", "primes", "instances", "failures", "wall_ms", "partial", "ok"};
  json all = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    o.text += r.to_text();
    all.push_back(report_to_json(r));
    std::vector<std::string> primes;
    for (int p : r.primes) primes.push_back(std::to_string(p));
    o.rows.push_back({r.theorem, std::to_string(r.n_min), std::to_string(r.n_max), join(primes, " "),
                      std::to_string(r.instances), std::to_string(r.failures.size()),
                      std::to_string(r.wall_ms), r.partial ? "1" : "0", r.ok() ? "1" : "0"});
    ok = ok && r.ok();
  }
  o.data = reports.size() == 1 ? all.front() : json{{"reports", all}, {"ok", ok}};
  if (!ok) o.code = kSweepFailure;
  return o;
}

Output cmd_verify(const std::string& id, const std::vector<int>& primes, const Config& cfg) {
  const SweepConfig sc = sweep_config(cfg, primes);
  std::vector<SweepReport> reports;
  if (id == "all") {
    for (const auto& s : sweep_ids()) reports.push_back(run_sweep(s, sc));
  } else {
    reports.push_back(run_sweep(id, sc));
  }
  return reports_output(reports);
}

Output cmd_examples(const Config& cfg) { return reports_output({reproduce_examples(sweep_config(cfg, {}))}); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character degrees, blocks and vanishing profiles of symmetric and alternating groups",
               "hookvan"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> format_flag;
  std::optional<int> n_max_flag;
  std::optional<int> workers_flag;
  std::optional<std::int64_t> cache_cap_flag;
  std::optional<int> bound_flag;
  std::optional<std::int64_t> budget_flag;
  std::optional<std::uint64_t> seed_flag;
  std::string config_path;
  app.add_option("--format", format_flag, "Output format: text, json or csv");
  app.add_option("--n-max", n_max_flag, "Largest n for sweeps (default: per sweep)");
  app.add_option("--workers", workers_flag, "Sweep worker threads, 0 for one per core (default 1)");
  app.add_option("--cache-cap", cache_cap_flag, "Character memo entries kept (default 1048576)");
  app.add_option("--brute-force-bound", bound_flag, "Largest n for brute-force oracles (default 8)");
  app.add_option("--time-budget-ms", budget_flag, "Sweep time budget in ms, 0 for none (default 0)");
  app.add_option("--seed", seed_flag, "Seed for sampled checks (default 1)");
  app.add_option("--config", config_path, "File of key=value settings");

  std::string lam_text;
  std::string mu_text;
  std::string type_text;
  int modulus = 0;
  bool alt = false;
  std::string theorem;
  std::vector<int> primes;
  std::function<Output(const Config&)> action;

  auto partition_arg = [](CLI::App* sub, std::string& target, const char* name) {
    sub->add_option(name, target, "Partition, e.g. 6,3,3,2 or 3^2,1 or - for the empty one")->required();
  };
  auto lam = [&] { return Partition::parse(lam_text); };

  auto* degree_cmd = app.add_subcommand("degree", "Degree by the hook length formula");
  partition_arg(degree_cmd, lam_text, "lambda");
  degree_cmd->add_flag("--alt", alt, "Degree of an A_n constituent");
  degree_cmd->callback([&] { action = [&](const Config&) { return cmd_degree(lam(), alt); }; });

  auto* value_cmd = app.add_subcommand("value", "Character value by the Murnaghan-Nakayama rule");
  partition_arg(value_cmd, lam_text, "lambda");
  value_cmd->add_option("type", type_text, "Cycle type, any order")->required();
  value_cmd->callback(
      [&] { action = [&](const Config& c) { return cmd_value(lam(), CycleType::parse(type_text), c); }; });

  auto* core_cmd = app.add_subcommand("core", "e-core and e-weight");
  partition_arg(core_cmd, lam_text, "lambda");
  core_cmd->add_option("e", modulus, "Hook length e >= 2")->required();
  core_cmd->callback([&] { action = [&](const Config&) { return cmd_core(lam(), modulus); }; });

  auto* quotient_cmd = app.add_subcommand("quotient", "e-quotient in runner order");
  partition_arg(quotient_cmd, lam_text, "lambda");
  quotient_cmd->add_option("e", modulus, "Hook length e >= 2")->required();
  quotient_cmd->callback([&] { action = [&](const Config&) { return cmd_quotient(lam(), modulus); }; });

  auto* tower_cmd = app.add_subcommand("tower", "e-core tower, one layer per line");
  partition_arg(tower_cmd, lam_text, "lambda");
  tower_cmd->add_option("e", modulus, "Hook length e >= 2")->required();
  tower_cmd->callback([&] { action = [&](const Config&) { return cmd_tower(lam(), modulus); }; });

  auto* weights_cmd = app.add_subcommand("weights", "Weights w_{e^i} for e^i <= n");
  partition_arg(weights_cmd, lam_text, "lambda");
  weights_cmd->add_option("e", modulus, "Base e >= 2")->required();
  weights_cmd->callback([&] { action = [&](const Config&) { return cmd_weights(lam(), modulus); }; });

  auto* block_cmd = app.add_subcommand("block", "p-block data: core, weight, defect, height");
  partition_arg(block_cmd, lam_text, "lambda");
  block_cmd->add_option("p", modulus, "Prime")->required();
  block_cmd->add_flag("--alt", alt, "Block of the A_n constituent");
  block_cmd->callback([&] { action = [&](const Config&) { return cmd_block(lam(), modulus, alt); }; });

  auto* profile_cmd = app.add_subcommand("profile", "Zeros on p-power cycle types");
  partition_arg(profile_cmd, lam_text, "lambda");
  profile_cmd->add_option("p", modulus, "Prime")->required();
  profile_cmd->add_flag("--alt", alt, "Even types only (A_n)");
  profile_cmd->callback(
      [&] { action = [&](const Config& c) { return cmd_profile(lam(), modulus, alt, c); }; });

  auto* recover_cmd = app.add_subcommand("recover-weights", "Weights read back from the p-profile");
  partition_arg(recover_cmd, lam_text, "lambda");
  recover_cmd->add_option("p", modulus, "Prime")->required();
  recover_cmd->callback(
      [&] { action = [&](const Config& c) { return cmd_recover_weights(lam(), modulus, c); }; });

  auto* estimate_cmd = app.add_subcommand("alt-estimate", "A_n weight estimates and data options at p = 2");
  partition_arg(estimate_cmd, lam_text, "lambda");
  estimate_cmd->callback([&] { action = [&](const Config& c) { return cmd_alt_estimate(lam(), c); }; });

  auto* compare_cmd = app.add_subcommand("compare", "Compare two p-profiles and the forced inequality");
  partition_arg(compare_cmd, lam_text, "lambda");
  partition_arg(compare_cmd, mu_text, "mu");
  compare_cmd->add_option("p", modulus, "Prime")->required();
  compare_cmd->add_flag("--alt", alt, "Compare A_n profiles");
  compare_cmd->callback([&] {
    action = [&](const Config& c) { return cmd_compare(lam(), Partition::parse(mu_text), modulus, alt, c); };
  });

  auto* vanpow_cmd = app.add_subcommand("vanpow", "Zeros on prime-power cycle types, all primes");
  partition_arg(vanpow_cmd, lam_text, "lambda");
  vanpow_cmd->add_flag("--alt", alt, "Even types only (A_n)");
  vanpow_cmd->callback([&] { action = [&](const Config& c) { return cmd_vanpow(lam(), alt, c); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive sweep, or all of them");
  verify_cmd->add_option("theorem", theorem, "Sweep id or 'all'")
      ->required()
      ->check(CLI::IsMember([] {
        std::vector<std::string> ids = sweep_ids();
        ids.push_back("all");
        return ids;
      }()));
  verify_cmd->add_option("--primes", primes, "Moduli for the sweep, e.g. --primes 2 3")->delimiter(',');
  verify_cmd->callback([&] { action = [&](const Config& c) { return cmd_verify(theorem, primes, c); }; });

  auto* examples_cmd = app.add_subcommand("examples", "Replay the worked examples and the A_n pair table");
  examples_cmd->callback([&] { action = [&](const Config& c) { return cmd_examples(c); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Config cfg;
  try {
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    apply_environment(cfg);
    if (format_flag) cfg.format = parse_format(*format_flag);
    if (n_max_flag) cfg.n_max = *n_max_flag;
    if (workers_flag) cfg.workers = *workers_flag;
    if (cache_cap_flag) cfg.cache_cap = *cache_cap_flag;
    if (bound_flag) cfg.brute_force_bound = *bound_flag;
    if (budget_flag) cfg.time_budget_ms = *budget_flag;
    if (seed_flag) cfg.seed = *seed_flag;
    validate(cfg);
    const Output o = action(cfg);
    render(o, cfg.format, out);
    return o.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace hookvan::cli
