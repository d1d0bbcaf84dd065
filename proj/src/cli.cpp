#include "sumfree/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include <CLI11.hpp>

#include "sumfree/applications.hpp"
#include "sumfree/errors.hpp"
#include "sumfree/interval_ap.hpp"
#include "sumfree/search_oracle.hpp"
#include "sumfree/special_sets.hpp"
#include "sumfree/st_family.hpp"

namespace sumfree::cli {

namespace {

/// Malformed input detected after CLI11 accepted the flags.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  bool pretty = false;
  bool json = false;
  bool fast = false;
  std::optional<std::uint64_t> budget;
  unsigned threads = 0;
};

/// --set / --set-file / --n, shared by every command taking a set.
struct SetInput {
  std::optional<Int> n;
  std::optional<std::string> list;
  std::optional<std::string> file;

  void attach(CLI::App* sub, const std::string& modulus_flag = "--n") {
    sub->add_option(modulus_flag, n, "Modulus");
    auto* list_opt = sub->add_option("--set", list, "Comma-separated residues, e.g. \"0,4,5,6\"");
    auto* file_opt = sub->add_option("--set-file", file, "JSON set document {\"n\":..,\"elements\":[..]}");
    list_opt->excludes(file_opt);
  }

  CyclicSet resolve() const {
    if (file) {
      CyclicSet s = read_set_file(*file);
      if (n && *n != s.modulus())
        throw DomainError("modulus " + std::to_string(*n) + " disagrees with set file modulus " +
                          std::to_string(s.modulus()));
      return s;
    }
    if (!list) throw UsageError("one of --set or --set-file is required");
    if (!n) throw UsageError("--set requires the modulus");
    std::vector<Int> elements;
    try {
      elements = parse_element_list(*list);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return CyclicSet::from_elements(*n, elements);
  }
};

std::optional<std::uint64_t> budget_from_env() {
  const char* raw = std::getenv("SUMFREE_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::uint64_t value = 0;
  const std::string_view text(raw);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("SUMFREE_BUDGET must be a non-negative integer, got \"" + std::string(text) + "\"");
  return value;
}

Json with_properties(const CyclicSet& s) {
  Json out = set_to_json(s);
  out["properties"] = to_json(classify(s));
  return out;
}

Json error_json(const std::string& code, const std::string& message) {
  Json out;
  out["error"]["code"] = code;
  out["error"]["message"] = message;
  return out;
}

std::string command_path(const CLI::App* app) {
  std::string path;
  for (const CLI::App* sub = app; sub->get_parent() != nullptr; sub = sub->get_parent())
    path = path.empty() ? sub->get_name() : sub->get_name() + " " + path;
  return path;
}

}  // namespace

CommandEnvelope dispatch(const std::vector<std::string>& args) {
  CommandEnvelope env;
  GlobalFlags flags;

  CLI::App app{"Symmetric complete sum-free sets in cyclic groups", "sumfree"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", flags.pretty, "Indented JSON output");
  app.add_flag("--json", flags.json, "Compact JSON output (default)");
  app.add_flag("--fast", flags.fast, "Skip re-verification of constructed sets");
  app.add_option("--budget", flags.budget, "Override the enumeration budget (candidate count)");
  app.add_option("--threads", flags.threads, "Worker thread cap (0 = hardware concurrency)");

  // Every leaf command registers a handler; the one whose subcommand parsed runs.
  std::vector<std::pair<CLI::App*, std::function<Json()>>> handlers;
  SearchOptions options;
  auto checked = [&] { return !flags.fast; };

  // verify
  SetInput verify_set;
  auto* verify = app.add_subcommand("verify", "Symmetric / sum-free / complete checks for a set");
  verify_set.attach(verify);
  handlers.emplace_back(verify, [&] { return to_json(classify(verify_set.resolve())); });

  // st build | st equiv
  auto* st = app.add_subcommand("st", "The large construction S_T");
  st->require_subcommand(1);
  Int st_n = 0, st_s = 0;
  std::string st_members;
  auto* st_build = st->add_subcommand("build", "Build S_T for given n, s and T");
  st_build->add_option("--n", st_n, "Modulus")->required();
  st_build->add_option("--s", st_s, "Target size s")->required();
  st_build->add_option("--set", st_members, "T as comma-separated integers in [0, 2t-1]")->required();
  handlers.emplace_back(st_build, [&] {
    const auto params = STParameters::make(st_n, st_s);
    std::vector<Int> members;
    try {
      members = parse_element_list(st_members);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const CyclicSet s = build_st(params, TCandidate(params.t, members));
    Json out = with_properties(s);
    out["t"] = params.t;
    out["theorem_valid"] = params.theorem_valid;
    env.diagnostics["hypotheses_unmet"] = !params.theorem_valid;
    return out;
  });
  auto* st_equiv = st->add_subcommand("equiv", "Check t-special <=> S_T complete sum-free of size s for all T");
  st_equiv->add_option("--n", st_n, "Modulus")->required();
  st_equiv->add_option("--s", st_s, "Target size s")->required();
  handlers.emplace_back(st_equiv, [&] {
    const auto report = verify_st_equivalence(st_n, st_s, options);
    Json out = to_json(report);
    if (!report.counterexamples.empty()) {
      Json failure = error_json("verification_error", "equivalence fails for " +
                                                           std::to_string(report.counterexamples.size()) +
                                                           " candidate(s)");
      failure["report"] = std::move(out);
      env.exit_status = kExitFailure;
      return failure;
    }
    return out;
  });

  // special enum | special predict
  auto* special = app.add_subcommand("special", "t-special sets");
  special->require_subcommand(1);
  Int special_t = 0;
  bool count_only = false;
  auto* special_enum = special->add_subcommand("enum", "Enumerate all t-special sets");
  special_enum->add_option("--t", special_t, "t")->required();
  special_enum->add_flag("--count-only", count_only, "Report g(t) only");
  handlers.emplace_back(special_enum, [&] { return to_json(enumerate_special(special_t, options), !count_only); });

  std::uint64_t predict_p = 0;
  Int predict_r = 0;
  std::optional<std::string> g_cache_path;
  auto* special_predict = special->add_subcommand("predict", "Counting-formula prediction for Z_p");
  special_predict->add_option("--p", predict_p, "Prime modulus")->required();
  special_predict->add_option("--r", predict_r, "r >= 1")->required();
  special_predict->add_option("--g-cache", g_cache_path, "JSON file of known g(t) values (read and updated)");
  handlers.emplace_back(special_predict, [&] {
    std::optional<std::uint64_t> known;
    GCache cache;
    const Int t = predict_p % 3 == 1 ? 3 * predict_r + 1 : 3 * predict_r;
    if (g_cache_path) {
      cache = GCache::load(*g_cache_path);
      known = cache.lookup(t);
    }
    const auto prediction = predicted_scsf_count(predict_p, predict_r, known, options);
    if (g_cache_path && !known) {
      cache.store(prediction.t, prediction.g);
      cache.save(*g_cache_path);
    }
    env.diagnostics["asymptotic_claim"] = true;
    env.diagnostics["g_from_cache"] = known.has_value();
    return to_json(prediction);
  });

  // small build
  auto* small = app.add_subcommand("small", "The interval / arithmetic-progression construction");
  small->require_subcommand(1);
  Int small_t = 0, small_d = 0, small_k = 0, small_variant = 0;
  auto* small_build = small->add_subcommand("build", "Build the construction for (t, d, k, variant)");
  small_build->add_option("--t", small_t, "t >= 1")->required();
  small_build->add_option("--d", small_d, "d >= 2")->required();
  small_build->add_option("--k", small_k, "k >= 4")->required();
  small_build->add_option("--variant", small_variant, "11 (n odd) or 14 (n even)")
      ->required()
      ->check(CLI::IsMember({11, 14}));
  handlers.emplace_back(small_build, [&] {
    const auto params = IntervalAPParameters::make(small_t, small_d, small_k, small_variant);
    Json out = with_properties(build_small(params, checked()));
    out["params"] = to_json(params);
    out["expected_size"] = params.expected_size();
    return out;
  });

  // ladder, density
  Int ladder_n = 0;
  auto* ladder = app.add_subcommand("ladder", "Size ladder of the construction for a modulus");
  ladder->add_option("--n", ladder_n, "Modulus")->required();
  handlers.emplace_back(ladder, [&] { return to_json(size_ladder(ladder_n), checked()); });

  Int density_n = 0;
  double density_alpha = 0.0;
  auto* density = app.add_subcommand("density", "Construction whose density is nearest to alpha");
  density->add_option("--n", density_n, "Modulus")->required();
  density->add_option("--alpha", density_alpha, "Target density in [0, 1/3]")->required();
  handlers.emplace_back(density, [&] {
    const auto choice = nearest_density_set(density_n, density_alpha, checked());
    Json out = set_to_json(choice.set);
    out["size"] = choice.rung.size;
    out["density"] = static_cast<double>(choice.rung.size) / static_cast<double>(density_n);
    out["alpha"] = density_alpha;
    out["params"] = to_json(choice.rung.params);
    out["source"] = choice.ladder_index < 0 ? "largest" : "ladder";
    out["ladder_index"] = choice.ladder_index;
    return out;
  });

  // search exhaustive | maxsumfree | probe
  auto* search = app.add_subcommand("search", "Exhaustive searches");
  search->require_subcommand(1);
  Int search_n = 0;
  std::optional<Int> search_size;
  bool with_classes = false;
  auto* search_exhaustive = search->add_subcommand("exhaustive", "All symmetric complete sum-free subsets of Z_n");
  search_exhaustive->add_option("--n", search_n, "Modulus")->required();
  search_exhaustive->add_option("--size", search_size, "Only sets of this size");
  search_exhaustive->add_flag("--classes", with_classes, "Also report dilation classes");
  handlers.emplace_back(search_exhaustive,
                        [&] { return to_json(exhaustive_scsf(search_n, search_size, options), with_classes); });

  std::uint64_t search_p = 0;
  auto* search_max = search->add_subcommand("maxsumfree", "All maximum-size sum-free subsets of Z_p");
  search_max->add_option("--p", search_p, "Prime modulus")->required();
  handlers.emplace_back(search_max, [&] {
    const Catalog catalog = exhaustive_max_sum_free(search_p, options);
    Json out = to_json(catalog, true);
    out["max_size"] = catalog.sets.empty() ? 0 : catalog.sets.front().size();
    return out;
  });

  Int probe_s = 0;
  auto* search_probe = search->add_subcommand("probe", "Compare the catalog of Z_p with the S_T construction");
  search_probe->add_option("--p", search_p, "Prime modulus")->required();
  search_probe->add_option("--s", probe_s, "Set size")->required();
  handlers.emplace_back(search_probe, [&] {
    const ProbeReport report = characterization_probe(search_p, probe_s, options);
    env.diagnostics["asymptotic_claim"] = report.asymptotic_claim;
    env.diagnostics["hypotheses_unmet"] = report.hypotheses_unmet;
    return to_json(report);
  });

  // cayley
  SetInput cayley_set;
  std::string cayley_format = "json";
  std::optional<Int> sample_sources;
  std::uint64_t cayley_seed = 0;
  auto* cayley = app.add_subcommand("cayley", "Cayley graph of Z_n with a symmetric generator set");
  cayley_set.attach(cayley);
  cayley->add_option("--format", cayley_format, "json, dot or edges")->check(CLI::IsMember({"json", "dot", "edges"}));
  cayley->add_option("--sample-diameter", sample_sources, "BFS from this many seeded random sources only");
  cayley->add_option("--seed", cayley_seed, "Seed for --sample-diameter");
  handlers.emplace_back(cayley, [&]() -> Json {
    const CayleyGraph graph(cayley_set.resolve());
    if (cayley_format == "dot") {
      env.text = to_dot(graph);
      return nullptr;
    }
    if (cayley_format == "edges") {
      env.text = to_edge_list(graph);
      return nullptr;
    }
    std::optional<DiameterSampling> sampling;
    if (sample_sources) {
      if (*sample_sources < 1) throw DomainError("--sample-diameter must be >= 1");
      sampling = DiameterSampling{*sample_sources, cayley_seed};
    }
    Json out;
    out["n"] = graph.vertex_count();
    out["generators"] = graph.generators().elements();
    out["edges"] = graph.vertex_count() * static_cast<Int>(graph.generators().size()) / 2;
    const Json props = to_json(graph_properties(graph, sampling));
    for (const auto& [key, value] : props.items()) out[key] = value;
    return out;
  });

  // dioid
  SetInput dioid_set;
  auto* dioid = app.add_subcommand("dioid", "Three-part dioid partition of Z_p");
  dioid_set.attach(dioid, "--p");
  handlers.emplace_back(dioid, [&] {
    const PartitionReport report = dioid_partition(dioid_set.resolve());
    Json out = to_json(report);
    if (!report.all_axioms()) {
      Json failure = error_json("verification_error", "partition axioms fail");
      failure["report"] = std::move(out);
      env.exit_status = kExitFailure;
      return failure;
    }
    return out;
  });

  // simulate cameron
  auto* simulate = app.add_subcommand("simulate", "Stochastic processes");
  simulate->require_subcommand(1);
  SetInput sim_set;
  ProcessConfig sim;
  auto* cameron = simulate->add_subcommand("cameron", "Random sum-free process with optional conditioning");
  sim_set.attach(cameron, "--mod");
  cameron->add_option("--horizon", sim.horizon, "Scan 1..N")->required();
  cameron->add_option("--trials", sim.trials, "Number of independent runs")->required();
  cameron->add_option("--seed", sim.seed, "Seed (required for reproducibility)")->required();
  handlers.emplace_back(cameron, [&] {
    if (sim_set.list || sim_set.file) sim.conditioning = sim_set.resolve();
    sim.threads = options.threads;
    const auto report = simulate_random_sumfree(sim);
    env.diagnostics["estimate"] = true;
    return to_json(report);
  });

  CLI::App* leaf = nullptr;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    for (bool descended = true; descended;) {
      descended = false;
      for (auto* sub : target->get_subcommands()) {
        target = sub;
        descended = true;
        break;
      }
    }
    env.command = "help";
    env.text = target->help();
    return env;
  } catch (const CLI::ParseError& e) {
    env.command = "usage";
    env.exit_status = kExitUsage;
    env.message = std::string(e.what()) + "\nRun with --help for usage.";
    return env;
  }

  env.pretty = flags.pretty && !flags.json;
  std::function<Json()>* handler = nullptr;
  for (auto& [sub, fn] : handlers)
    if (sub->parsed()) {
      leaf = sub;
      handler = &fn;
    }
  if (leaf == nullptr) {
    env.exit_status = kExitUsage;
    env.message = "no command given\nRun with --help for usage.";
    return env;
  }
  env.command = command_path(leaf);
  for (const CLI::Option* opt : leaf->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& results = opt->results();
    env.arguments[opt->get_name(false, true)] = results.size() == 1 ? Json(results.front()) : Json(results);
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    options.threads = flags.threads;
    options.budget = flags.budget ? *flags.budget : budget_from_env().value_or(0);
    env.diagnostics["budget"] = options.budget == 0 ? Json("default") : Json(options.budget);
    env.diagnostics["threads"] = resolve_threads(options.threads);
    env.diagnostics["checked"] = checked();
    env.payload = (*handler)();
  } catch (const UsageError& e) {
    env.exit_status = kExitUsage;
    env.message = std::string(e.what()) + "\nRun with --help for usage.";
    env.payload = nullptr;
    env.text.reset();
  } catch (const BudgetError& e) {
    env.exit_status = kExitFailure;
    env.payload = error_json(e.code(), e.what());
    env.payload["error"]["required"] = e.required();
    env.payload["error"]["budget"] = e.budget();
    env.text.reset();
  } catch (const Error& e) {
    env.exit_status = kExitFailure;
    env.payload = error_json(e.code(), e.what());
    env.text.reset();
  } catch (const std::exception& e) {
    env.exit_status = kExitFailure;
    env.payload = error_json("internal_error", e.what());
    env.text.reset();
  }
  env.diagnostics["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return env;
}

std::string render_stdout(const CommandEnvelope& env) {
  if (env.text) return *env.text;
  if (env.payload.is_null()) return {};
  return env.payload.dump(env.pretty ? 2 : -1) + "\n";
}

std::string render_stderr(const CommandEnvelope& env) {
  std::string out;
  if (!env.message.empty()) out += env.message + "\n";
  if (!env.command.empty() && env.command != "usage" && env.command != "help") {
    Json line;
    line["command"] = env.command;
    line["arguments"] = env.arguments;
    line["diagnostics"] = env.diagnostics;
    line["exit_status"] = env.exit_status;
    out += line.dump() + "\n";
  }
  return out;
}

}  // namespace sumfree::cli
