#include "fairdiv/cli.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fairdiv/audit.hpp"
#include "fairdiv/generators.hpp"
#include "fairdiv/instance_io.hpp"
#include "json.hpp"

namespace fairdiv {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kDegreeLabel =
    "instance degree (lower-bounds mechanism degree)";

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json ordering_json(const AgentOrdering& ordering) {
  Json list = Json::array();
  for (AgentIndex a : ordering.pick_order()) list.push_back(a + 1);
  return list;
}

Json goods_json(const Bundle& bundle) {
  Json list = Json::array();
  for (GoodIndex g : bundle) list.push_back(g + 1);
  return list;
}

Json bundles_json(const Allocation& alloc) {
  Json list = Json::array();
  for (const auto& bundle : alloc.bundles) list.push_back(goods_json(bundle));
  return list;
}

Json rationals_json(const std::vector<Rational>& values) {
  Json list = Json::array();
  for (const auto& v : values) list.push_back(format_rational(v));
  return list;
}

Json pef_witness_json(const std::optional<PefWitness>& witness) {
  if (!witness) return nullptr;
  Json w = Json::object();
  w["agent"] = witness->agent + 1;
  w["ordering_current"] = ordering_json(witness->current);
  w["ordering_other"] = ordering_json(witness->other);
  w["removal_count"] = witness->removal_count;
  w["removed_goods"] = goods_json(witness->removed_goods);
  return w;
}

std::vector<Rational> default_scalars(std::size_t n) {
  std::vector<Rational> scalars;
  for (std::size_t a = 0; a < n; ++a) scalars.emplace_back(static_cast<long>(a + 2));
  return scalars;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

AuditOutcome run_audit(const Instance& inst, const AuditOptions& options) {
  for (const auto& check : options.checks) {
    if (check != "ef1" && check != "ef" && check != "po" &&
        check != "pef_degree" && check != "scale") {
      throw InputError("unknown check \"" + check + "\"");
    }
  }
  const bool wants_degree =
      options.require_pef1 ||
      std::find(options.checks.begin(), options.checks.end(), "pef_degree") !=
          options.checks.end();

  // Outcomes the per-allocation checks run over.
  std::vector<OrderedOutcome> all;
  if (wants_degree || !options.ordering) {
    all = run_all_orderings(options.mechanism, inst);
  }
  std::vector<OrderedOutcome> checked;
  if (options.ordering) {
    checked.push_back({*options.ordering,
                       run_mechanism(options.mechanism, inst, *options.ordering)});
  } else {
    checked = all;
  }

  AuditOutcome outcome;
  Json report = Json::object();
  report["mechanism"] = std::string(mechanism_name(options.mechanism));
  report["n"] = inst.n();
  report["m"] = inst.m();
  report["orderings_checked"] = checked.size();
  Json checks = Json::object();
  std::optional<PefDegree> degree;

  auto record = [&](const std::string& name, bool pass, Json witness,
                    Clock::time_point start) {
    Json entry = Json::object();
    entry["pass"] = pass;
    entry["witness"] = std::move(witness);
    entry["wall_ms"] = options.timing ? elapsed_ms(start) : 0.0;
    checks[name] = std::move(entry);
    if (!pass) outcome.all_passed = false;
  };

  for (const auto& check : options.checks) {
    const auto start = Clock::now();
    if (check == "ef1" || check == "ef") {
      Json witness = nullptr;
      for (const auto& o : checked) {
        const auto found = check == "ef1" ? check_ef1(inst, o.allocation)
                                          : check_envy_free(inst, o.allocation);
        if (found) {
          witness = Json::object();
          witness["ordering"] = ordering_json(o.ordering);
          witness["envier"] = found->envier + 1;
          witness["envied"] = found->envied + 1;
          witness["bundles"] = bundles_json(o.allocation);
          break;
        }
      }
      record(check, witness.is_null(), std::move(witness), start);
    } else if (check == "po") {
      Json witness = nullptr;
      std::vector<Allocation> seen;
      for (const auto& o : checked) {
        if (std::find(seen.begin(), seen.end(), o.allocation) != seen.end()) continue;
        seen.push_back(o.allocation);
        if (const auto better = check_po_bruteforce(inst, o.allocation)) {
          witness = Json::object();
          witness["ordering"] = ordering_json(o.ordering);
          witness["bundles"] = bundles_json(o.allocation);
          witness["dominating_bundles"] = bundles_json(*better);
          break;
        }
      }
      record(check, witness.is_null(), std::move(witness), start);
    } else if (check == "scale") {
      const auto scalars = options.scalars.value_or(default_scalars(inst.n()));
      Json witness = nullptr;
      for (const auto& o : checked) {
        if (const auto diff = check_scale_invariance(options.mechanism, inst,
                                                     scalars, o.ordering)) {
          witness = Json::object();
          witness["ordering"] = ordering_json(o.ordering);
          witness["scalars"] = rationals_json(scalars);
          witness["unscaled_bundles"] = bundles_json(diff->unscaled);
          witness["scaled_bundles"] = bundles_json(diff->scaled);
          break;
        }
      }
      record(check, witness.is_null(), std::move(witness), start);
    } else if (check == "pef_degree") {
      degree = pef_degree_of(inst, all);
      Json entry = Json::object();
      entry["pass"] = true;
      entry["witness"] = nullptr;
      entry["wall_ms"] = options.timing ? elapsed_ms(start) : 0.0;
      checks[check] = std::move(entry);
    }
  }
  if (options.require_pef1) {
    const auto start = Clock::now();
    if (!degree) degree = pef_degree_of(inst, all);
    const bool pass = degree->degree <= 1;
    record("pef1", pass, pass ? Json(nullptr) : pef_witness_json(degree->witness),
           start);
  }

  report["checks"] = std::move(checks);
  if (degree) {
    Json d = Json::object();
    d["value"] = degree->degree;
    d["label"] = kDegreeLabel;
    d["witness"] = pef_witness_json(degree->witness);
    report["degree"] = std::move(d);
  } else {
    report["degree"] = nullptr;
  }
  report["all_pass"] = outcome.all_passed;
  outcome.json = report.dump(2) + "\n";
  return outcome;
}

namespace {

struct SweepTask {
  std::string seed_label;
  std::optional<Instance> instance;
  std::string error;
  std::size_t n = 0;
  std::size_t m = 0;
};

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string sweep_row(const SweepOptions& options, const SweepTask& task) {
  const auto start = Clock::now();
  std::string degree, ef1, po, max_bundle, error = task.error;
  if (task.instance) {
    try {
      const Instance& inst = *task.instance;
      const auto outcomes = run_all_orderings(options.mechanism, inst);
      degree = std::to_string(pef_degree_of(inst, outcomes).degree);
      bool all_ef1 = true;
      std::size_t largest = 0;
      for (const auto& o : outcomes) {
        if (check_ef1(inst, o.allocation)) all_ef1 = false;
        for (const auto& b : o.allocation.bundles) largest = std::max(largest, b.size());
      }
      ef1 = all_ef1 ? "1" : "0";
      max_bundle = std::to_string(largest);
      if (saturating_power(inst.n(), inst.m(), enumeration_cap()) <=
          enumeration_cap()) {
        bool all_po = true;
        std::vector<Allocation> seen;
        for (const auto& o : outcomes) {
          if (std::find(seen.begin(), seen.end(), o.allocation) != seen.end()) continue;
          seen.push_back(o.allocation);
          if (check_po_bruteforce(inst, o.allocation)) {
            all_po = false;
            break;
          }
        }
        po = all_po ? "1" : "0";
      }
    } catch (const std::exception& e) {
      degree.clear();
      ef1.clear();
      po.clear();
      max_bundle.clear();
      error = e.what();
    }
  }
  std::ostringstream wall;
  wall << std::fixed << std::setprecision(3) << (options.timing ? elapsed_ms(start) : 0.0);
  std::ostringstream row;
  row << csv_field(task.seed_label) << ',' << task.n << ',' << task.m << ','
      << degree << ',' << ef1 << ',' << po << ',' << max_bundle << ','
      << wall.str() << ',' << csv_field(error);
  return row.str();
}

std::vector<SweepTask> fixture_tasks(const SweepOptions& options) {
  std::vector<SweepTask> tasks;
  const std::size_t n = options.n;
  const std::size_t m = options.m;
  auto add = [&](Family family, auto make) {
    SweepTask task;
    task.seed_label = "family:" + std::string(family_name(family));
    task.instance = make();
    task.n = task.instance->n();
    task.m = task.instance->m();
    tasks.push_back(std::move(task));
  };
  if (n == 4 && m == 5) add(Family::kExample4, [] { return gen_example4(); });
  if (n >= 1 && m > 0 && m % n == 0) {
    const std::size_t rounds = m / n;
    const std::size_t levels = static_cast<std::size_t>(std::bit_width(n)) - 1;
    if (rounds >= levels) {
      add(Family::kRrLogLowerBound,
          [&] { return gen_rr_log_lower_bound(n, rounds); });
    }
  }
  if (n == 2 && m >= 3) {
    add(Family::kAwCounterexample, [&] { return gen_aw_counterexample(m); });
  }
  if (n >= 1 && m >= n) add(Family::kEcWorst, [&] { return gen_ec_worst(n, m); });
  return tasks;
}

}  // namespace

void run_sweep(const SweepOptions& options, std::ostream& out) {
  std::vector<SweepTask> tasks;
  if (options.with_fixtures) tasks = fixture_tasks(options);
  for (std::size_t i = 0; i < options.count; ++i) {
    SweepTask task;
    const std::uint64_t seed = options.seed + i;
    task.seed_label = std::to_string(seed);
    task.n = options.n;
    task.m = options.m;
    try {
      task.instance = gen_random(options.n, options.m, seed, options.max_value);
    } catch (const std::exception& e) {
      task.error = e.what();
    }
    tasks.push_back(std::move(task));
  }

  out << kSweepHeader << '\n';
  const std::size_t jobs = std::max(1u, options.jobs);
  for (std::size_t begin = 0; begin < tasks.size(); begin += jobs) {
    const std::size_t end = std::min(tasks.size(), begin + jobs);
    std::vector<std::future<std::string>> rows;
    for (std::size_t i = begin; i < end; ++i) {
      rows.push_back(std::async(std::launch::async,
                                [&, i] { return sweep_row(options, tasks[i]); }));
    }
    for (auto& row : rows) out << row.get() << '\n';
  }
}

namespace {

MechanismId mechanism_or_throw(const std::string& name) {
  const auto id = parse_mechanism(name);
  if (!id) throw InputError("unknown mechanism \"" + name + "\"");
  return *id;
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write \"" + path + "\"");
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Fair division of indivisible goods: mechanisms and audits"};
  app.require_subcommand(1);

  std::string mechanism, instance_path, ordering_text, checks_text, scalars_text;
  std::string family, out_path;
  bool require_pef1 = false, no_timing = false, with_fixtures = false;
  std::size_t n = 2, m = 0, rounds = 1, count = 0;
  std::uint64_t seed = 0, max_value = 10;
  unsigned jobs = 1;

  auto* run = app.add_subcommand("run", "Run a mechanism on an instance");
  run->add_option("--mechanism", mechanism, "Mechanism id")->required();
  run->add_option("--instance", instance_path, "Instance JSON path ('-' for stdin)")
      ->required();
  run->add_option("--ordering", ordering_text,
                  "Agents in pick order, 1-based, comma separated (default identity)");

  auto* audit = app.add_subcommand("audit", "Audit a mechanism on an instance");
  audit->add_option("--mechanism", mechanism, "Mechanism id")->required();
  audit->add_option("--instance", instance_path, "Instance JSON path")->required();
  audit->add_option("--checks", checks_text,
                    "Comma list of ef1,ef,po,pef_degree,scale")
      ->default_val("ef1,po,pef_degree,scale");
  audit->add_option("--scalars", scalars_text, "Positive per-agent scalars for 'scale'");
  audit->add_option("--ordering", ordering_text,
                    "Check a single ordering instead of all n!");
  audit->add_flag("--require-pef1", require_pef1, "Fail unless instance degree <= 1");
  audit->add_flag("--no-timing", no_timing, "Report 0 for wall times");

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--family", family,
                  "example4|rr_log_lower_bound|aw_counterexample|ec_worst|table1_n5|random")
      ->required();
  gen->add_option("--n", n, "Agents");
  gen->add_option("--m", m, "Goods");
  gen->add_option("--rounds", rounds, "Rounds (rr_log_lower_bound)");
  gen->add_option("--seed", seed, "Seed (random)");
  gen->add_option("--max-value", max_value, "Largest utility (random)");
  gen->add_option("--out", out_path, "Output path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Audit many random instances into CSV");
  sweep->add_option("--mechanism", mechanism, "Mechanism id")->required();
  sweep->add_option("--count", count, "Number of random instances");
  sweep->add_option("--n", n, "Agents");
  sweep->add_option("--m", m, "Goods");
  sweep->add_option("--max-value", max_value, "Largest utility");
  sweep->add_option("--seed", seed, "Seed of the first instance");
  sweep->add_option("--out", out_path, "CSV path (default stdout)");
  sweep->add_flag("--with-fixtures", with_fixtures,
                  "Prepend the constructed adversarial profiles that fit (n, m)");
  sweep->add_flag("--no-timing", no_timing, "Write 0 in wall_ms");
  sweep->add_option("--jobs", jobs, "Instances processed concurrently");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (run->parsed()) {
      const auto id = mechanism_or_throw(mechanism);
      const Instance inst = parse_instance(read_text_file(instance_path));
      const AgentOrdering ordering = ordering_text.empty()
                                         ? AgentOrdering::identity(inst.n())
                                         : parse_ordering(ordering_text, inst.n());
      const Allocation alloc = run_mechanism(id, inst, ordering);
      out << serialize_run_result(make_run_result(id, inst, ordering, alloc));
      return kExitOk;
    }
    if (audit->parsed()) {
      const Instance inst = parse_instance(read_text_file(instance_path));
      AuditOptions options;
      options.mechanism = mechanism_or_throw(mechanism);
      options.checks = split_list(checks_text);
      if (!scalars_text.empty()) options.scalars = parse_rational_list(scalars_text);
      if (!ordering_text.empty()) options.ordering = parse_ordering(ordering_text, inst.n());
      options.require_pef1 = require_pef1;
      options.timing = !no_timing;
      const AuditOutcome outcome = run_audit(inst, options);
      out << outcome.json;
      return outcome.all_passed ? kExitOk : kExitCheckFailed;
    }
    if (gen->parsed()) {
      const auto fam = parse_family(family);
      if (!fam) throw InputError("unknown family \"" + family + "\"");
      GeneratorSpec spec;
      spec.family = *fam;
      spec.n = n;
      spec.m = m;
      spec.rounds = rounds;
      spec.seed = seed;
      spec.max_value = max_value;
      write_output(out_path, serialize_instance(generate(spec)), out);
      return kExitOk;
    }
    if (sweep->parsed()) {
      SweepOptions options;
      options.mechanism = mechanism_or_throw(mechanism);
      options.count = count;
      options.n = n;
      options.m = m;
      options.max_value = max_value;
      options.seed = seed;
      options.with_fixtures = with_fixtures;
      options.timing = !no_timing;
      options.jobs = jobs;
      std::ostringstream csv;
      run_sweep(options, csv);
      write_output(out_path, csv.str(), out);
      return kExitOk;
    }
  } catch (const ResourceError& e) {
    err << "error: resource: " << e.what() << '\n';
    return kExitError;
  } catch (const InputError& e) {
    err << "error: input: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace fairdiv
