#include "commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fleetic/availability.hpp"
#include "fleetic/csv.hpp"
#include "fleetic/demand.hpp"
#include "fleetic/error.hpp"
#include "fleetic/geojson.hpp"
#include "fleetic/instance_io.hpp"
#include "fleetic/pareto.hpp"
#include "fleetic/scenario.hpp"
#include "fleetic/solution_io.hpp"
#include "fleetic/solver.hpp"
#include "fleetic/synthetic.hpp"
#include "fleetic/timestamp.hpp"

namespace fleetic::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "KEY=VALUE" pairs from repeated flags.
template <class T>
std::map<std::string, T> parse_pairs(const std::vector<std::string>& items, const char* flag) {
  std::map<std::string, T> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw UsageError(std::string(flag) + " expects TYPE=VALUE, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if constexpr (std::is_integral_v<T>) {
        out[key] = static_cast<T>(csv::parse_integer(value, flag));
      } else {
        out[key] = csv::parse_number(value, flag);
      }
    } catch (const ValidationError& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream s(item);
    std::string part;
    while (std::getline(s, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

void print_config(std::ostream& err, const std::string& command, const json& config) {
  err << "config " << command << " " << config.dump() << "\n";
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << text;
  if (!f) throw IoError("failed writing '" + path + "'");
}

void write_json(const json& doc, const std::string& path, std::ostream& out) {
  write_text(doc.dump(2) + "\n", path, out);
}

std::string percent(double share) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << share * 100.0 << "%";
  return s.str();
}

void print_report(std::ostream& out, const Instance& inst, const CoverageReport& r) {
  out << "covered " << r.covered_demand << "/" << r.total_demand << " (" << percent(r.tx_cob)
      << "), bases open " << r.open_base_count << "/" << inst.max_bases() << "\n";
  for (std::size_t u = 0; u < inst.num_types(); ++u) {
    out << "  " << inst.team_types()[u].id << ": " << r.covered_by_type[u] << "/"
        << r.demand_by_type[u] << "\n";
  }
}

// Flags shared by every command that solves.
struct SolveFlags {
  std::string mode = "exact";
  int exact_site_limit = 25;
  std::vector<std::string> fixed_bases;
  std::vector<std::string> fixed_placements;
  std::optional<double> time_limit_s;
  std::vector<std::string> required;

  void add(CLI::App* app, bool with_fixed = true) {
    app->add_option("--mode", mode, "exact | greedy | greedy+local-search")
        ->capture_default_str();
    app->add_option("--exact-site-limit", exact_site_limit, "Largest site count the exact solver accepts")
        ->capture_default_str();
    if (with_fixed) {
      app->add_option("--fixed-bases", fixed_bases,
                      "Freeze the base set to these site ids (comma separated or repeated)");
      app->add_option("--fixed-placement", fixed_placements, "Pin a team in place as SITE:TYPE");
    }
    app->add_option("--time-limit", time_limit_s, "Exact solver time limit in seconds");
    app->add_option("--required", required, "Teams needed in range as TYPE=B (repeatable)");
  }

  SolveOptions resolve() const {
    SolveOptions o;
    try {
      o.mode = parse_solve_mode(mode);
    } catch (const ValidationError& e) {
      throw UsageError(e.what());
    }
    o.exact_site_limit = exact_site_limit;
    if (!fixed_bases.empty()) {
      const auto ids = split_list(fixed_bases);
      o.fixed_bases = std::set<std::string>(ids.begin(), ids.end());
    }
    for (const auto& p : fixed_placements) {
      const auto colon = p.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == p.size()) {
        throw UsageError("--fixed-placement expects SITE:TYPE, got '" + p + "'");
      }
      o.fixed_placements.insert({p.substr(0, colon), p.substr(colon + 1)});
    }
    o.time_limit_s = time_limit_s;
    o.required_teams = parse_pairs<int>(required, "--required");
    return o;
  }
};

// validate ------------------------------------------------------------------

struct ValidateCmd {
  std::string instance;
  std::string solution;

  void setup(CLI::App& app) {
    auto* c = app.add_subcommand("validate", "Check an instance, and optionally a solution against it");
    c->add_option("instance", instance, "Instance JSON")->required();
    c->add_option("--solution", solution, "Solution or deployment JSON to check");
    c->callback([this] { ran = true; });
  }

  int run(std::ostream& out, std::ostream& err) const {
    print_config(err, "validate", {{"instance", instance}, {"solution", solution}});
    const Instance inst = load_instance(instance);
    out << "instance ok: " << inst.num_demands() << " demands, " << inst.num_sites() << " sites, "
        << inst.num_types() << " team types, Q=" << inst.max_bases()
        << ", total demand " << total_demand(inst) << ", hash " << instance_hash(inst) << "\n";
    if (!solution.empty()) {
      const SolutionFile sol = load_solution(solution, &inst);
      check_deployment(inst, sol.deployment);
      out << "solution ok\n";
      print_report(out, inst, evaluate_deployment(inst, build_cover_matrix(inst), sol.deployment));
    }
    return 0;
  }

  bool ran = false;
};

// solve ---------------------------------------------------------------------

struct SolveCmd {
  std::string instance;
  std::string output;
  std::optional<double> lambda;
  std::optional<double> theta;
  std::vector<std::string> busy;
  SolveFlags flags;

  void setup(CLI::App& app) {
    auto* c = app.add_subcommand("solve", "Place bases and teams to maximize covered calls");
    c->add_option("instance", instance, "Instance JSON")->required();
    c->add_option("-o,--output", output, "Solution JSON (stdout when omitted)");
    c->add_option("--lambda", lambda, "Weighted-sum objective weight in [0, 1]");
    c->add_option("--theta", theta, "Confidence level; with --busy gives required teams");
    c->add_option("--busy", busy, "Busy fraction per type as TYPE=Q (repeatable)");
    flags.add(c);
    c->callback([this] { ran = true; });
  }

  int run(std::ostream& out, std::ostream& err) const {
    const Instance inst = load_instance(instance);
    SolveOptions o = flags.resolve();
    o.lambda = lambda;
    if (theta) {
      const auto q = parse_pairs<double>(busy, "--busy");
      for (const auto& [type, b] : requirement_from_busy_fractions(q, *theta).required) {
        o.required_teams.try_emplace(type, b);
      }
    } else if (!busy.empty()) {
      throw UsageError("--busy needs --theta");
    }
    print_config(err, "solve",
                 {{"instance", instance}, {"instance_hash", instance_hash(inst)},
                  {"options", options_to_json(o)}, {"output", output}});
    const CoverMatrix cover = build_cover_matrix(inst);
    const SolveResult r = solve(inst, cover, o);
    const json doc = solution_to_json(inst, r, o);
    if (output.empty()) {
      out << doc.dump(2) << "\n";
      return 0;
    }
    write_json(doc, output, out);
    out << "proof " << to_string(r.proof) << ", " << r.explored_nodes << " nodes, "
        << r.wall_time_s << " s\n";
    print_report(out, inst, r.report);
    return 0;
  }

  bool ran = false;
};

// pareto --------------------------------------------------------------------

struct ParetoCmd {
  std::string instance;
  std::string output;
  std::string all_points;
  std::string geojson_dir;
  int grid = 101;
  unsigned jobs = 0;
  SolveFlags flags;

  void setup(CLI::App& app) {
    auto* c = app.add_subcommand("pareto", "Weighted-sum sweep of coverage against bases saved");
    c->add_option("instance", instance, "Instance JSON")->required();
    c->add_option("-o,--output", output, "Front CSV (stdout when omitted)");
    c->add_option("--all-points", all_points, "CSV with every grid point before filtering");
    c->add_option("--geojson-dir", geojson_dir, "Write one GeoJSON file per front point");
    c->add_option("--grid", grid, "Number of lambda values in [0, 1]")->capture_default_str();
    c->add_option("--jobs", jobs, "Worker threads, 0 for available parallelism")
        ->capture_default_str();
    flags.add(c);
    c->callback([this] { ran = true; });
  }

  int run(std::ostream& out, std::ostream& err) const {
    const Instance inst = load_instance(instance);
    SweepOptions sweep;
    sweep.grid_size = grid;
    sweep.jobs = jobs;
    sweep.solve = flags.resolve();
    print_config(err, "pareto",
                 {{"instance", instance}, {"instance_hash", instance_hash(inst)},
                  {"grid", grid}, {"jobs", jobs}, {"options", options_to_json(sweep.solve)}});
    const CoverMatrix cover = build_cover_matrix(inst);
    const auto points = sweep_lambda(inst, cover, sweep);
    const auto front = pareto_filter(points);
    if (!all_points.empty()) write_pareto_csv(points, all_points);
    if (output.empty()) {
      write_pareto_csv(front, out);
    } else {
      write_pareto_csv(front, output);
      out << points.size() << " lambdas, " << front.size() << " front points\n";
    }
    if (!geojson_dir.empty()) {
      std::error_code ec;
      fs::create_directories(geojson_dir, ec);
      if (ec) throw IoError("cannot create '" + geojson_dir + "': " + ec.message());
      for (std::size_t k = 0; k < front.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "front_%03zu.geojson", k);
        write_json(export_geojson(inst, cover, front[k]), (fs::path(geojson_dir) / name).string(),
                   out);
      }
    }
    return 0;
  }

  bool ran = false;
};

// busy-fraction -------------------------------------------------------------

struct BusyCmd {
  std::string log;
  std::string output;
  std::vector<std::string> fleet;
  std::optional<double> service_hours;
  std::optional<double> daily_calls;
  std::optional<int> fleet_size;

  void setup(CLI::App& app) {
    auto* c = app.add_subcommand(
        "busy-fraction", "Busy fraction q from a call log (monthly report) or from direct figures");
    c->add_option("--log", log, "Occurrence CSV");
    c->add_option("--fleet", fleet, "Teams per type as TYPE=N (repeatable), with --log");
    c->add_option("-o,--output", output, "Report CSV (stdout when omitted)");
    c->add_option("--service-hours", service_hours, "Mean commit-to-release time in hours");
    c->add_option("--daily-calls", daily_calls, "Calls per day");
    c->add_option("--fleet-size", fleet_size, "Teams available");
    c->callback([this] { ran = true; });
  }

  int run(std::ostream& out, std::ostream& err) const {
    if (log.empty()) {
      if (!service_hours || !daily_calls || !fleet_size) {
        throw UsageError("busy-fraction needs --log, or --service-hours, --daily-calls and --fleet-size");
      }
      print_config(err, "busy-fraction",
                   {{"service_hours", *service_hours}, {"daily_calls", *daily_calls},
                    {"fleet_size", *fleet_size}});
      const double q = busy_fraction({*service_hours, *daily_calls, *fleet_size});
      out << "q=" << csv::format_number(q) << "\n";
      for (double theta : kReportThetas) {
        out << "theta=" << csv::format_number(theta) << " b=";
        if (q > 0.0 && q < 1.0) {
          out << min_teams(q, theta) << "\n";
        } else {
          out << "none (q outside (0, 1))\n";
        }
      }
      return 0;
    }
    const auto fleet_map = parse_pairs<int>(fleet, "--fleet");
    print_config(err, "busy-fraction", {{"log", log}, {"fleet", fleet_map}, {"output", output}});
    const auto rows = busy_fraction_report(read_occurrences_csv(log), fleet_map);
    if (output.empty()) {
      write_busy_fraction_csv(rows, out);
    } else {
      write_busy_fraction_csv(rows, output);
      out << rows.size() << " rows\n";
    }
    return 0;
  }

  bool ran = false;
};

// min-teams -----------------------------------------------------------------

struct MinTeamsCmd {
  double q = 0.0;
  double theta = 0.0;

  void setup(CLI::App& app) {
    auto* c = app.add_subcommand("min-teams", "Smallest b with 1 - q^b >= theta");
    c->add_option("--q", q, "Busy fraction, 0 < q < 1")->required();
    c->add_option("--theta", theta, "Confidence level, 0 < theta < 1")->required();
    c->callback([this] { ran = true; });
  }

  int run(std::ostream& out, std::ostream& err) const {
    print_config(err, "min-teams", {{"q", q}, {"theta", theta}});
    out << "b=" << min_teams(q, theta) << "\n";
    return 0;
  }

  bool ran = false;
};

// generate ------------------------------------------------------------------

struct GenerateCmd {
  std::string rates;
  int bands = 6;
  int days = 30;
  std::optional<std::uint64_t> seed;
  std::string start_date = "2017-01-02";
  std::vector<std::string> service_mean;
  std::string output;
  std::string demand_out;
  std::string instance_in;
  std::string instance_out;
  bool synthetic = false;
  std::string rates_out;
  int synthetic_demands = 427;
  int synthetic_sites = 1527;
  int synthetic_max_bases = 22;

  void setup(CLI::App& app) {
    auto* c = app.add_subcommand(
        "generate", "Draw seeded Poisson calls from a rate table, or build the synthetic city instance");
    c->add_option("--rates", rates, "Rate table CSV");
    c->add_option("--bands", bands, "Time bands per day in the rate table")->capture_default_str();
    c->add_option("--days", days, "Days to simulate")->capture_default_str();
    c->add_option("--seed", seed,
                  "Random seed (default 1 for calls, 2017 for the synthetic city)");
    c->add_option("--start-date", start_date, "First simulated day, YYYY-MM-DD")
        ->capture_default_str();
    c->add_option("--service-mean", service_mean,
                  "Mean service minutes per type as TYPE=MIN (repeatable)");
    c->add_option("-o,--output", output, "Occurrence CSV");
    c->add_option("--demand-out", demand_out, "Aggregated demand CSV");
    c->add_option("--instance", instance_in, "Instance whose demand is replaced by the draw");
    c->add_option("--instance-out", instance_out, "Where to write the resulting instance");
    c->add_flag("--synthetic", synthetic,
                "Use the synthetic city (427 neighborhoods, 1527 sites, Q=22)");
    c->add_option("--rates-out", rates_out, "Write the rate table that was used");
    c->add_option("--synthetic-demands", synthetic_demands)->capture_default_str();
    c->add_option("--synthetic-sites", synthetic_sites)->capture_default_str();
    c->add_option("--synthetic-max-bases", synthetic_max_bases)->capture_default_str();
    c->callback([this] { ran = true; });
  }

  int run(std::ostream& out, std::ostream& err) const {
    if (synthetic == !rates.empty()) throw UsageError("generate needs exactly one of --rates and --synthetic");
    if (!instance_in.empty() && synthetic) throw UsageError("--instance cannot be combined with --synthetic");
    if (!instance_in.empty() && instance_out.empty()) throw UsageError("--instance needs --instance-out");

    GenerateOptions g;
    g.days = days;
    g.seed = seed.value_or(g.seed);
    g.start_day = parse_timestamp(start_date + "T00:00:00").day_number();
    g.service_mean_minutes = parse_pairs<double>(service_mean, "--service-mean");

    json config = {{"days", days},         {"seed", g.seed},       {"start_date", start_date},
                   {"bands", bands},       {"output", output},   {"demand_out", demand_out},
                   {"instance", instance_in}, {"instance_out", instance_out},
                   {"service_mean_minutes", g.service_mean_minutes}};

    RateTable table;
    std::optional<Instance> target;
    if (synthetic) {
      SyntheticOptions s;
      s.seed = seed.value_or(s.seed);
      s.demands = synthetic_demands;
      s.sites = synthetic_sites;
      s.max_bases = synthetic_max_bases;
      config["synthetic"] = {{"seed", s.seed}, {"demands", s.demands}, {"sites", s.sites}, {"max_bases", s.max_bases},
                             {"horizon_days", s.horizon_days}, {"expected_calls", s.expected_calls}};
      print_config(err, "generate", config);
      table = synthetic_rate_table(s);
      if (!instance_out.empty()) {
        target = make_synthetic_instance(s);
      }
    } else {
      config["rates"] = rates;
      print_config(err, "generate", config);
      table = read_rate_table_csv(rates, bands);
      if (!instance_in.empty()) target = load_instance(instance_in);
    }
    if (!rates_out.empty()) write_rate_table_csv(table, rates_out);

    const bool want_calls = !output.empty() || !demand_out.empty() || (target && !synthetic);
    if (want_calls) {
      const GeneratedCalls calls = generate_calls(table, g);
      if (!output.empty()) write_occurrences_csv(calls.records, output);
      if (!demand_out.empty()) {
        std::ostringstream s;
        csv::write_record(s, {"neighborhood_id", "team_type", "calls"});
        for (const auto& [hood, per_type] : calls.demand) {
          for (const auto& [type, n] : per_type) csv::write_record(s, {hood, type, std::to_string(n)});
        }
        write_text(s.str(), demand_out, out);
      }
      out << calls.records.size() << " calls over " << days << " days\n";
      if (target && !synthetic) {
        InstanceDescription raw = target->description();
        for (auto& node : raw.demands) {
          for (auto& [type, n] : node.demand_per_type) {
            n = 0;
            const auto h = calls.demand.find(node.id);
            if (h == calls.demand.end()) continue;
            const auto t = h->second.find(type);
            if (t != h->second.end()) n = t->second;
          }
        }
        target = validate_instance(std::move(raw));
      }
    }
    if (target) {
      save_instance(*target, instance_out);
      out << "instance written: " << target->num_demands() << " demands, " << target->num_sites()
          << " sites, total demand " << total_demand(*target) << ", hash " << instance_hash(*target)
          << "\n";
    }
    return 0;
  }

  bool ran = false;
};

// fit-rates -----------------------------------------------------------------

struct FitCmd {
  std::string log;
  int bands = 6;
  std::vector<std::string> sampling;
  std::string output;

  void setup(CLI::App& app) {
    auto* c = app.add_subcommand("fit-rates", "Fit per-cell Poisson rates from a call log");
    c->add_option("--log", log, "Occurrence CSV")->required();
    c->add_option("--bands", bands, "Time bands per day (divides 24)")->capture_default_str();
    c->add_option("--sampling", sampling,
                  "Fraction of days sampled for a type as TYPE=F (repeatable)");
    c->add_option("-o,--output", output, "Rate table CSV")->required();
    c->callback([this] { ran = true; });
  }

  int run(std::ostream& out, std::ostream& err) const {
    FitOptions f;
    f.band_count = bands;
    f.sampling_fraction = parse_pairs<double>(sampling, "--sampling");
    print_config(err, "fit-rates", {{"log", log}, {"bands", bands},
                                    {"sampling_fraction", f.sampling_fraction}, {"output", output}});
    const RateTable table = fit_rates(read_occurrences_csv(log), f);
    write_rate_table_csv(table, output);
    int days = 0;
    for (int n : table.observed_days) days += n;
    out << table.rates.size() << " nonzero cells over " << days << " days\n";
    return 0;
  }

  bool ran = false;
};

// scenario ------------------------------------------------------------------

struct ScenarioCmd {
  std::string instance;
  int scenario = 3;
  std::string baseline;
  std::vector<std::string> extra;
  std::optional<double> theta;
  std::vector<std::string> busy;
  std::string output;
  std::string solution_out;
  SolveFlags flags;

  void setup(CLI::App& app) {
    auto* c = app.add_subcommand("scenario", "Run one of the six planning scenarios");
    c->add_option("instance", instance, "Instance JSON")->required();
    c->add_option("--scenario", scenario, "1-6")->required();
    c->add_option("--baseline", baseline, "Baseline deployment or solution JSON (1, 2, 5)");
    c->add_option("--extra", extra, "Extra teams per type as TYPE=N, 0-3 (5, 6)");
    c->add_option("--theta", theta, "Confidence level for scenario 4");
    c->add_option("--busy", busy, "Busy fraction per type as TYPE=Q (scenario 4)");
    c->add_option("-o,--output", output, "Scenario report JSON (stdout when omitted)");
    c->add_option("--solution-out", solution_out, "Solution JSON for the resulting deployment");
    flags.add(c, false);
    c->callback([this] { ran = true; });
  }

  int run(std::ostream& out, std::ostream& err) const {
    const Instance inst = load_instance(instance);
    ScenarioConfig config;
    config.scenario = scenario;
    config.solve = flags.resolve();
    config.required_teams = config.solve.required_teams;
    config.solve.required_teams.clear();
    if (!baseline.empty()) config.baseline = load_solution(baseline, &inst).deployment;
    config.extra_teams = parse_pairs<int>(extra, "--extra");
    config.theta = theta;
    config.busy_fractions = parse_pairs<double>(busy, "--busy");
    print_config(err, "scenario",
                 {{"instance", instance}, {"instance_hash", instance_hash(inst)},
                  {"scenario", scenario}, {"baseline", baseline}, {"extra_teams", config.extra_teams},
                  {"theta", theta ? json(*theta) : json(nullptr)},
                  {"busy_fractions", config.busy_fractions},
                  {"required_teams", config.required_teams},
                  {"options", options_to_json(config.solve)}});
    validate_scenario(inst, config);
    const ScenarioReport report = run_scenario(inst, config);

    if (!solution_out.empty()) {
      // Extra teams enlarge the fleet, so the solution is tied to that instance.
      InstanceDescription raw = inst.description();
      for (auto& t : raw.team_types) t.fleet_size = report.fleet.at(t.id);
      const Instance grown = validate_instance(std::move(raw));
      SolveResult r;
      r.deployment = report.deployment;
      r.report = report.report;
      r.proof = report.proof.value_or(ProofStatus::heuristic);
      r.wall_time_s = report.wall_time_s;
      r.objective = static_cast<double>(report.report.covered_demand);
      SolveOptions o = config.solve;
      o.required_teams = report.required_teams;
      write_json(solution_to_json(grown, r, o), solution_out, out);
    }
    const json doc = scenario_report_to_json(inst, report);
    if (output.empty()) {
      out << doc.dump(2) << "\n";
      return 0;
    }
    write_json(doc, output, out);
    out << "scenario " << scenario << ": ";
    print_report(out, inst, report.report);
    if (const auto delta = report.delta_calls()) out << "delta vs baseline " << *delta << " calls\n";
    return 0;
  }

  bool ran = false;
};

// export-geojson ------------------------------------------------------------

struct GeoJsonCmd {
  std::string instance;
  std::string solution;
  std::string output;

  void setup(CLI::App& app) {
    auto* c = app.add_subcommand("export-geojson", "Render a deployment as a GeoJSON FeatureCollection");
    c->add_option("instance", instance, "Instance JSON")->required();
    c->add_option("--solution", solution, "Solution or deployment JSON")->required();
    c->add_option("-o,--output", output, "GeoJSON file (stdout when omitted)");
    c->callback([this] { ran = true; });
  }

  int run(std::ostream& out, std::ostream& err) const {
    print_config(err, "export-geojson",
                 {{"instance", instance}, {"solution", solution}, {"output", output}});
    const Instance inst = load_instance(instance);
    const SolutionFile sol = load_solution(solution, &inst);
    check_deployment(inst, sol.deployment);
    write_json(export_geojson(inst, build_cover_matrix(inst), sol.deployment), output, out);
    return 0;
  }

  bool ran = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Emergency fleet base and team placement"};
  app.name("fleetic");
  app.require_subcommand(1);
  app.set_version_flag("--version", "fleetic 0.1.0");

  ValidateCmd validate;
  SolveCmd solve_cmd;
  ParetoCmd pareto;
  BusyCmd busy;
  MinTeamsCmd min_teams_cmd;
  GenerateCmd generate;
  FitCmd fit;
  ScenarioCmd scenario;
  GeoJsonCmd geojson;
  validate.setup(app);
  solve_cmd.setup(app);
  pareto.setup(app);
  busy.setup(app);
  min_teams_cmd.setup(app);
  generate.setup(app);
  fit.setup(app);
  scenario.setup(app);
  geojson.setup(app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (validate.ran) return validate.run(out, err);
    if (solve_cmd.ran) return solve_cmd.run(out, err);
    if (pareto.ran) return pareto.run(out, err);
    if (busy.ran) return busy.run(out, err);
    if (min_teams_cmd.ran) return min_teams_cmd.run(out, err);
    if (generate.ran) return generate.run(out, err);
    if (fit.ran) return fit.run(out, err);
    if (scenario.ran) return scenario.run(out, err);
    if (geojson.ran) return geojson.run(out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(ErrorKind::validation);
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace fleetic::cli
