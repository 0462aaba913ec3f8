// Command-line front end: thresholds, curve, noise-table, mc, distill.
// Results go to stdout as JSON (default) or CSV; diagnostics go to stderr.
// Exit codes: 0 ok, 2 usage/contract error, 3 numerical failure.

#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gkpft/gkpft.hpp"
#include "json.hpp"

namespace {

using gkpft::OutputRecord;
using gkpft::RecordValue;
using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      values.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("unparsable number '" + item + "' in " + flag);
    }
  }
  if (values.empty()) throw UsageError(flag + ": expected at least one value");
  return values;
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

// Shared per-subcommand output options, plus the config file hook.
struct CommonOpts {
  std::string format = "json";
  std::string out_path;
  std::string config_path;
  bool timestamp = false;

  CLI::Option* format_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* timestamp_opt = nullptr;

  void attach(CLI::App* cmd) {
    format_opt = cmd->add_option("--format", format, "Output format: json or csv")
                     ->check(CLI::IsMember({"json", "csv"}));
    out_opt = cmd->add_option("--out", out_path, "Also write the output bytes to this file");
    cmd->add_option("--config", config_path,
                    "JSON file whose keys mirror flags; flags override file values");
    timestamp_opt = cmd->add_flag("--timestamp", timestamp,
                                  "Include a wall-clock timestamp in metadata (off by "
                                  "default so seeded runs are byte-identical)");
  }
};

// Values from --config fill in flags the command line left untouched.
class ConfigFile {
 public:
  explicit ConfigFile(const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw UsageError("--config: cannot open '" + path + "'");
    try {
      in >> doc_;
    } catch (const json::exception& e) {
      throw UsageError("--config: invalid JSON in '" + path + "': " + e.what());
    }
    if (!doc_.is_object()) throw UsageError("--config: top level must be a JSON object");
    loaded_ = true;
  }

  bool has(const std::string& key) const { return loaded_ && doc_.contains(key); }

  template <typename T>
  void apply(const CLI::Option* opt, const std::string& key, T& target) const {
    if (opt != nullptr && opt->count() > 0) return;
    if (!has(key)) return;
    try {
      target = doc_.at(key).get<T>();
    } catch (const json::exception&) {
      throw UsageError("--config: bad value for key '" + key + "'");
    }
  }

  // List-valued flags accept either a JSON array or the same comma string.
  void apply_list(const CLI::Option* opt, const std::string& key, std::string& target) const {
    if (opt != nullptr && opt->count() > 0) return;
    if (!has(key)) return;
    const json& v = doc_.at(key);
    if (v.is_array()) {
      std::string joined;
      for (const json& item : v) {
        if (!joined.empty()) joined += ',';
        joined += item.is_string() ? item.get<std::string>() : item.dump();
      }
      target = joined;
    } else if (v.is_string()) {
      target = v.get<std::string>();
    } else {
      target = v.dump();
    }
  }

  bool given(const CLI::Option* opt, const std::string& key) const {
    return (opt != nullptr && opt->count() > 0) || has(key);
  }

 private:
  json doc_;
  bool loaded_ = false;
};

void emit(const OutputRecord& record, const CommonOpts& common) {
  const std::string payload =
      common.format == "csv" ? record.to_csv() : record.to_json_string();
  std::cout << payload;
  if (!common.out_path.empty()) {
    std::ofstream out(common.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("--out: cannot open '" + common.out_path + "'");
    out << payload;
  }
}

void fill_metadata(OutputRecord& record, const CommonOpts& common,
                   std::optional<std::uint64_t> seed = std::nullopt) {
  record.metadata["version"] = gkpft::kVersion;
  if (seed) record.metadata["seed"] = *seed;
  if (common.timestamp) record.metadata["timestamp"] = iso8601_utc_now();
}

// ---------------------------------------------------------------------------
// thresholds

struct ThresholdsCmd {
  CommonOpts common;
  std::string pft_list = "1e-1,1e-2,1e-3,1e-4,1e-5,1e-6";
  CLI::Option* pft_opt = nullptr;

  void attach(CLI::App* cmd) {
    pft_opt = cmd->add_option("--pft", pft_list,
                              "Comma-separated target gate error rates in (0, 1)");
    common.attach(cmd);
  }

  void run() {
    const ConfigFile cfg(common.config_path);
    cfg.apply_list(pft_opt, "pft", pft_list);
    cfg.apply(common.format_opt, "format", common.format);
    const std::vector<double> pfts = parse_double_list(pft_list, "--pft");

    OutputRecord record;
    record.command = "thresholds";
    record.parameters["pft"] = pfts;
    record.columns = {"p_ft", "sigma2", "squeezing_db"};
    for (double pft : pfts) {
      if (!(pft > 0.0) || !(pft < 1.0)) {
        throw UsageError("--pft: values must lie in (0, 1)");
      }
      const gkpft::ThresholdRow row = gkpft::sigma2_for_threshold(pft);
      record.add_row({row.p_ft, row.sigma2, row.squeezing_db});
    }
    fill_metadata(record, common);
    emit(record, common);
  }
};

// ---------------------------------------------------------------------------
// curve

struct CurveCmd {
  CommonOpts common;
  double db_min = 10.0;
  double db_max = 22.0;
  int points = 121;
  CLI::Option* db_min_opt = nullptr;
  CLI::Option* db_max_opt = nullptr;
  CLI::Option* points_opt = nullptr;

  void attach(CLI::App* cmd) {
    db_min_opt = cmd->add_option("--db-min", db_min, "Lowest squeezing (dB)");
    db_max_opt = cmd->add_option("--db-max", db_max, "Highest squeezing (dB)");
    points_opt = cmd->add_option("--points", points, "Number of curve points (>= 2)");
    common.attach(cmd);
  }

  void run() {
    const ConfigFile cfg(common.config_path);
    cfg.apply(db_min_opt, "db-min", db_min);
    cfg.apply(db_max_opt, "db-max", db_max);
    cfg.apply(points_opt, "points", points);
    cfg.apply(common.format_opt, "format", common.format);

    OutputRecord record;
    record.command = "curve";
    record.parameters["db_min"] = db_min;
    record.parameters["db_max"] = db_max;
    record.parameters["points"] = points;
    record.columns = {"squeezing_db", "sigma2", "p_err"};
    for (const gkpft::CurvePoint& pt : gkpft::curve(db_min, db_max, points)) {
      record.add_row({pt.squeezing_db, gkpft::sigma2_from_squeezing_db(pt.squeezing_db), pt.p_err});
    }
    fill_metadata(record, common);
    record.metadata["annotations_db"] = {
        {"record_single_mode", gkpft::kRecordSingleModeSqueezingDb},
        {"record_cluster", gkpft::kRecordClusterSqueezingDb}};
    emit(record, common);
  }
};

// ---------------------------------------------------------------------------
// noise-table

struct NoiseTableCmd {
  CommonOpts common;
  std::string gate_name = "cz";
  bool symbolic = false;
  double sigma2 = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  CLI::Option* gate_opt = nullptr;
  CLI::Option* symbolic_opt = nullptr;
  CLI::Option* sigma2_opt = nullptr;
  CLI::Option* delta_opt = nullptr;
  CLI::Option* epsilon_opt = nullptr;

  void attach(CLI::App* cmd) {
    gate_opt = cmd->add_option("--gate", gate_name, "Gate: i, p, f, or cz");
    symbolic_opt = cmd->add_flag("--symbolic", symbolic,
                                 "Emit exact delta/epsilon coefficients (default when no "
                                 "numeric noise is given)");
    sigma2_opt = cmd->add_option("--sigma2", sigma2, "Numeric delta = epsilon = sigma2");
    delta_opt = cmd->add_option("--delta", delta, "Numeric ancilla variance");
    epsilon_opt = cmd->add_option("--epsilon", epsilon, "Numeric squeezing variance");
    common.attach(cmd);
  }

  void run() {
    const ConfigFile cfg(common.config_path);
    cfg.apply(gate_opt, "gate", gate_name);
    cfg.apply(symbolic_opt, "symbolic", symbolic);
    cfg.apply(sigma2_opt, "sigma2", sigma2);
    cfg.apply(delta_opt, "delta", delta);
    cfg.apply(epsilon_opt, "epsilon", epsilon);
    cfg.apply(common.format_opt, "format", common.format);
    if (!cfg.given(gate_opt, "gate")) throw UsageError("--gate is required");

    const bool have_sigma2 = cfg.given(sigma2_opt, "sigma2");
    const bool have_delta = cfg.given(delta_opt, "delta");
    const bool have_epsilon = cfg.given(epsilon_opt, "epsilon");
    if (have_sigma2 && (have_delta || have_epsilon)) {
      throw UsageError("--sigma2 and --delta/--epsilon are mutually exclusive");
    }
    if (have_delta != have_epsilon) {
      throw UsageError("--delta and --epsilon must be given together");
    }
    const bool numeric = have_sigma2 || have_delta;
    if (symbolic && numeric) {
      throw UsageError("--symbolic cannot be combined with numeric noise flags");
    }

    gkpft::Gate gate;
    try {
      gate = gkpft::gate_from_name(gate_name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--gate: ") + e.what());
    }
    const gkpft::PropagationTrace trace = gkpft::propagate(gkpft::GateSchedule::standard(gate));

    OutputRecord record;
    record.command = "noise-table";
    record.parameters["gate"] = gkpft::gate_name(gate);
    record.parameters["symbolic"] = !numeric;

    if (!numeric) {
      record.columns = {"label", "row", "col", "delta_num", "delta_den", "epsilon_num", "epsilon_den"};
      for (const gkpft::TraceRow& row : trace.rows) {
        for (int r = 0; r < row.eta.dim(); ++r) {
          for (int c = 0; c < row.eta.dim(); ++c) {
            const gkpft::Rational& d = row.eta.delta_coeff()(r, c);
            const gkpft::Rational& e = row.eta.epsilon_coeff()(r, c);
            record.add_row({row.label, std::int64_t{r}, std::int64_t{c}, d.num(), d.den(),
                            e.num(), e.den()});
          }
        }
      }
      for (const gkpft::ErrVar& ev : trace.err_vars) {
        record.add_row({err_label(trace.gate, ev), std::int64_t{-1}, std::int64_t{-1},
                        ev.variance.delta.num(), ev.variance.delta.den(),
                        ev.variance.epsilon.num(), ev.variance.epsilon.den()});
      }
    } else {
      const gkpft::NoiseModel noise = have_sigma2 ? gkpft::NoiseModel::symmetric(sigma2)
                                                  : gkpft::NoiseModel(delta, epsilon);
      record.parameters["delta"] = noise.delta;
      record.parameters["epsilon"] = noise.epsilon;
      record.columns = {"label", "row", "col", "value"};
      for (const gkpft::TraceRow& row : trace.rows) {
        const gkpft::Mat<double> m = row.eta.evaluate(noise);
        for (int r = 0; r < m.dim(); ++r) {
          for (int c = 0; c < m.dim(); ++c) {
            record.add_row({row.label, std::int64_t{r}, std::int64_t{c}, m(r, c)});
          }
        }
      }
      for (const gkpft::ErrVar& ev : trace.err_vars) {
        record.add_row({err_label(trace.gate, ev), std::int64_t{-1}, std::int64_t{-1},
                        ev.variance.eval(noise)});
      }
    }
    fill_metadata(record, common);
    emit(record, common);
  }

  static std::string err_label(gkpft::Gate gate, const gkpft::ErrVar& ev) {
    std::string label = "sigma2_err" + std::to_string(ev.step);
    if (gate == gkpft::Gate::CZ) label += std::string("_") + gkpft::rail_name(ev.rail);
    return label;
  }
};

// ---------------------------------------------------------------------------
// mc

struct McCmd {
  CommonOpts common;
  std::string gate_name = "i";
  double sigma2 = 0.0;
  double db = 0.0;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = gkpft::kDefaultSeed;
  std::string convention = "half-cell";
  CLI::Option* gate_opt = nullptr;
  CLI::Option* sigma2_opt = nullptr;
  CLI::Option* db_opt = nullptr;
  CLI::Option* samples_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* convention_opt = nullptr;

  void attach(CLI::App* cmd) {
    gate_opt = cmd->add_option("--gate", gate_name, "Gate: i, p, f, or cz");
    sigma2_opt = cmd->add_option("--sigma2", sigma2, "Noise variance (delta = epsilon)");
    db_opt = cmd->add_option("--db", db, "Squeezing in dB (alternative to --sigma2)");
    samples_opt = cmd->add_option("--samples", samples, "Number of Monte Carlo samples");
    seed_opt = cmd->add_option("--seed", seed, "RNG seed (fixed default for reproducibility)");
    convention_opt = cmd->add_option("--convention", convention,
                                     "Error counting: half-cell or exact-modular")
                         ->check(CLI::IsMember({"half-cell", "exact-modular"}));
    common.attach(cmd);
  }

  void run() {
    const ConfigFile cfg(common.config_path);
    cfg.apply(gate_opt, "gate", gate_name);
    cfg.apply(sigma2_opt, "sigma2", sigma2);
    cfg.apply(db_opt, "db", db);
    cfg.apply(samples_opt, "samples", samples);
    cfg.apply(seed_opt, "seed", seed);
    cfg.apply(convention_opt, "convention", convention);
    cfg.apply(common.format_opt, "format", common.format);
    if (!cfg.given(gate_opt, "gate")) throw UsageError("--gate is required");

    const bool have_sigma2 = cfg.given(sigma2_opt, "sigma2");
    const bool have_db = cfg.given(db_opt, "db");
    if (have_sigma2 == have_db) {
      throw UsageError("exactly one of --sigma2 or --db is required");
    }
    const double s2 = have_sigma2 ? sigma2 : gkpft::sigma2_from_squeezing_db(db);

    gkpft::MCConfig mc_cfg;
    try {
      mc_cfg.gate = gkpft::gate_from_name(gate_name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--gate: ") + e.what());
    }
    mc_cfg.sigma2 = s2;
    mc_cfg.samples = samples;
    mc_cfg.seed = seed;
    mc_cfg.convention = gkpft::convention_from_name(convention);
    try {
      mc_cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    const gkpft::MCResult result = gkpft::simulate(mc_cfg);
    const double analytic = gkpft::p_err_gate(mc_cfg.gate, s2);
    const gkpft::Mat<double> model =
        gkpft::propagate(gkpft::GateSchedule::standard(mc_cfg.gate))
            .row("eta4_c")
            .evaluate(gkpft::NoiseModel::symmetric(s2));

    OutputRecord record;
    record.command = "mc";
    record.parameters["gate"] = gkpft::gate_name(mc_cfg.gate);
    record.parameters["sigma2"] = s2;
    record.parameters["samples"] = samples;
    record.parameters["seed"] = seed;
    record.parameters["convention"] = convention;
    // Row key: (quantity, a, b). fail_rate uses a = step, b = rail index;
    // the eta rows use matrix indices; scalars use -1.
    record.columns = {"quantity", "a", "b", "value"};
    record.add_row({std::string("p_err_hat"), std::int64_t{-1}, std::int64_t{-1}, result.p_err_hat});
    record.add_row({std::string("std_err"), std::int64_t{-1}, std::int64_t{-1}, result.std_err});
    record.add_row({std::string("analytic_p_err"), std::int64_t{-1}, std::int64_t{-1}, analytic});
    const int n_modes = mc_cfg.gate == gkpft::Gate::CZ ? 2 : 1;
    for (std::size_t idx = 0; idx < result.per_step_fail_rates.size(); ++idx) {
      const std::int64_t step = 3 + static_cast<std::int64_t>(idx) / n_modes;
      const std::int64_t rail = static_cast<std::int64_t>(idx) % n_modes;
      record.add_row({std::string("fail_rate"), step, rail, result.per_step_fail_rates[idx]});
    }
    for (int r = 0; r < result.empirical_eta.dim(); ++r) {
      for (int c = 0; c < result.empirical_eta.dim(); ++c) {
        record.add_row({std::string("empirical_eta"), std::int64_t{r}, std::int64_t{c},
                        result.empirical_eta(r, c)});
      }
    }
    for (int r = 0; r < model.dim(); ++r) {
      for (int c = 0; c < model.dim(); ++c) {
        record.add_row({std::string("model_eta"), std::int64_t{r}, std::int64_t{c}, model(r, c)});
      }
    }
    fill_metadata(record, common, seed);
    emit(record, common);
  }
};

// ---------------------------------------------------------------------------
// distill

struct DistillCmd {
  CommonOpts common;
  std::string sigma2_list;
  std::string db_list;
  double blur = 0.0;
  double envelope = 0.0;
  double product = 0.0;
  long smax = 0;
  CLI::Option* sigma2_opt = nullptr;
  CLI::Option* db_opt = nullptr;
  CLI::Option* blur_opt = nullptr;
  CLI::Option* envelope_opt = nullptr;
  CLI::Option* product_opt = nullptr;
  CLI::Option* smax_opt = nullptr;

  void attach(CLI::App* cmd) {
    sigma2_opt = cmd->add_option("--sigma2", sigma2_list,
                                 "Comma-separated noise variances (delta = epsilon)");
    db_opt = cmd->add_option("--db", db_list, "Comma-separated squeezing values in dB");
    blur_opt = cmd->add_option("--blur", blur, "Spike blur variance (default 3*sigma2)");
    envelope_opt =
        cmd->add_option("--envelope", envelope, "Envelope variance (default 1/(4*sigma2))");
    product_opt = cmd->add_option("--product", product,
                                  "Target blur*envelope product; rescales the blur");
    smax_opt = cmd->add_option("--smax", smax, "Lattice truncation override (grown if too small)");
    common.attach(cmd);
  }

  void run() {
    const ConfigFile cfg(common.config_path);
    cfg.apply_list(sigma2_opt, "sigma2", sigma2_list);
    cfg.apply_list(db_opt, "db", db_list);
    cfg.apply(blur_opt, "blur", blur);
    cfg.apply(envelope_opt, "envelope", envelope);
    cfg.apply(product_opt, "product", product);
    cfg.apply(smax_opt, "smax", smax);
    cfg.apply(common.format_opt, "format", common.format);

    const bool have_sigma2 = cfg.given(sigma2_opt, "sigma2");
    const bool have_db = cfg.given(db_opt, "db");
    if (have_sigma2 && have_db) {
      throw UsageError("--sigma2 and --db are mutually exclusive");
    }
    std::vector<double> sigma2_values;
    if (have_db) {
      for (double db : parse_double_list(db_list, "--db")) {
        sigma2_values.push_back(gkpft::sigma2_from_squeezing_db(db));
      }
    } else if (have_sigma2) {
      sigma2_values = parse_double_list(sigma2_list, "--sigma2");
    } else {
      sigma2_values = {26.0e-3, 13.8e-3, 9.16e-3, 6.80e-3, 5.38e-3, 4.44e-3};
    }

    OutputRecord record;
    record.command = "distill";
    record.parameters["sigma2"] = sigma2_values;
    if (cfg.given(blur_opt, "blur")) record.parameters["blur"] = blur;
    if (cfg.given(envelope_opt, "envelope")) record.parameters["envelope"] = envelope;
    if (cfg.given(product_opt, "product")) record.parameters["product"] = product;
    record.columns = {"sigma2", "blur_variance", "envelope_variance", "s_max",
                      "a_norm_plus", "a_norm_minus", "a0_plus", "a2_plus",
                      "a0_minus", "a2_minus", "p0_plus", "p2_plus",
                      "p0_minus", "p2_minus", "epsilon", "p_even"};

    for (double s2 : sigma2_values) {
      if (!(s2 > 0.0)) throw UsageError("--sigma2: values must be positive");
      gkpft::DistillationConfig dc = gkpft::DistillationConfig::defaults(s2);
      if (cfg.given(blur_opt, "blur")) dc.blur_variance = blur;
      if (cfg.given(envelope_opt, "envelope")) dc.envelope_variance = envelope;
      if (cfg.given(product_opt, "product")) dc.product_override = product;
      if (cfg.given(smax_opt, "smax")) dc.truncation = smax;
      try {
        dc.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const gkpft::DistillationConfig resolved = dc.resolved();
      if (dc.truncation != 0 && resolved.truncation > smax && cfg.given(smax_opt, "smax")) {
        std::cerr << "warning: --smax " << smax << " is below the envelope tail bound; using "
                  << resolved.truncation << "\n";
      }
      const gkpft::DistillationResult res = gkpft::distill_stats(dc);
      record.add_row({s2, resolved.blur_variance, resolved.envelope_variance,
                      std::int64_t{res.s_max}, res.a_norm_plus, res.a_norm_minus, res.a0_plus,
                      res.a2_plus, res.a0_minus, res.a2_minus, res.p0_plus, res.p2_plus,
                      res.p0_minus, res.p2_minus, res.epsilon, res.p_even});
    }
    fill_metadata(record, common);
    emit(record, common);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fault-tolerance analysis of GKP-encoded computation on CV cluster states"};
  app.require_subcommand(1);

  ThresholdsCmd thresholds_cmd;
  thresholds_cmd.attach(app.add_subcommand(
      "thresholds", "Squeezing required for target gate error rates"));

  CurveCmd curve_cmd;
  curve_cmd.attach(app.add_subcommand("curve", "Gate error rate vs squeezing (CZ, the noisiest gate)"));

  NoiseTableCmd noise_table_cmd;
  noise_table_cmd.attach(app.add_subcommand(
      "noise-table", "Error-matrix propagation table for one gate schedule"));

  McCmd mc_cmd;
  mc_cmd.attach(app.add_subcommand("mc", "Monte Carlo shift-error simulation of one gate"));

  DistillCmd distill_cmd;
  distill_cmd.attach(app.add_subcommand(
      "distill", "Hadamard-eigenstate identification error and success probabilities"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("thresholds")) thresholds_cmd.run();
    if (app.got_subcommand("curve")) curve_cmd.run();
    if (app.got_subcommand("noise-table")) noise_table_cmd.run();
    if (app.got_subcommand("mc")) mc_cmd.run();
    if (app.got_subcommand("distill")) distill_cmd.run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gkpft::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
