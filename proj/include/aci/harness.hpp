#pragma once

#include "aci/data.hpp"
#include "aci/inductive.hpp"
#include "aci/metrics.hpp"
#include "aci/predictor.hpp"
#include "aci/trace.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace aci {

/// Everything needed to reproduce one experiment. Parsed from a flat
/// `key = value` file; command-line flags are applied afterwards and win.
struct ExperimentConfig {
  std::string mode = "online";  // online | offline | sweep | lemma-stress
  std::string dataset = "synth-regression";  // wine | usps | synth-regression | synth-class
  std::string predictor = "crr";
  std::string scorer = "knn";  // underlying model of the inductive predictors
  std::optional<int> k;  // per-predictor default when unset
  double ridge = 0.0;
  bool intercept = false;

  double eps = 0.1;
  std::optional<double> eps1;
  std::optional<double> delta;
  std::optional<double> gamma;

  std::size_t warmup = 100;
  std::vector<std::uint64_t> seeds{0};
  std::optional<double> cal_fraction;
  std::vector<double> cal_fractions;
  std::optional<std::size_t> subsample;  // first n examples; 0 = all
  unsigned threads = 0;                  // sweep workers; 0 = hardware

  std::string out_dir;
  std::string format = "csv";  // csv | json

  std::string wine_red;
  std::string wine_white;
  WineOrder wine_order = WineOrder::white_then_red;
  bool zscore = false;
  std::string usps_train;
  std::string usps_test;
  StreamSpec synth;

  WinklerClamp winkler_clamp;
};

/// Applies one `key = value` setting. Unknown keys are a ConfigError.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config_file(const std::filesystem::path& path);

/// Canonical `key = value` listing (sorted keys); the input to config_hash.
std::string to_kv(const ExperimentConfig& cfg);
std::uint64_t config_hash(const ExperimentConfig& cfg);

/// k used by a predictor/scorer when none was configured.
int effective_k(const ExperimentConfig& cfg);

/// gamma if configured, else gamma_for_bound(eps1, delta, n_steps) with
/// delta defaulting to 0.01.
double resolve_gamma(const ExperimentConfig& cfg, std::int64_t n_steps);

bool is_online_predictor(const std::string& id);
bool is_offline_predictor(const std::string& id);

/// The data a run consumes: an ordered stream for online runs, or
/// train/test for offline runs.
struct LoadedData {
  Dataset train;
  Dataset test;
  std::vector<std::string> warnings;
};

LoadedData load_online_data(const ExperimentConfig& cfg);
LoadedData load_offline_data(const ExperimentConfig& cfg);

std::unique_ptr<OnlinePredictor> make_online_predictor(const ExperimentConfig& cfg,
                                                       const Dataset& data,
                                                       std::uint64_t seed);

/// Fits the scorer on the (proper) training data and calibrates if needed.
std::unique_ptr<OfflinePredictor> fit_offline_predictor(const ExperimentConfig& cfg,
                                                        const Dataset& train,
                                                        std::uint64_t seed,
                                                        std::optional<double> cal_fraction);

struct RunResult {
  std::string predictor;
  std::uint64_t seed = 0;
  std::optional<double> cal_fraction;
  Trace trace;
  RunSummary summary;
  GuaranteeReport guarantee;
  double seconds = 0.0;
  std::vector<std::string> warnings;
};

struct LoopOptions {
  double eps = 0.1;
  double gamma = 0.01;
  double eps1 = 0.1;
  WinklerClamp clamp;
};

/// The online protocol: predict at eps_n, score, reveal, learn, update.
/// The first `warmup` rows of `stream` only seed the history.
RunResult run_aci_online(OnlinePredictor& predictor, const Dataset& stream,
                         std::size_t warmup, const LoopOptions& options);

/// The offline protocol: a fixed prediction rule, eps updated per example.
RunResult run_aci_offline(OfflinePredictor& predictor, const Dataset& test,
                          const LoopOptions& options);

RunResult run_online(const ExperimentConfig& cfg);
RunResult run_online(const ExperimentConfig& cfg, const Dataset& stream, std::uint64_t seed);

RunResult run_offline(const ExperimentConfig& cfg);
RunResult run_offline(const ExperimentConfig& cfg, const Dataset& train, const Dataset& test,
                      std::uint64_t seed, std::optional<double> cal_fraction);

struct SweepRow {
  std::string method;
  std::optional<double> cal_fraction;
  std::string metric;
  MetricCI ci;
};

struct SweepResult {
  std::vector<RunResult> runs;  // traces dropped, summaries kept
  std::vector<SweepRow> rows;
  std::size_t icp_cells = 0;
  std::size_t inccp_cells = 0;
  bool all_bounds_satisfied = true;
};

/// ICP over every (fraction, seed); INCCP once per seed. The ICP/INCCP pair
/// is picked from cfg.predictor's task (classification or regression).
SweepResult run_sweep(const ExperimentConfig& cfg);
SweepResult run_sweep(const ExperimentConfig& cfg, const Dataset& train, const Dataset& test);

/// One line per (predictor, stream, seed) of the coverage stress suite.
struct StressLine {
  std::string predictor;
  std::string stream;
  std::uint64_t seed = 0;
  RunSummary summary;
};

std::vector<StressLine> run_lemma_stress(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

/// Nine significant digits; "inf"/"-inf"; "" for nullopt.
std::string format_real(double v);

void write_trace_csv(std::ostream& out, const Trace& trace);
Trace read_trace_csv(std::istream& in);
void write_trace_json(std::ostream& out, const Trace& trace);

void emit_trace(const std::filesystem::path& path, const Trace& trace,
                const std::string& format);
void emit_summary(const std::filesystem::path& path, const RunResult& run,
                  const ExperimentConfig& cfg, const std::string& format);
void emit_sweep(const std::filesystem::path& path, const SweepResult& sweep,
                const std::string& format);
void write_manifest(const std::filesystem::path& path, const ExperimentConfig& cfg,
                    const std::vector<const RunResult*>& runs);

/// Writes trace, summary and manifest for one run into cfg.out_dir.
void emit_run(const ExperimentConfig& cfg, const RunResult& run);

}  // namespace aci
