#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlm/baselines.hpp"
#include "dlm/channel.hpp"
#include "dlm/stage2.hpp"

namespace dlm {

enum class Method { Dlm, Dpd, DpdMitigated, IndirectCs, IndirectMf };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

enum class ChannelModel { None, Turin, Fixed };

struct ExperimentConfig {
  Scenario scenario;
  ChannelModel channel_model = ChannelModel::Turin;
  TurinParams turin;
  FixedChannelSpec fixed;
  std::vector<double> snr_db = {30.0};
  int trials = 100;
  std::vector<Method> methods = {Method::Dlm};
  DlmParams dlm;
  GridConfig grids;
  Stage1Params stage1;
  double zeta = 0.0;          // meters; 0 = r/3
  std::uint64_t seed = 1;
  double bandwidth = 10e6;    // B, hertz
  double sample_rate = 20e6;  // f_s, hertz
  int num_samples = 100;      // N
  double los_power = 1.0;     // P_LOS in the SNR definition
  int workers = 0;            // 0 = hardware concurrency
  double mf_threshold = 0.3;  // matched-filter fraction of peak
};

struct MetricsRow {
  std::string method;
  std::string param;     // swept parameter name
  double value = 0.0;    // swept parameter value
  double p_correct = 0.0;
  double rmse = 0.0;     // normalized by the ranging resolution r = c/B
  double runtime_s = 0.0;
  int trials = 0;
};

struct TrialRecord {
  int trial = 0;
  int snr_index = 0;
  double snr_db = 0.0;
  Method method = Method::Dlm;
  std::vector<std::optional<Position>> estimates;  // per source
  double runtime_s = 0.0;
  bool ok = true;
  std::string error;
};

struct MonteCarloResult {
  std::vector<MetricsRow> rows;
  std::vector<TrialRecord> records;
};

// sigma_w^2 = N L P_los / 10^(snr/10).
double snr_to_sigma_sq(double snr_db, int num_samples, int num_sensors,
                       double p_los);

// Probability of correct recovery within radius zeta and rMSE normalized by
// the ranging resolution. Missing estimates count as misses; rMSE averages
// over available estimates.
MetricsRow compute_metrics(const std::vector<std::vector<std::optional<Position>>>& estimates,
                           const std::vector<Position>& truths, double zeta,
                           double ranging_resolution);

// Full Monte Carlo sweep: per-trial seeds derive from (master seed, trial,
// SNR index) so results do not depend on worker scheduling.
MonteCarloResult run_monte_carlo(const ExperimentConfig& cfg);

// Recovery-guarantee sweep on the fixed noiseless scene: for each v set
// u_1 = 1/sqrt(v) and run Stage 2 only; success is exactly one active
// location at the true source position.
struct TheoremPoint {
  double v = 0.0;
  double p_correct = 0.0;
  int trials = 0;
  double runtime_s = 0.0;
};
std::vector<TheoremPoint> run_theorem_experiment(
    const std::vector<double>& v_grid, int trials, const ExperimentConfig& cfg);

// The fixed single-source scene used by the recovery-guarantee experiment:
// five sensors at (+-40, +-40) and the origin, source at (20, 30), the
// sensor at (40, -40) blocked, one NLOS path of length 91 m at the origin
// sensor.
ExperimentConfig theorem_scene_config();

// The default scene of the comparative experiments: five sensors, source at
// (20, 30), 200 x 200 m area.
ExperimentConfig default_scene_config();

// CSV with header method,param,value,P,rMSE,runtime_s,trials. When
// plot_script is true a companion python script referencing the CSV columns
// is written next to it.
void emit_results(const std::vector<MetricsRow>& rows, const std::string& path,
                  bool plot_script = false);

// Flat key/value config file with [scenario], [channel], [dlm], [grids],
// [experiment] sections; positions are "x,y" meter pairs.
ExperimentConfig load_config(const std::string& path);
void apply_config_text(ExperimentConfig& cfg, const std::string& text);

double ranging_resolution(double c, double bandwidth);

}  // namespace dlm
