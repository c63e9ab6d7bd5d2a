#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dlm/waveform.hpp"

namespace dlm {

// Uniform delay grid {0, tau_res, ..., floor(tau_max/tau_res)*tau_res}.
struct DelayGrid {
  double resolution = 0.0;  // seconds
  std::vector<double> delays;

  static DelayGrid uniform(double tau_res, double tau_max);
  int size() const { return static_cast<int>(delays.size()); }
};

struct DetectedPath {
  int source = 0;
  int sensor = 0;
  double delay = 0.0;                    // seconds
  std::complex<double> amplitude{0.0, 0.0};
};

struct Stage1Params {
  double tau_res = 0.0;      // 0 = 1/(2 f_s)
  double lambda = -1.0;      // <0 = universal-threshold rule from sigma_w
  double prune_frac = 0.1;   // keep |x| >= prune_frac * max|x|
  long max_iterations = 50000;
};

// Dictionary of delayed waveforms, source-major then delay:
// column (q, d) = s_q(d * tau_res).
Eigen::MatrixXcd build_dictionary(const std::vector<WaveformSampler>& samplers,
                                  const DelayGrid& grid);

// Penalized-Lasso delay estimation on the expanded dictionary followed by
// relative-amplitude pruning; per-source delay lists sorted ascending.
std::vector<std::vector<double>> estimate_delays(
    const Eigen::VectorXcd& r_l, const Eigen::MatrixXcd& dictionary,
    const DelayGrid& grid, int num_sources, double lambda, double prune_frac,
    long max_iterations = 50000);

// Least-squares amplitudes over the detected delays (minimum-norm solution
// when rank-deficient); amplitudes returned per source, aligned with the
// delay lists.
std::vector<std::vector<std::complex<double>>> fit_amplitudes(
    const Eigen::VectorXcd& r_l,
    const std::vector<std::vector<double>>& delays,
    const std::vector<WaveformSampler>& samplers);

// Subtracts every detected path except the earliest of each source.
Eigen::VectorXcd cancel_multipath(
    const Eigen::VectorXcd& r_l,
    const std::vector<std::vector<double>>& delays,
    const std::vector<std::vector<std::complex<double>>>& amplitudes,
    const std::vector<WaveformSampler>& samplers);

// Universal-threshold default: sigma_w * sqrt(2 ln(Q |D|)) * max column norm.
double default_stage1_lambda(double sigma_w, const Eigen::MatrixXcd& dictionary);

// Full Stage-1 pass over all sensors: estimate delays, refit amplitudes,
// cancel all but the first arrival per source. Sensors are independent.
SignalMatrix mitigate_multipath(const SignalMatrix& signals,
                                const std::vector<WaveformSampler>& samplers,
                                double sigma_w, double tau_max,
                                const Stage1Params& params);

}  // namespace dlm
