#pragma once

#include <optional>
#include <vector>

#include "dlm/sparse_solver.hpp"
#include "dlm/stage1.hpp"
#include "dlm/waveform.hpp"

namespace dlm {

// Coarse-to-fine grid schedule; step r of R runs at resolution
// 2^(R-r) * d_res with the delay grids linked by c * tau_res = d_res.
struct GridConfig {
  double d_res = 1.0;       // final location resolution, meters
  int refinement_steps = 5; // R
  int neighbor_span = 2;    // stencil half-width in grid steps

  double tau_res(double c) const { return d_res / c; }
  double step_d_res(int r) const {  // r is 1-based
    return std::ldexp(d_res, refinement_steps - r);
  }
};

struct LocationGrid {
  std::vector<Position> points;
  double resolution = 0.0;  // meters
  int size() const { return static_cast<int>(points.size()); }
};

struct DlmParams {
  double mu = 0.2;          // u_q = 1/sqrt(S_q - mu)
  double gamma = 0.99;      // chi-squared quantile for epsilon
  double threshold = 1.0 / 30.0;  // T, spurious-location gate
  double solver_tol = 1e-5;
  long solver_budget = 50000;
  // Relative energy floor added to epsilon so that noiseless data remains
  // feasible despite off-grid representation error at coarse steps.
  double epsilon_floor_rel = 1e-4;
  double stage2_tau_max = 0.0;    // 0 = scenario tau_max
};

struct LocalizationResult {
  std::vector<Position> positions;              // per source
  std::vector<int> los_count_estimate;          // S_hat per source
  std::vector<Eigen::VectorXcd> los_amplitudes; // per source, size L
  std::vector<bool> fallback_used;              // per source
  double epsilon = 0.0;
  double stage2_seconds = 0.0;
};

// epsilon = (sigma_w^2 / 2) * F^-1(gamma, 2NL).
double set_epsilon(double sigma_w, int num_samples, int num_sensors,
                   double gamma);

// u = 1/sqrt(S - mu); lies in the open window (1/sqrt(S), 1/sqrt(S-1)).
double u_from_S(int S, double mu);

struct Stage2Grids {
  std::vector<LocationGrid> locations;            // per source
  std::vector<std::vector<DelayGrid>> delays;     // [q][l]
};

// Step-1 grids: uniform coverage of the search area and of [0, tau_max] at
// the coarsest resolutions 2^(R-1) * (d_res, tau_res).
Stage2Grids initial_grids(const Scenario& scn, const GridConfig& gcfg,
                          double tau_max);

// Stencil refinement around active points, clipped to the area / delay
// range, duplicates removed. An empty active set keeps the previous grid
// for that source or pair.
LocationGrid refine_location_grid(const std::vector<Position>& active,
                                  const LocationGrid& previous,
                                  double next_resolution, int span,
                                  const Rect& area);
DelayGrid refine_delay_grid(const std::vector<double>& active,
                            const DelayGrid& previous, double next_resolution,
                            int span, double tau_max);

// Column metadata parallel to a GroupSparseProblem built from grids.
struct Stage2Problem {
  GroupSparseProblem prob;
  std::vector<int> loc_source;        // per location column
  std::vector<int> loc_point;         // index into the source's grid
  std::vector<std::vector<int>> del_source;     // [l][j]
  std::vector<std::vector<double>> del_delay;   // [l][j]
};

// Dictionaries of exact delayed waveforms at tau_l(theta_g) and at the grid
// delays; location groups weighted 1/u_q, delay singletons weighted 1.
Stage2Problem assemble_problem(const SignalMatrix& signals,
                               const std::vector<WaveformSampler>& samplers,
                               const Scenario& scn, const Stage2Grids& grids,
                               const std::vector<double>& u, double epsilon);

struct SelectedLocation {
  Position position;
  Eigen::VectorXcd amplitudes;  // per sensor
  double strength = 0.0;        // S_hat-th largest |amplitude|
};

// Threshold test of the S_hat-th largest LOS amplitude against A*T followed
// by largest-strength selection; nullopt when no location survives.
std::vector<std::optional<SelectedLocation>> prune_and_select(
    const Stage2Problem& sp, const GroupSparseSolution& sol,
    const std::vector<int>& s_hat, double threshold);

// argmax over the grid of sum_l |s_q(tau_l(p))^H r_l|^2 / ||s_q(tau_l(p))||^2.
// Ties break toward the lowest grid index.
std::vector<Position> fallback_correlation_localize(
    const SignalMatrix& signals, const std::vector<WaveformSampler>& samplers,
    const Scenario& scn, const LocationGrid& grid);

// Uniform grid over the full search area at the final resolution (the grid
// used by the fallback and the correlation baselines).
LocationGrid full_area_grid(const Scenario& scn, double d_res);

// The complete localizer: Stage-1 deconvolution, epsilon rule, low-SNR
// fallback guard, S_hat estimation loop with R refinement rounds per pass,
// spurious pruning and selection.
LocalizationResult run_dlm(const SignalMatrix& signals,
                           const std::vector<Waveform>& waveforms,
                           const Scenario& scn, double sigma_w,
                           const DlmParams& params, const GridConfig& gcfg,
                           const Stage1Params& s1 = Stage1Params{});

// Stage-2 only, fixed u (no S_hat loop, no Stage 1): runs the R refinement
// rounds and reports the active locations of the final solution. Used by
// the recovery-guarantee experiment.
struct Stage2Outcome {
  std::vector<std::vector<Position>> active_locations;  // per source
  std::vector<std::optional<SelectedLocation>> selected;
  GroupSparseSolution solution;
};
Stage2Outcome run_stage2_fixed_u(const SignalMatrix& signals,
                                 const std::vector<WaveformSampler>& samplers,
                                 const Scenario& scn,
                                 const std::vector<double>& u,
                                 const std::vector<int>& s_hat,
                                 double epsilon, const DlmParams& params,
                                 const GridConfig& gcfg);

}  // namespace dlm
