#pragma once

#include <optional>
#include <vector>

#include "dlm/stage1.hpp"
#include "dlm/stage2.hpp"

namespace dlm {

// First-arrival TOA estimates; nullopt marks a sensor with no detection.
struct ToaSet {
  // toa[q][l]
  std::vector<std::vector<std::optional<double>>> toa;
};

// Direct Position Determination: highest summed normalized correlation over
// the grid. Shares its implementation with the low-SNR fallback.
std::vector<Position> dpd_localize(const SignalMatrix& signals,
                                   const std::vector<WaveformSampler>& samplers,
                                   const Scenario& scn,
                                   const LocationGrid& grid);

// Stage-1 NLOS cancellation followed by DPD.
std::vector<Position> dpd_with_mitigation(
    const SignalMatrix& signals, const std::vector<WaveformSampler>& samplers,
    const Scenario& scn, const LocationGrid& grid, double sigma_w,
    double tau_max, const Stage1Params& s1 = Stage1Params{});

// Threshold-based matched filter: earliest delay whose |correlation| exceeds
// frac_threshold * peak, refined to the local maximum. nullopt when the
// peak fails the 5-sigma noise gate.
std::optional<double> matched_filter_toa(const Eigen::VectorXcd& r_l,
                                         const WaveformSampler& sampler,
                                         double frac_threshold, double sigma_w,
                                         double tau_max, double tau_res);

// Compressive-sensing TOA: earliest Lasso-detected delay per source.
std::vector<std::optional<double>> cs_toa(const Eigen::VectorXcd& r_l,
                                          const std::vector<WaveformSampler>& samplers,
                                          double tau_max,
                                          const Stage1Params& params,
                                          double sigma_w);

// Residual-test multilateration: nonlinear least squares on every sensor
// subset of size >= 3, smallest size-normalized residual wins. Estimates
// are clipped to the search area. Throws Error(InsufficientSensors) with
// fewer than 3 TOAs.
Position multilaterate_nlos_mitigated(
    const std::vector<std::optional<double>>& toas, const Scenario& scn);

}  // namespace dlm
