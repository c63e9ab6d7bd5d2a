#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dlm/geometry.hpp"

namespace dlm {

// Turin urban multipath model: Poisson NLOS arrivals after the LOS time,
// exponential power delay profile, log-normal tap powers.
struct TurinParams {
  double mean_interarrival = 0.2e-6;  // seconds
  double t_rms = 0.2e-6;              // rms delay spread, seconds
  double tap_power_std_db = 10.0;     // dB
  int num_blocked_sensors = 1;
  double los_power = 1.0;             // linear power of a LOS path
  // When true the LOS tap power is perturbed by the same log-normal law as
  // the NLOS taps; default keeps LOS at fixed power with random phase.
  bool lognormal_los = false;
};

struct NlosPath {
  double delay = 0.0;                  // seconds, absolute
  std::complex<double> amplitude{0.0, 0.0};
};

struct PairChannel {
  bool los_present = true;
  std::complex<double> los_amplitude{0.0, 0.0};
  std::vector<NlosPath> nlos;
};

// One realization of the multipath channel for every (source, sensor) pair.
struct ChannelRealization {
  int num_sources = 0;
  int num_sensors = 0;
  std::vector<PairChannel> pairs;  // source-major: index q*L + l

  const PairChannel& at(int q, int l) const { return pairs[q * num_sensors + l]; }
  PairChannel& at(int q, int l) { return pairs[q * num_sensors + l]; }

  // Number of sensors receiving a LOS path from source q.
  int los_count(int q) const {
    int s = 0;
    for (int l = 0; l < num_sensors; ++l) s += at(q, l).los_present ? 1 : 0;
    return s;
  }
};

// Draws a Turin realization: NLOS arrival times form a Poisson process on
// (tau_los, tau_max], tap powers are log-normal around the exponential
// profile, and exactly num_blocked_sensors sensors (uniform, shared by all
// sources) lose their LOS flag. t_rms = 0 produces no NLOS paths.
ChannelRealization draw_turin_channel(std::uint64_t seed, const Scenario& scn,
                                      const TurinParams& params);

// Explicit deterministic channel description.
struct FixedPairSpec {
  bool los_present = true;
  std::complex<double> los_amplitude{1.0, 0.0};
  std::vector<NlosPath> nlos;
};

struct FixedChannelSpec {
  std::vector<FixedPairSpec> pairs;  // source-major, size Q*L
};

// Materializes the spec against the scenario geometry. Throws
// Error(InconsistentSpec) if an NLOS delay does not exceed the geometric
// LOS delay of its pair.
ChannelRealization fixed_channel(const Scenario& scn,
                                 const FixedChannelSpec& spec);

}  // namespace dlm
