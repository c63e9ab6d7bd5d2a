#include "dlm/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dlm/rng.hpp"

namespace dlm {

namespace {

// Log-normal tap modulus: power_dB = 10 log10(mean_power) + N(0, std_db^2).
double lognormal_amplitude(double mean_power, double std_db, Rng& rng) {
  std::normal_distribution<double> n(0.0, std_db);
  double db = 10.0 * std::log10(mean_power) + n(rng);
  return std::sqrt(std::pow(10.0, db / 10.0));
}

}  // namespace

ChannelRealization draw_turin_channel(std::uint64_t seed, const Scenario& scn,
                                      const TurinParams& params) {
  if (params.mean_interarrival <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "turin: mean_interarrival <= 0");
  if (params.t_rms < 0.0)
    throw Error(ErrorCode::InvalidArgument, "turin: t_rms < 0");
  const int L = scn.num_sensors();
  const int Q = scn.num_sources();
  if (params.num_blocked_sensors < 0 || params.num_blocked_sensors > L)
    throw Error(ErrorCode::InvalidArgument, "turin: blocked count outside [0, L]");

  Rng rng(seed);

  // One blocked subset per trial, shared by all sources.
  std::vector<int> order(L);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> blocked(L, false);
  for (int i = 0; i < params.num_blocked_sensors; ++i) blocked[order[i]] = true;

  ChannelRealization ch;
  ch.num_sources = Q;
  ch.num_sensors = L;
  ch.pairs.resize(static_cast<std::size_t>(Q) * L);

  std::exponential_distribution<double> gap(1.0 / params.mean_interarrival);
  for (int q = 0; q < Q; ++q) {
    for (int l = 0; l < L; ++l) {
      PairChannel& pc = ch.at(q, l);
      const double t0 = propagation_delay(scn.sources[q], scn.sensors[l], scn.c);
      pc.los_present = !blocked[l];
      if (pc.los_present) {
        double amp = params.lognormal_los
                         ? lognormal_amplitude(params.los_power,
                                               params.tap_power_std_db, rng)
                         : std::sqrt(params.los_power);
        pc.los_amplitude = amp * unit_phase(rng);
      }
      if (params.t_rms <= 0.0) continue;  // degenerate spread: no multipath
      double t = t0 + gap(rng);
      while (t <= scn.tau_max) {
        double mean_power =
            params.los_power * std::exp(-(t - t0) / params.t_rms);
        double amp =
            lognormal_amplitude(mean_power, params.tap_power_std_db, rng);
        pc.nlos.push_back({t, amp * unit_phase(rng)});
        t += gap(rng);
      }
    }
  }
  return ch;
}

ChannelRealization fixed_channel(const Scenario& scn,
                                 const FixedChannelSpec& spec) {
  const int L = scn.num_sensors();
  const int Q = scn.num_sources();
  if (static_cast<int>(spec.pairs.size()) != Q * L)
    throw Error(ErrorCode::InconsistentSpec,
                "fixed_channel: spec must list Q*L pairs");
  ChannelRealization ch;
  ch.num_sources = Q;
  ch.num_sensors = L;
  ch.pairs.resize(spec.pairs.size());
  for (int q = 0; q < Q; ++q) {
    for (int l = 0; l < L; ++l) {
      const FixedPairSpec& in = spec.pairs[q * L + l];
      PairChannel& pc = ch.at(q, l);
      const double t0 = propagation_delay(scn.sources[q], scn.sensors[l], scn.c);
      pc.los_present = in.los_present;
      pc.los_amplitude = in.los_present ? in.los_amplitude
                                        : std::complex<double>(0.0, 0.0);
      for (const auto& path : in.nlos) {
        if (path.delay <= t0)
          throw Error(ErrorCode::InconsistentSpec,
                      "fixed_channel: NLOS delay does not exceed the LOS delay");
        pc.nlos.push_back(path);
      }
    }
  }
  return ch;
}

}  // namespace dlm
