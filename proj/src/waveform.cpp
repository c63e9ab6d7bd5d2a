#include "dlm/waveform.hpp"

#include <cmath>

#include "dlm/rng.hpp"

namespace dlm {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

Complex Waveform::value(double t) const {
  const int K = order();
  Complex acc(0.0, 0.0);
  for (int k = -K; k <= K; ++k)
    acc += coeff(k) * std::polar(1.0, kTwoPi * k * t / period);
  return acc;
}

double waveform_period(double tau_max, double f_s, int num_samples) {
  double t = num_samples / f_s + tau_max;
  double cycles = std::ceil(t * f_s - 1e-9);
  return cycles / f_s;
}

Waveform generate_waveform(std::uint64_t seed, double bandwidth,
                           double period) {
  if (bandwidth <= 0.0 || period <= 0.0)
    throw Error(ErrorCode::InvalidArgument,
                "generate_waveform: bandwidth and period must be positive");
  const int K = static_cast<int>(std::floor(bandwidth * period / 2.0 + 1e-12));
  Waveform w;
  w.period = period;
  w.bandwidth = bandwidth;
  w.unit_power = true;
  w.fourier_coeffs.resize(2 * K + 1);
  Rng rng(seed);
  for (int j = 0; j < 2 * K + 1; ++j) w.fourier_coeffs(j) = complex_gaussian(rng);
  // Mean of |s|^2 over one period equals the coefficient energy.
  w.fourier_coeffs /= w.fourier_coeffs.norm();
  return w;
}

Eigen::VectorXcd sample_delayed(const Waveform& w, double tau, double f_s,
                                int num_samples) {
  if (tau < 0.0)
    throw Error(ErrorCode::WrapViolation, "sample_delayed: negative delay");
  if (num_samples / f_s + tau > w.period * (1.0 + 1e-12))
    throw Error(ErrorCode::WrapViolation,
                "sample_delayed: window plus delay exceeds the period");
  Eigen::VectorXcd out(num_samples);
  for (int n = 0; n < num_samples; ++n) out(n) = w.value(n / f_s - tau);
  return out;
}

WaveformSampler::WaveformSampler(const Waveform& w, double f_s,
                                 int num_samples)
    : wave_(&w), fs_(f_s), n_(num_samples) {
  const int K = w.order();
  basis_.resize(n_, 2 * K + 1);
  for (int j = 0; j < 2 * K + 1; ++j) {
    const int k = j - K;
    const double w_k = kTwoPi * k / w.period;
    for (int n = 0; n < n_; ++n) basis_(n, j) = std::polar(1.0, w_k * n / fs_);
  }
  // ||s(tau)||^2 = Re sum_m D_m S_m e^{-i 2 pi m tau / T}, m = k - k'.
  window_gram_.resize(4 * K + 1);
  for (int m = -2 * K; m <= 2 * K; ++m) {
    Complex d_m(0.0, 0.0);
    const double w_m = kTwoPi * m / w.period;
    for (int n = 0; n < n_; ++n) d_m += std::polar(1.0, w_m * n / fs_);
    Complex s_m(0.0, 0.0);
    for (int k = -K; k <= K; ++k) {
      const int k2 = k - m;
      if (k2 < -K || k2 > K) continue;
      s_m += w.coeff(k) * std::conj(w.coeff(k2));
    }
    window_gram_(m + 2 * K) = d_m * s_m;
  }
}

void WaveformSampler::column_into(double tau,
                                  Eigen::Ref<Eigen::VectorXcd> out) const {
  const int K = wave_->order();
  Eigen::VectorXcd d(2 * K + 1);
  for (int j = 0; j < 2 * K + 1; ++j) {
    const int k = j - K;
    d(j) = wave_->fourier_coeffs(j) *
           std::polar(1.0, -kTwoPi * k * tau / wave_->period);
  }
  out.noalias() = basis_ * d;
}

Eigen::VectorXcd WaveformSampler::column(double tau) const {
  Eigen::VectorXcd out(n_);
  column_into(tau, out);
  return out;
}

double WaveformSampler::norm_sq(double tau) const {
  const int K = wave_->order();
  double acc = 0.0;
  for (int m = -2 * K; m <= 2 * K; ++m) {
    Complex term = window_gram_(m + 2 * K) *
                   std::polar(1.0, -kTwoPi * m * tau / wave_->period);
    acc += term.real();
  }
  return acc;
}

Eigen::VectorXcd WaveformSampler::data_spectrum(
    const Eigen::Ref<const Eigen::VectorXcd>& r) const {
  return basis_.adjoint() * r;
}

Complex WaveformSampler::correlation(const Eigen::VectorXcd& spectrum,
                                     double tau) const {
  const int K = wave_->order();
  Complex acc(0.0, 0.0);
  for (int j = 0; j < 2 * K + 1; ++j) {
    const int k = j - K;
    acc += std::conj(wave_->fourier_coeffs(j)) *
           std::polar(1.0, kTwoPi * k * tau / wave_->period) * spectrum(j);
  }
  return acc;
}

SignalMatrix synthesize_received(const Scenario& scn,
                                 const std::vector<Waveform>& waveforms,
                                 const ChannelRealization& ch, double sigma_w,
                                 double f_s, int num_samples,
                                 std::uint64_t seed) {
  const int L = scn.num_sensors();
  const int Q = scn.num_sources();
  if (static_cast<int>(waveforms.size()) != Q)
    throw Error(ErrorCode::InvalidArgument,
                "synthesize_received: one waveform per source required");
  for (const auto& w : waveforms)
    if (f_s < 2.0 * w.bandwidth * (1.0 - 1e-12))
      throw Error(ErrorCode::InvalidArgument,
                  "synthesize_received: Nyquist violated (f_s < 2B)");

  std::vector<WaveformSampler> samplers;
  samplers.reserve(Q);
  for (const auto& w : waveforms) samplers.emplace_back(w, f_s, num_samples);

  SignalMatrix out;
  out.sample_rate = f_s;
  out.samples = Eigen::MatrixXcd::Zero(num_samples, L);
  Eigen::VectorXcd col(num_samples);
  for (int q = 0; q < Q; ++q) {
    for (int l = 0; l < L; ++l) {
      const PairChannel& pc = ch.at(q, l);
      if (pc.los_present) {
        double tau = propagation_delay(scn.sources[q], scn.sensors[l], scn.c);
        if (tau > scn.tau_max)
          throw Error(ErrorCode::DelayOutOfRange,
                      "synthesize_received: LOS delay beyond tau_max");
        samplers[q].column_into(tau, col);
        out.samples.col(l) += pc.los_amplitude * col;
      }
      for (const auto& path : pc.nlos) {
        if (path.delay > scn.tau_max || path.delay < 0.0)
          throw Error(ErrorCode::DelayOutOfRange,
                      "synthesize_received: NLOS delay beyond tau_max");
        samplers[q].column_into(path.delay, col);
        out.samples.col(l) += path.amplitude * col;
      }
    }
  }
  if (sigma_w > 0.0) {
    Rng rng(seed);
    for (int l = 0; l < L; ++l)
      for (int n = 0; n < num_samples; ++n)
        out.samples(n, l) += sigma_w * complex_gaussian(rng);
  }
  return out;
}

}  // namespace dlm
