#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "dlm/channel.hpp"
#include "dlm/geometry.hpp"

namespace dlm {

using Complex = std::complex<double>;

// Periodic bandlimited baseband signal
//   s(t) = sum_{k=-K..K} c_k exp(i 2 pi k t / T_p),
// which permits exact evaluation at arbitrary fractional delays. K is
// floor(B*T_p/2) so the two-sided baseband extent is B.
struct Waveform {
  Eigen::VectorXcd fourier_coeffs;  // index 0 -> k = -K, size 2K+1
  double period = 0.0;              // T_p, seconds
  double bandwidth = 0.0;           // B, hertz (two-sided)
  bool unit_power = true;

  int order() const { return (static_cast<int>(fourier_coeffs.size()) - 1) / 2; }
  Complex coeff(int k) const { return fourier_coeffs(k + order()); }
  // s(t), exact Fourier synthesis
  Complex value(double t) const;
};

// N samples per sensor, one column per sensor.
struct SignalMatrix {
  Eigen::MatrixXcd samples;  // N x L
  double sample_rate = 0.0;  // f_s, hertz

  int num_samples() const { return static_cast<int>(samples.rows()); }
  int num_sensors() const { return static_cast<int>(samples.cols()); }
};

// Smallest period covering the observation window plus the largest delay,
// rounded up so the period spans a whole number of samples.
double waveform_period(double tau_max, double f_s, int num_samples);

// White-Gaussian coefficients filtered to bandwidth B, normalized to unit
// average power over one period. Deterministic for a fixed seed.
Waveform generate_waveform(std::uint64_t seed, double bandwidth,
                           double period);

// Entry n of the returned vector equals s(n/f_s - tau), evaluated exactly
// from the Fourier series. Throws Error(WrapViolation) when the delayed
// window does not fit the period (N/f_s + tau > T_p) or tau < 0.
Eigen::VectorXcd sample_delayed(const Waveform& w, double tau, double f_s,
                                int num_samples);

// Evaluation helper shared by dictionary construction, correlation
// localizers and the matched filter. Precomputes the N x (2K+1) Fourier
// basis for the sample grid so a delayed column costs one small gemv, and
// correlations against fixed data cost O(K) per delay.
class WaveformSampler {
public:
  WaveformSampler(const Waveform& w, double f_s, int num_samples);

  const Waveform& waveform() const { return *wave_; }
  int num_samples() const { return n_; }
  double sample_rate() const { return fs_; }

  // Same values as sample_delayed, without revalidating the wrap bound.
  Eigen::VectorXcd column(double tau) const;
  void column_into(double tau, Eigen::Ref<Eigen::VectorXcd> out) const;

  // ||s(tau)||_2^2 over the N-sample window, exact.
  double norm_sq(double tau) const;

  // Precomputed spectrum of a data vector for fast s(tau)^H r evaluation.
  Eigen::VectorXcd data_spectrum(const Eigen::Ref<const Eigen::VectorXcd>& r) const;
  // s(tau)^H r given the precomputed spectrum of r.
  Complex correlation(const Eigen::VectorXcd& spectrum, double tau) const;

private:
  const Waveform* wave_;
  double fs_;
  int n_;
  Eigen::MatrixXcd basis_;        // N x (2K+1), basis_(n,j) = exp(i w_k n/fs)
  Eigen::VectorXcd window_gram_;  // size 4K+1, for norm_sq evaluation
};

// Sum of LOS and NLOS contributions of every source plus white circularly
// symmetric Gaussian noise of per-sample variance sigma_w^2. Blocked LOS
// paths contribute nothing. Throws Error(DelayOutOfRange) when a channel
// delay exceeds scn.tau_max.
SignalMatrix synthesize_received(const Scenario& scn,
                                 const std::vector<Waveform>& waveforms,
                                 const ChannelRealization& ch, double sigma_w,
                                 double f_s, int num_samples,
                                 std::uint64_t seed);

}  // namespace dlm
