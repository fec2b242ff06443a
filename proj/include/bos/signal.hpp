#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bos::signal {

/// Time-stamped named scalar series as read from disk or a generator.
struct RawTrajectory {
  std::vector<double> t;
  std::vector<std::string> names;
  std::vector<std::vector<double>> channels;  // channels[c][i]

  size_t size() const { return t.size(); }
  int nchannels() const { return static_cast<int>(channels.size()); }
  int channel_index(const std::string& name) const;
  bool is_uniform(double rel_tol = 1e-9) const;
  double rate_hz() const;
};

/// Uniformly sampled state trajectory on [0, T].
struct ObservedTrajectory {
  double T = 0.0;
  double rate_hz = 0.0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;  // states[s][i]

  int nstates() const { return static_cast<int>(states.size()); }
  size_t nodes() const { return times.size(); }
  std::vector<double> at(size_t i) const;
  std::vector<double> sample(double time) const;  // linear interpolation, clamped
  void validate_uniform(double rel_tol = 1e-9) const;
};

enum class Strategy { kQuasiStatic, kMomentumTransfer, kPreferred };
enum class ModelKind { kIpm, kDpm };

Strategy strategy_from_string(const std::string& s);
std::string to_string(Strategy s);

/// Parameters of the synthetic Sit-to-Stand generator. Angles are per model
/// configuration channel (1 for the single pendulum, 2 for the double).
struct SynthStsSpec {
  Strategy strategy = Strategy::kPreferred;
  double duration = 1.5;                  // s
  std::vector<double> start_angles;       // rad
  std::vector<double> end_angles;         // rad
  double rate_hz = 100.0;
  std::uint64_t seed = 0;
};

struct LoadReport {
  size_t rows = 0;
  size_t comment_lines = 0;
};

/// Reads a trajectory CSV: '#' comments, header row naming channels with
/// first column `t` (seconds), numeric cells only.
RawTrajectory load_trajectory(const std::string& path,
                              const std::vector<std::string>& required_channels = {},
                              LoadReport* report = nullptr);

void write_trajectory_csv(const std::string& path, const RawTrajectory& traj);
void write_observed_csv(const std::string& path, const ObservedTrajectory& traj,
                        const std::vector<std::string>& state_names);

/// Single causal pass of the low-pass Butterworth (bilinear transform with
/// cutoff prewarping, cascaded second-order sections). Requires uniform
/// sampling and cutoff below Nyquist; even order.
RawTrajectory butterworth_lowpass_forward(const RawTrajectory& traj, int order = 4,
                                          double cutoff_hz = 2.0);

/// Zero-phase (forward-backward) low-pass Butterworth.
RawTrajectory butterworth_lowpass(const RawTrajectory& traj, int order = 4,
                                  double cutoff_hz = 2.0);

/// Linear interpolation onto a uniform grid covering the original span.
RawTrajectory resample_uniform(const RawTrajectory& traj, double rate_hz);

/// Central differences in the interior, second-order one-sided at the ends.
/// Exact for quadratics.
std::vector<double> finite_difference_velocity(const std::vector<double>& position,
                                               double dt);

/// Packs uniform channels (angles listed first, then their velocities) into an
/// ObservedTrajectory; time is shifted to start at 0.
ObservedTrajectory make_observed(const RawTrajectory& traj,
                                 const std::vector<std::string>& state_channels);

/// Synthesizes a smooth Sit-to-Stand state trajectory (angles and angular
/// velocities) with a strategy-specific velocity profile.
ObservedTrajectory generate_synthetic_sts(const SynthStsSpec& spec, ModelKind model);

}  // namespace bos::signal
