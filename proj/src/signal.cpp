#include "bos/signal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bos::signal {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

int RawTrajectory::channel_index(const std::string& name) const {
  for (int c = 0; c < nchannels(); ++c) {
    if (names[c] == name) return c;
  }
  return -1;
}

bool RawTrajectory::is_uniform(double rel_tol) const {
  if (t.size() < 2) return true;
  const double h = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  for (size_t i = 1; i < t.size(); ++i) {
    if (std::abs(t[i] - t[i - 1] - h) > rel_tol * std::max(1.0, std::abs(h))) return false;
  }
  return true;
}

double RawTrajectory::rate_hz() const {
  if (t.size() < 2) throw std::runtime_error("rate_hz: need at least two samples");
  return static_cast<double>(t.size() - 1) / (t.back() - t.front());
}

std::vector<double> ObservedTrajectory::at(size_t i) const {
  std::vector<double> x(states.size());
  for (size_t s = 0; s < states.size(); ++s) x[s] = states[s][i];
  return x;
}

std::vector<double> ObservedTrajectory::sample(double time) const {
  if (times.empty()) throw std::runtime_error("sample: empty trajectory");
  const double tc = std::clamp(time, times.front(), times.back());
  const double h = 1.0 / rate_hz;
  size_t k = std::min(static_cast<size_t>(std::max(0.0, (tc - times.front()) / h)),
                      times.size() - 2);
  const double w = std::clamp((tc - times[k]) / (times[k + 1] - times[k]), 0.0, 1.0);
  std::vector<double> x(states.size());
  for (size_t s = 0; s < states.size(); ++s) {
    x[s] = (1.0 - w) * states[s][k] + w * states[s][k + 1];
  }
  return x;
}

void ObservedTrajectory::validate_uniform(double rel_tol) const {
  if (times.size() < 2) throw std::runtime_error("trajectory has fewer than two nodes");
  const double h = 1.0 / rate_hz;
  for (size_t i = 1; i < times.size(); ++i) {
    if (std::abs(times[i] - times[i - 1] - h) > rel_tol * std::max(1.0, h)) {
      throw std::runtime_error("trajectory grid is not uniform");
    }
  }
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "quasi_static") return Strategy::kQuasiStatic;
  if (s == "momentum_transfer") return Strategy::kMomentumTransfer;
  if (s == "preferred") return Strategy::kPreferred;
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kQuasiStatic: return "quasi_static";
    case Strategy::kMomentumTransfer: return "momentum_transfer";
    case Strategy::kPreferred: return "preferred";
  }
  return "?";
}

RawTrajectory load_trajectory(const std::string& path,
                              const std::vector<std::string>& required_channels,
                              LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trajectory file '" + path + "'");

  RawTrajectory traj;
  LoadReport rep;
  std::string line;
  bool have_header = false;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      ++rep.comment_lines;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!have_header) {
      if (cells.empty() || cells[0] != "t") {
        throw std::runtime_error(path + ": header must start with column 't'");
      }
      traj.names.assign(cells.begin() + 1, cells.end());
      traj.channels.resize(traj.names.size());
      have_header = true;
      continue;
    }
    if (cells.size() != traj.names.size() + 1) {
      throw std::runtime_error(path + ": row " + std::to_string(lineno) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(traj.names.size() + 1));
    }
    std::vector<double> row(cells.size());
    for (size_t c = 0; c < cells.size(); ++c) {
      size_t used = 0;
      try {
        row[c] = std::stod(cells[c], &used);
      } catch (const std::exception&) {
        throw std::runtime_error(path + ": row " + std::to_string(lineno) +
                                 ": non-numeric cell '" + cells[c] + "'");
      }
      if (used != cells[c].size()) {
        throw std::runtime_error(path + ": row " + std::to_string(lineno) +
                                 ": non-numeric cell '" + cells[c] + "'");
      }
    }
    if (!traj.t.empty()) {
      if (row[0] == traj.t.back()) {
        throw std::runtime_error(path + ": row " + std::to_string(lineno) +
                                 ": duplicated timestamp " + cells[0]);
      }
      if (row[0] < traj.t.back()) {
        throw std::runtime_error(path + ": row " + std::to_string(lineno) +
                                 ": non-monotone timestamp " + cells[0]);
      }
    }
    traj.t.push_back(row[0]);
    for (size_t c = 0; c < traj.names.size(); ++c) traj.channels[c].push_back(row[c + 1]);
    ++rep.rows;
  }
  if (!have_header) throw std::runtime_error(path + ": missing header row");
  if (traj.t.empty()) throw std::runtime_error(path + ": no data rows");
  for (const auto& name : required_channels) {
    if (traj.channel_index(name) < 0) {
      throw std::runtime_error(path + ": missing required channel '" + name + "'");
    }
  }
  if (report) *report = rep;
  return traj;
}

void write_trajectory_csv(const std::string& path, const RawTrajectory& traj) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.precision(17);
  out << "t";
  for (const auto& n : traj.names) out << ',' << n;
  out << '\n';
  for (size_t i = 0; i < traj.size(); ++i) {
    out << traj.t[i];
    for (const auto& ch : traj.channels) out << ',' << ch[i];
    out << '\n';
  }
}

void write_observed_csv(const std::string& path, const ObservedTrajectory& traj,
                        const std::vector<std::string>& state_names) {
  RawTrajectory raw;
  raw.t = traj.times;
  raw.names = state_names;
  raw.channels = traj.states;
  write_trajectory_csv(path, raw);
}

namespace {

struct Biquad {
  double gain, d1, d2;
};

// Low-pass Butterworth as a cascade of second-order sections via the bilinear
// transform; tan() prewarps the cutoff.
std::vector<Biquad> butterworth_sections(int order, double cutoff_hz, double rate_hz) {
  const int n2 = order / 2;
  const double a = std::tan(kPi * cutoff_hz / rate_hz);
  const double a2 = a * a;
  std::vector<Biquad> sections(n2);
  for (int i = 0; i < n2; ++i) {
    const double r = std::sin(kPi * (2.0 * i + 1.0) / (4.0 * n2));
    const double s = a2 + 2.0 * a * r + 1.0;
    sections[i] = Biquad{a2 / s, 2.0 * (1.0 - a2) / s, -(a2 - 2.0 * a * r + 1.0) / s};
  }
  return sections;
}

void run_sections(std::vector<Biquad>& sections, std::vector<double>& x) {
  // Direct-form II per section; states start at the step steady state so a
  // constant series passes through unchanged.
  for (auto& sec : sections) {
    const double denom = 1.0 - sec.d1 - sec.d2;
    double w1 = x.empty() ? 0.0 : x.front() / denom;
    double w2 = w1;
    for (double& xi : x) {
      const double w0 = sec.d1 * w1 + sec.d2 * w2 + xi;
      xi = sec.gain * (w0 + 2.0 * w1 + w2);
      w2 = w1;
      w1 = w0;
    }
  }
}

}  // namespace

RawTrajectory butterworth_lowpass_forward(const RawTrajectory& traj, int order,
                                          double cutoff_hz) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("butterworth: order must be even and >= 2");
  if (!traj.is_uniform()) throw std::runtime_error("butterworth: series must be uniformly sampled (resample first)");
  if (traj.size() < static_cast<size_t>(8 * order)) {
    throw std::runtime_error("butterworth: need at least 8*order samples");
  }
  const double fs = traj.rate_hz();
  if (cutoff_hz >= 0.5 * fs) throw std::invalid_argument("butterworth: cutoff at or above Nyquist");
  if (cutoff_hz <= 0.0) throw std::invalid_argument("butterworth: cutoff must be positive");

  RawTrajectory out = traj;
  for (auto& ch : out.channels) {
    auto sections = butterworth_sections(order, cutoff_hz, fs);
    run_sections(sections, ch);
  }
  return out;
}

RawTrajectory butterworth_lowpass(const RawTrajectory& traj, int order, double cutoff_hz) {
  RawTrajectory out = butterworth_lowpass_forward(traj, order, cutoff_hz);
  for (auto& ch : out.channels) std::reverse(ch.begin(), ch.end());
  out = butterworth_lowpass_forward(out, order, cutoff_hz);
  for (auto& ch : out.channels) std::reverse(ch.begin(), ch.end());
  return out;
}

RawTrajectory resample_uniform(const RawTrajectory& traj, double rate_hz) {
  if (rate_hz <= 0.0) throw std::invalid_argument("resample: rate must be positive");
  if (traj.size() < 2) throw std::runtime_error("resample: need at least two samples");
  const double t0 = traj.t.front();
  const double span = traj.t.back() - t0;
  const size_t count = static_cast<size_t>(std::floor(span * rate_hz + 1e-9)) + 1;
  const double h = 1.0 / rate_hz;

  RawTrajectory out;
  out.names = traj.names;
  out.channels.resize(traj.channels.size());
  out.t.resize(count);
  for (auto& ch : out.channels) ch.resize(count);

  size_t k = 0;
  for (size_t i = 0; i < count; ++i) {
    const double ti = t0 + static_cast<double>(i) * h;
    out.t[i] = ti;
    while (k + 2 < traj.t.size() && traj.t[k + 1] < ti) ++k;
    const double w = std::clamp((ti - traj.t[k]) / (traj.t[k + 1] - traj.t[k]), 0.0, 1.0);
    for (size_t c = 0; c < traj.channels.size(); ++c) {
      out.channels[c][i] = (1.0 - w) * traj.channels[c][k] + w * traj.channels[c][k + 1];
    }
  }
  return out;
}

std::vector<double> finite_difference_velocity(const std::vector<double>& position, double dt) {
  const size_t n = position.size();
  if (n < 3) throw std::invalid_argument("finite_difference_velocity: need at least 3 samples");
  if (dt <= 0.0) throw std::invalid_argument("finite_difference_velocity: dt must be positive");
  std::vector<double> v(n);
  v[0] = (-3.0 * position[0] + 4.0 * position[1] - position[2]) / (2.0 * dt);
  for (size_t i = 1; i + 1 < n; ++i) v[i] = (position[i + 1] - position[i - 1]) / (2.0 * dt);
  v[n - 1] = (3.0 * position[n - 1] - 4.0 * position[n - 2] + position[n - 3]) / (2.0 * dt);
  return v;
}

ObservedTrajectory make_observed(const RawTrajectory& traj,
                                 const std::vector<std::string>& state_channels) {
  if (!traj.is_uniform()) throw std::runtime_error("make_observed: series must be uniform");
  ObservedTrajectory out;
  out.rate_hz = traj.rate_hz();
  out.T = traj.t.back() - traj.t.front();
  out.times.resize(traj.size());
  for (size_t i = 0; i < traj.size(); ++i) out.times[i] = traj.t[i] - traj.t.front();
  for (const auto& name : state_channels) {
    const int c = traj.channel_index(name);
    if (c < 0) throw std::runtime_error("make_observed: missing channel '" + name + "'");
    out.states.push_back(traj.channels[c]);
  }
  out.validate_uniform();
  return out;
}

namespace {

// Normalized velocity profiles on s in [0,1]; each integrates to 1 so the
// position profile lands exactly on the end angle.
double shape_value(Strategy s, double x) {
  switch (s) {
    case Strategy::kQuasiStatic:
      return 30.0 * x * x * (1.0 - x) * (1.0 - x);
    case Strategy::kPreferred:
      return 12.0 * x * (1.0 - x) * (1.0 - x);
    case Strategy::kMomentumTransfer: {
      // Nonzero velocity at s=0 and an early peak; gamma sets the seat-off
      // velocity share of the profile.
      const double gamma = 0.15;
      const double c = 1.0 / (0.05 + gamma / 4.0);
      const double u = 1.0 - x;
      return c * (x + gamma) * u * u * u;
    }
  }
  return 0.0;
}

}  // namespace

ObservedTrajectory generate_synthetic_sts(const SynthStsSpec& spec, ModelKind model) {
  const int nconf = model == ModelKind::kIpm ? 1 : 2;
  if (static_cast<int>(spec.start_angles.size()) != nconf ||
      static_cast<int>(spec.end_angles.size()) != nconf) {
    throw std::invalid_argument("generate_synthetic_sts: angle vectors must have " +
                                std::to_string(nconf) + " entries");
  }
  if (spec.duration <= 0.0) throw std::invalid_argument("generate_synthetic_sts: duration must be positive");
  double max_delta = 0.0;
  for (int c = 0; c < nconf; ++c) {
    max_delta = std::max(max_delta, std::abs(spec.end_angles[c] - spec.start_angles[c]));
  }
  if (max_delta == 0.0) {
    throw std::invalid_argument("generate_synthetic_sts: start and end configurations coincide");
  }

  // Seeded subject-style variation: a small smooth modulation of the velocity
  // profile, renormalized so endpoints are exact.
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double eps = 0.03 * uni(rng);
  const double phase = 2.0 * kPi * uni(rng);
  auto wfun = [&](double s) {
    return shape_value(spec.strategy, s) * (1.0 + eps * std::sin(kPi * s) * std::sin(2.0 * kPi * s + phase));
  };

  // Composite 3-point Gauss-Legendre cumulative integral of the profile.
  const size_t count = static_cast<size_t>(std::llround(spec.duration * spec.rate_hz)) + 1;
  if (count < 2) throw std::invalid_argument("generate_synthetic_sts: rate too low for duration");
  const double hs = 1.0 / static_cast<double>(count - 1);
  static const double gx[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
  static const double gw[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  std::vector<double> cum(count, 0.0);
  for (size_t i = 1; i < count; ++i) {
    const double a = (i - 1) * hs, b = i * hs;
    double seg = 0.0;
    for (int q = 0; q < 3; ++q) {
      seg += gw[q] * wfun(0.5 * (a + b) + 0.5 * (b - a) * gx[q]);
    }
    cum[i] = cum[i - 1] + seg * 0.5 * (b - a);
  }
  const double total = cum.back();

  ObservedTrajectory out;
  out.T = spec.duration;
  out.rate_hz = static_cast<double>(count - 1) / spec.duration;
  out.times.resize(count);
  out.states.assign(2 * nconf, std::vector<double>(count));
  for (size_t i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) * hs;
    out.times[i] = s * spec.duration;
    const double q = cum[i] / total;
    const double w = wfun(s) / total;
    for (int c = 0; c < nconf; ++c) {
      const double delta = spec.end_angles[c] - spec.start_angles[c];
      out.states[c][i] = spec.start_angles[c] + delta * q;
      out.states[nconf + c][i] = delta * w / spec.duration;
    }
  }
  return out;
}

}  // namespace bos::signal
