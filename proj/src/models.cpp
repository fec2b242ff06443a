#include "bos/models.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bos::models {

namespace {
constexpr double kRangeFloor = 1e-3;
}

void IpmParams::validate() const {
  if (!(m > 0.0 && l > 0.0 && g > 0.0)) throw std::invalid_argument("IpmParams: m, l, g must be positive");
}

void DpmParams::validate() const {
  if (!(m1 > 0.0 && m2 > 0.0 && l1 > 0.0 && r1 > 0.0 && r2 > 0.0 && g > 0.0)) {
    throw std::invalid_argument("DpmParams: all parameters must be positive");
  }
  if (r1 > l1) throw std::invalid_argument("DpmParams: r1 must not exceed l1");
}

bool StateBox::contains(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != nstates()) throw std::invalid_argument("StateBox::contains: dimension mismatch");
  for (int i = 0; i < nstates(); ++i) {
    if (x[i] < bounds[i][0] || x[i] > bounds[i][1]) return false;
  }
  return true;
}

void StateBox::validate() const {
  if (bounds.empty()) throw std::invalid_argument("StateBox: empty");
  if (!(horizon > 0.0)) throw std::invalid_argument("StateBox: horizon must be positive");
  for (const auto& b : bounds) {
    if (!(b[0] < b[1])) throw std::invalid_argument("StateBox: lo must be below hi");
  }
}

void TorqueBounds::validate() const {
  for (const auto& b : bounds) {
    if (!(b[0] < b[1])) throw std::invalid_argument("TorqueBounds: lo must be below hi");
  }
}

bool TargetSet::contains(std::span<const double> x) const {
  if (x.size() != center.size()) throw std::invalid_argument("TargetSet::contains: dimension mismatch");
  if (is_box) {
    for (size_t i = 0; i < center.size(); ++i) {
      if (std::abs(x[i] - center[i]) > radii[i]) return false;
    }
    return true;
  }
  double s = 0.0;
  for (size_t i = 0; i < center.size(); ++i) {
    const double d = (x[i] - center[i]) / radii[i];
    s += d * d;
  }
  return s <= 1.0;
}

void TargetSet::require_inside(const StateBox& box) const {
  if (static_cast<int>(center.size()) != box.nstates()) {
    throw std::invalid_argument("TargetSet: dimension mismatch with box");
  }
  for (size_t i = 0; i < center.size(); ++i) {
    if (center[i] - radii[i] < box.bounds[i][0] || center[i] + radii[i] > box.bounds[i][1]) {
      throw std::invalid_argument("TargetSet: not contained in the state box (state " +
                                  std::to_string(i) + ")");
    }
  }
}

std::array<double, 2> ipm_dynamics_exact(const std::array<double, 2>& state,
                                         double torque, const IpmParams& p) {
  p.validate();
  return {state[1], (p.g / p.l) * std::sin(state[0]) + torque / (p.m * p.l * p.l)};
}

namespace {

struct DpmCoeffs {
  double a1, a2, a3, b1, b2;  // inertia and gravity lumped terms
};

DpmCoeffs dpm_coeffs(const DpmParams& p) {
  DpmCoeffs c;
  c.a1 = p.m1 * p.r1 * p.r1 + p.m2 * (p.l1 * p.l1 + p.r2 * p.r2);
  c.a2 = p.m2 * p.l1 * p.r2;
  c.a3 = p.m2 * p.r2 * p.r2;
  c.b1 = (p.m1 * p.r1 + p.m2 * p.l1) * p.g;
  c.b2 = p.m2 * p.r2 * p.g;
  return c;
}

}  // namespace

std::array<double, 4> dpm_dynamics_exact(const std::array<double, 4>& state,
                                         const std::array<double, 2>& torque,
                                         const DpmParams& p) {
  p.validate();
  const DpmCoeffs c = dpm_coeffs(p);
  const double th2 = state[1], w1 = state[2], w2 = state[3];
  const double c2 = std::cos(th2), s2 = std::sin(th2);

  const double m11 = c.a1 + 2.0 * c.a2 * c2;
  const double m12 = c.a3 + c.a2 * c2;
  const double m22 = c.a3;
  const double det = m11 * m22 - m12 * m12;

  // M qdd + C qd + G = tau, gravity destabilizing from the upright.
  const double cvec1 = -c.a2 * s2 * (2.0 * w1 * w2 + w2 * w2);
  const double cvec2 = c.a2 * s2 * w1 * w1;
  const double g1 = -c.b1 * std::sin(state[0]) - c.b2 * std::sin(state[0] + th2);
  const double g2 = -c.b2 * std::sin(state[0] + th2);

  const double r1 = torque[0] - cvec1 - g1;
  const double r2 = torque[1] - cvec2 - g2;
  const double qdd1 = (m22 * r1 - m12 * r2) / det;
  const double qdd2 = (-m12 * r1 + m11 * r2) / det;
  return {w1, w2, qdd1, qdd2};
}

double dpm_total_energy(const std::array<double, 4>& state, const DpmParams& p) {
  const DpmCoeffs c = dpm_coeffs(p);
  const double th1 = state[0], th2 = state[1], w1 = state[2], w2 = state[3];
  const double c2 = std::cos(th2);
  const double m11 = c.a1 + 2.0 * c.a2 * c2;
  const double m12 = c.a3 + c.a2 * c2;
  const double m22 = c.a3;
  const double kinetic = 0.5 * (m11 * w1 * w1 + 2.0 * m12 * w1 * w2 + m22 * w2 * w2);
  const double potential = c.b1 * std::cos(th1) + c.b2 * std::cos(th1 + th2);
  return kinetic + potential;
}

namespace {

// sin/cos of a polynomial argument, truncated to total degree maxdeg.
poly::Polynomial sin_series(const poly::Polynomial& u, int maxdeg) {
  poly::Polynomial out(u.nvars());
  poly::Polynomial term = u.truncate(maxdeg);  // u^k, truncated as we go
  double fact = 1.0;
  for (int k = 1; k <= maxdeg; k += 2) {
    if (k > 1) {
      fact *= static_cast<double>(k - 1) * k;
      term = (term * u * u).truncate(maxdeg);
    }
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    out += term * (sign / fact);
  }
  return out;
}

poly::Polynomial cos_series(const poly::Polynomial& u, int maxdeg) {
  poly::Polynomial out = poly::Polynomial::constant(u.nvars(), 1.0);
  poly::Polynomial term = poly::Polynomial::constant(u.nvars(), 1.0);
  double fact = 1.0;
  for (int k = 2; k <= maxdeg; k += 2) {
    fact *= static_cast<double>(k - 1) * k;
    term = (term * u * u).truncate(maxdeg);
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    out += term * (sign / fact);
  }
  return out;
}

// Samples the max |poly field - exact dynamics| over the box at the torque
// bound corners (plus zero torque).
template <typename ExactFn>
double sampled_field_error(const ControlAffineField& field, const ExactFn& exact,
                           int samples_per_dim, std::uint64_t seed) {
  const int n = field.nstates;
  const int m = field.ninputs;
  std::vector<poly::Evaluator> fev, gev;
  for (const auto& fi : field.f) fev.emplace_back(fi);
  for (const auto& row : field.g) {
    for (const auto& gij : row) gev.emplace_back(gij);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int total = samples_per_dim;  // random samples; deterministic under seed
  double max_err = 0.0;
  std::vector<double> z(1 + n, 0.0);
  std::vector<double> x(n), u(m);
  for (int s = 0; s < total; ++s) {
    for (int i = 0; i < n; ++i) {
      const auto& b = field.box.bounds[i];
      x[i] = (s == 0) ? 0.0 : b[0] + (b[1] - b[0]) * uni(rng);
      z[1 + i] = x[i];
    }
    for (int corner = 0; corner < (1 << m) + 1; ++corner) {
      for (int j = 0; j < m; ++j) {
        const auto& ub = field.ubounds.bounds[j];
        u[j] = (corner == (1 << m)) ? 0.0 : ((corner >> j) & 1 ? ub[1] : ub[0]);
      }
      auto xdot_exact = exact(x, u);
      for (int i = 0; i < n; ++i) {
        double xdot_poly = fev[i](z);
        for (int j = 0; j < m; ++j) xdot_poly += gev[i * m + j](z) * u[j];
        max_err = std::max(max_err, std::abs(xdot_poly - xdot_exact[i]));
      }
    }
  }
  return max_err;
}

}  // namespace

ControlAffineField ipm_polynomial_field(const IpmParams& p, int taylor_degree,
                                        const StateBox& box, const TorqueBounds& ub) {
  p.validate();
  box.validate();
  ub.validate();
  if (taylor_degree < 1) throw std::invalid_argument("ipm_polynomial_field: taylor_degree must be >= 1");
  if (box.nstates() != 2 || ub.bounds.size() != 1) {
    throw std::invalid_argument("ipm_polynomial_field: expected 2 states, 1 input");
  }
  const int nv = 3;  // (t, theta, omega)
  ControlAffineField field;
  field.nstates = 2;
  field.ninputs = 1;
  field.box = box;
  field.ubounds = ub;

  poly::Polynomial theta = poly::Polynomial::variable(nv, 1);
  poly::Polynomial omega = poly::Polynomial::variable(nv, 2);
  field.f.push_back(omega);
  field.f.push_back(sin_series(theta, taylor_degree) * (p.g / p.l));
  field.g = {{poly::Polynomial(nv)},
             {poly::Polynomial::constant(nv, 1.0 / (p.m * p.l * p.l))}};

  auto exact = [&](const std::vector<double>& x, const std::vector<double>& u) {
    auto d = ipm_dynamics_exact({x[0], x[1]}, u[0], p);
    return std::vector<double>{d[0], d[1]};
  };
  field.taylor_max_error = sampled_field_error(field, exact, 2000, 12345);
  return field;
}

ControlAffineField dpm_polynomial_field(const DpmParams& p, int taylor_degree,
                                        const StateBox& box, const TorqueBounds& ub,
                                        int g_degree, double error_warn_threshold) {
  p.validate();
  box.validate();
  ub.validate();
  if (taylor_degree < 1) throw std::invalid_argument("dpm_polynomial_field: taylor_degree must be >= 1");
  if (box.nstates() != 4 || ub.bounds.size() != 2) {
    throw std::invalid_argument("dpm_polynomial_field: expected 4 states, 2 inputs");
  }
  if (g_degree < 0) g_degree = taylor_degree;
  const int nv = 5;  // (t, th1, th2, w1, w2)
  const int d = taylor_degree;
  const DpmCoeffs c = dpm_coeffs(p);

  poly::Polynomial th1 = poly::Polynomial::variable(nv, 1);
  poly::Polynomial th2 = poly::Polynomial::variable(nv, 2);
  poly::Polynomial w1 = poly::Polynomial::variable(nv, 3);
  poly::Polynomial w2 = poly::Polynomial::variable(nv, 4);
  auto K = [&](double v) { return poly::Polynomial::constant(nv, v); };

  // Work one degree above the target so products keep their cross terms, then
  // truncate at the end.
  const int wd = d + 1;
  poly::Polynomial c2 = cos_series(th2, wd);
  poly::Polynomial m11 = K(c.a1) + c2 * (2.0 * c.a2);
  poly::Polynomial m12 = K(c.a3) + c2 * c.a2;
  poly::Polynomial m22 = K(c.a3);

  poly::Polynomial det = (m11 * m22 - m12 * m12).truncate(wd);
  const double det0 = det.coefficient(poly::Monomial::unit(nv));
  poly::Polynomial e = (det - K(det0)) * (1.0 / det0);  // lowest order 2
  poly::Polynomial inv_det = K(1.0 / det0);
  poly::Polynomial epow = e;
  for (int k = 1; 2 * k <= wd; ++k) {
    inv_det += epow * ((k % 2 == 0 ? 1.0 : -1.0) / det0);
    epow = (epow * e).truncate(wd);
  }

  poly::Polynomial s2 = sin_series(th2, wd);
  poly::Polynomial s1 = sin_series(th1, wd);
  poly::Polynomial s12 = sin_series(th1 + th2, wd);

  poly::Polynomial cv1 = (s2 * (w1 * w2 * 2.0 + w2 * w2) * (-c.a2)).truncate(wd);
  poly::Polynomial cv2 = (s2 * (w1 * w1) * c.a2).truncate(wd);
  poly::Polynomial g1 = s1 * (-c.b1) + s12 * (-c.b2);
  poly::Polynomial g2 = s12 * (-c.b2);

  poly::Polynomial r1 = (cv1 + g1) * -1.0;
  poly::Polynomial r2 = (cv2 + g2) * -1.0;

  // Inverse mass matrix rows: [m22, -m12; -m12, m11] * inv_det.
  poly::Polynomial i11 = (m22 * inv_det).truncate(wd);
  poly::Polynomial i12 = (m12 * inv_det * -1.0).truncate(wd);
  poly::Polynomial i22 = (m11 * inv_det).truncate(wd);

  ControlAffineField field;
  field.nstates = 4;
  field.ninputs = 2;
  field.box = box;
  field.ubounds = ub;
  field.f.push_back(w1);
  field.f.push_back(w2);
  field.f.push_back((i11 * r1 + i12 * r2).truncate(d));
  field.f.push_back((i12 * r1 + i22 * r2).truncate(d));
  field.g.assign(4, std::vector<poly::Polynomial>(2, poly::Polynomial(nv)));
  field.g[2][0] = i11.truncate(g_degree);
  field.g[2][1] = i12.truncate(g_degree);
  field.g[3][0] = i12.truncate(g_degree);
  field.g[3][1] = i22.truncate(g_degree);

  auto exact = [&](const std::vector<double>& x, const std::vector<double>& u) {
    auto dd = dpm_dynamics_exact({x[0], x[1], x[2], x[3]}, {u[0], u[1]}, p);
    return std::vector<double>{dd[0], dd[1], dd[2], dd[3]};
  };
  field.taylor_max_error = sampled_field_error(field, exact, 4000, 9876);
  field.taylor_error_warning = field.taylor_max_error > error_warn_threshold;
  return field;
}

namespace {

signal::ObservedTrajectory states_from_angles(const signal::RawTrajectory& traj,
                                              std::vector<std::vector<double>> angles) {
  if (!traj.is_uniform()) throw std::runtime_error("fit: trajectory must be uniformly sampled (resample first)");
  const double dt = 1.0 / traj.rate_hz();
  signal::ObservedTrajectory out;
  out.rate_hz = traj.rate_hz();
  out.T = traj.t.back() - traj.t.front();
  out.times.resize(traj.size());
  for (size_t i = 0; i < traj.size(); ++i) out.times[i] = traj.t[i] - traj.t.front();
  std::vector<std::vector<double>> velocities;
  velocities.reserve(angles.size());
  for (const auto& a : angles) velocities.push_back(signal::finite_difference_velocity(a, dt));
  for (auto& a : angles) out.states.push_back(std::move(a));
  for (auto& v : velocities) out.states.push_back(std::move(v));
  return out;
}

}  // namespace

IpmFit fit_ipm_params(const signal::RawTrajectory& traj, double subject_mass_kg,
                      double gravity) {
  for (const char* name : {"ankle_x", "ankle_y", "com_x", "com_y"}) {
    if (traj.channel_index(name) < 0) throw std::runtime_error(std::string("fit_ipm_params: missing channel ") + name);
  }
  const auto& ax = traj.channels[traj.channel_index("ankle_x")];
  const auto& ay = traj.channels[traj.channel_index("ankle_y")];
  const auto& cx = traj.channels[traj.channel_index("com_x")];
  const auto& cy = traj.channels[traj.channel_index("com_y")];

  double lsum = 0.0;
  std::vector<double> theta(traj.size());
  for (size_t i = 0; i < traj.size(); ++i) {
    const double dx = cx[i] - ax[i], dy = cy[i] - ay[i];
    const double dist = std::hypot(dx, dy);
    if (dist < 1e-9) throw std::runtime_error("fit_ipm_params: COM coincides with ankle at sample " + std::to_string(i));
    lsum += dist;
    theta[i] = std::atan2(dx, dy);  // from vertical, positive forward
  }

  IpmFit fit;
  fit.params.m = subject_mass_kg;
  fit.params.l = lsum / static_cast<double>(traj.size());
  fit.params.g = gravity;
  fit.params.validate();
  fit.states = states_from_angles(traj, {theta});
  return fit;
}

DpmFit fit_dpm_params(const signal::RawTrajectory& traj, double lower_mass_kg,
                      double upper_mass_kg, double gravity) {
  for (const char* name : {"ankle_x", "ankle_y", "hip_x", "hip_y", "lcom_x", "lcom_y",
                           "ucom_x", "ucom_y"}) {
    if (traj.channel_index(name) < 0) throw std::runtime_error(std::string("fit_dpm_params: missing channel ") + name);
  }
  auto ch = [&](const char* n) -> const std::vector<double>& {
    return traj.channels[traj.channel_index(n)];
  };
  const auto &ax = ch("ankle_x"), &ay = ch("ankle_y");
  const auto &hx = ch("hip_x"), &hy = ch("hip_y");
  const auto &lx = ch("lcom_x"), &ly = ch("lcom_y");
  const auto &ux = ch("ucom_x"), &uy = ch("ucom_y");

  double l1s = 0.0, r1s = 0.0, r2s = 0.0;
  std::vector<double> th1(traj.size()), th2(traj.size());
  for (size_t i = 0; i < traj.size(); ++i) {
    const double hdx = hx[i] - ax[i], hdy = hy[i] - ay[i];
    const double udx = ux[i] - hx[i], udy = uy[i] - hy[i];
    const double l1i = std::hypot(hdx, hdy);
    const double r2i = std::hypot(udx, udy);
    if (l1i < 1e-9 || r2i < 1e-9) {
      throw std::runtime_error("fit_dpm_params: degenerate segment at sample " + std::to_string(i));
    }
    l1s += l1i;
    r1s += std::hypot(lx[i] - ax[i], ly[i] - ay[i]);
    r2s += r2i;
    th1[i] = std::atan2(hdx, hdy);
    th2[i] = std::atan2(udx, udy) - th1[i];
  }

  DpmFit fit;
  const double n = static_cast<double>(traj.size());
  fit.params.m1 = lower_mass_kg;
  fit.params.m2 = upper_mass_kg;
  fit.params.l1 = l1s / n;
  fit.params.r1 = r1s / n;
  fit.params.r2 = r2s / n;
  fit.params.g = gravity;
  fit.params.validate();
  fit.states = states_from_angles(traj, {th1, th2});
  return fit;
}

StateBox derive_state_box(const signal::ObservedTrajectory& traj, double margin) {
  if (traj.nodes() == 0) throw std::invalid_argument("derive_state_box: empty trajectory");
  if (margin < 0.0) throw std::invalid_argument("derive_state_box: negative margin");
  StateBox box;
  box.horizon = traj.T;
  for (const auto& series : traj.states) {
    double lo = series[0], hi = series[0];
    for (double v : series) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double range = hi - lo;
    if (range < kRangeFloor) {
      const double c = 0.5 * (lo + hi);
      box.bounds.push_back({c - kRangeFloor, c + kRangeFloor});
    } else {
      box.bounds.push_back({lo - margin * range, hi + margin * range});
    }
  }
  box.validate();
  return box;
}

TorqueBounds derive_torque_bounds(const std::vector<poly::Polynomial>& u_obs,
                                  double T, int grid_nodes) {
  if (u_obs.empty()) throw std::invalid_argument("derive_torque_bounds: no input channels");
  if (grid_nodes < 2) throw std::invalid_argument("derive_torque_bounds: need at least 2 grid nodes");
  TorqueBounds out;
  for (const auto& uc : u_obs) {
    std::vector<double> z(uc.nvars(), 0.0);
    double lo = 0.0, hi = 0.0;
    for (int k = 0; k < grid_nodes; ++k) {
      z[0] = T * static_cast<double>(k) / static_cast<double>(grid_nodes - 1);
      const double v = uc.evaluate(z);
      if (k == 0) {
        lo = hi = v;
      } else {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    if (hi - lo < kRangeFloor) {
      const double c = 0.5 * (lo + hi);
      out.bounds.push_back({c - kRangeFloor, c + kRangeFloor});
    } else {
      out.bounds.push_back({lo, hi});
    }
  }
  out.validate();
  return out;
}

namespace {

void put(std::ostream& os, const std::string& key, double value) {
  os.precision(17);
  os << key << '=' << value << '\n';
}

}  // namespace

void write_model_file(const std::string& path, const ModelSpec& spec) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file '" + path + "'");
  out << "# model parameters; masses kg, lengths m, angles rad, torques N*m\n";
  out << "kind=" << spec.kind << '\n';
  if (spec.kind == "ipm") {
    put(out, "m", spec.ipm.m);
    put(out, "l", spec.ipm.l);
    put(out, "g", spec.ipm.g);
  } else if (spec.kind == "dpm") {
    put(out, "m1", spec.dpm.m1);
    put(out, "m2", spec.dpm.m2);
    put(out, "l1", spec.dpm.l1);
    put(out, "r1", spec.dpm.r1);
    put(out, "r2", spec.dpm.r2);
    put(out, "g", spec.dpm.g);
  } else {
    throw std::invalid_argument("write_model_file: unknown kind '" + spec.kind + "'");
  }
  put(out, "horizon", spec.box.horizon);
  for (int i = 0; i < spec.box.nstates(); ++i) {
    put(out, "box" + std::to_string(i) + "_lo", spec.box.bounds[i][0]);
    put(out, "box" + std::to_string(i) + "_hi", spec.box.bounds[i][1]);
  }
  for (size_t j = 0; j < spec.ubounds.bounds.size(); ++j) {
    put(out, "u" + std::to_string(j) + "_lo", spec.ubounds.bounds[j][0]);
    put(out, "u" + std::to_string(j) + "_hi", spec.ubounds.bounds[j][1]);
  }
  out << "target_shape=" << (spec.target.is_box ? "box" : "ball") << '\n';
  for (size_t i = 0; i < spec.target.center.size(); ++i) {
    put(out, "target" + std::to_string(i) + "_center", spec.target.center[i]);
    put(out, "target" + std::to_string(i) + "_radius", spec.target.radii[i]);
  }
}

ModelSpec read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error(path + ": bad line '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto get = [&](const std::string& key) -> double {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::runtime_error(path + ": missing key '" + key + "'");
    return std::stod(it->second);
  };

  ModelSpec spec;
  spec.kind = kv.count("kind") ? kv["kind"] : "";
  int nstates = 0, ninputs = 0;
  if (spec.kind == "ipm") {
    spec.ipm.m = get("m");
    spec.ipm.l = get("l");
    spec.ipm.g = get("g");
    spec.ipm.validate();
    nstates = 2;
    ninputs = 1;
  } else if (spec.kind == "dpm") {
    spec.dpm.m1 = get("m1");
    spec.dpm.m2 = get("m2");
    spec.dpm.l1 = get("l1");
    spec.dpm.r1 = get("r1");
    spec.dpm.r2 = get("r2");
    spec.dpm.g = get("g");
    spec.dpm.validate();
    nstates = 4;
    ninputs = 2;
  } else {
    throw std::runtime_error(path + ": unknown model kind '" + spec.kind + "'");
  }
  spec.box.horizon = get("horizon");
  for (int i = 0; i < nstates; ++i) {
    spec.box.bounds.push_back({get("box" + std::to_string(i) + "_lo"),
                               get("box" + std::to_string(i) + "_hi")});
  }
  spec.box.validate();
  for (int j = 0; j < ninputs; ++j) {
    spec.ubounds.bounds.push_back({get("u" + std::to_string(j) + "_lo"),
                                   get("u" + std::to_string(j) + "_hi")});
  }
  spec.ubounds.validate();
  spec.target.is_box = kv.count("target_shape") && kv["target_shape"] == "box";
  for (int i = 0; i < nstates; ++i) {
    spec.target.center.push_back(get("target" + std::to_string(i) + "_center"));
    spec.target.radii.push_back(get("target" + std::to_string(i) + "_radius"));
  }
  spec.target.require_inside(spec.box);
  return spec;
}

}  // namespace bos::models
