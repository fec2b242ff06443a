#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bos/poly.hpp"
#include "bos/signal.hpp"

namespace bos::models {

/// Point-mass inverted pendulum: mass m (kg) at distance l (m) from the ankle,
/// angle measured from vertical, positive forward, gravity destabilizing.
struct IpmParams {
  double m = 0.0;
  double l = 0.0;
  double g = 9.81;
  void validate() const;
};

/// Two-link inverted pendulum: lower-body point mass m1 at r1 along the
/// ankle-hip link (length l1), upper-body point mass m2 at r2 from the hip.
/// theta1 is the ankle-hip angle from vertical, theta2 the relative hip angle.
struct DpmParams {
  double m1 = 0.0, m2 = 0.0;
  double l1 = 0.0, r1 = 0.0, r2 = 0.0;
  double g = 9.81;
  void validate() const;
};

struct StateBox {
  std::vector<std::array<double, 2>> bounds;  // per-state [lo, hi]
  double horizon = 0.0;                       // T (s)

  int nstates() const { return static_cast<int>(bounds.size()); }
  bool contains(std::span<const double> x) const;
  void validate() const;
};

struct TorqueBounds {
  std::vector<std::array<double, 2>> bounds;  // per-input [lo, hi] (N*m)
  void validate() const;
};

/// Target set X_T: a ball (sum of squared normalized offsets <= 1) or a box
/// (|x_i - c_i| <= r_i) in state space.
struct TargetSet {
  std::vector<double> center;
  std::vector<double> radii;
  bool is_box = false;

  bool contains(std::span<const double> x) const;
  void require_inside(const StateBox& box) const;
};

/// Polynomial control-affine dynamics xdot = f(t,x) + g(t,x) u over a state
/// box with input bounds. Polynomials use the (t, x1..xn) variable layout.
struct ControlAffineField {
  int nstates = 0;
  int ninputs = 0;
  std::vector<poly::Polynomial> f;
  std::vector<std::vector<poly::Polynomial>> g;  // nstates x ninputs
  StateBox box;
  TorqueBounds ubounds;
  double taylor_max_error = 0.0;
  bool taylor_error_warning = false;
};

std::array<double, 2> ipm_dynamics_exact(const std::array<double, 2>& state,
                                         double torque, const IpmParams& p);

std::array<double, 4> dpm_dynamics_exact(const std::array<double, 4>& state,
                                         const std::array<double, 2>& torque,
                                         const DpmParams& p);

/// Kinetic plus potential energy of the unforced double pendulum.
double dpm_total_energy(const std::array<double, 4>& state, const DpmParams& p);

ControlAffineField ipm_polynomial_field(const IpmParams& p, int taylor_degree,
                                        const StateBox& box, const TorqueBounds& ub);

/// Multivariate Taylor expansion of the double-pendulum dynamics about the
/// origin. g_degree truncates the input-coupling block separately (-1 keeps
/// the f truncation degree); the expansion error is sampled over the box and
/// flagged when it exceeds error_warn_threshold.
ControlAffineField dpm_polynomial_field(const DpmParams& p, int taylor_degree,
                                        const StateBox& box, const TorqueBounds& ub,
                                        int g_degree = -1,
                                        double error_warn_threshold = 1e-2);

struct IpmFit {
  IpmParams params;
  signal::ObservedTrajectory states;  // (theta, theta_dot)
};

struct DpmFit {
  DpmParams params;
  signal::ObservedTrajectory states;  // (theta1, theta2, omega1, omega2)
};

/// Fits the single pendulum to ankle/COM position channels (ankle_x, ankle_y,
/// com_x, com_y): l is the time-average ankle-COM distance, theta the angle of
/// the ankle->COM ray from vertical.
IpmFit fit_ipm_params(const signal::RawTrajectory& traj, double subject_mass_kg,
                      double gravity = 9.81);

/// Fits the double pendulum to ankle/hip/segment-COM channels (ankle_*, hip_*,
/// lcom_*, ucom_*).
DpmFit fit_dpm_params(const signal::RawTrajectory& traj, double lower_mass_kg,
                      double upper_mass_kg, double gravity = 9.81);

/// Per-state [min, max] over the trajectory inflated by margin*range per side;
/// degenerate ranges fall back to an absolute floor of 1e-3.
StateBox derive_state_box(const signal::ObservedTrajectory& traj, double margin);

/// Per-channel [min, max] of the feedforward input over a uniform time grid,
/// widened by the same absolute floor when degenerate.
TorqueBounds derive_torque_bounds(const std::vector<poly::Polynomial>& u_obs,
                                  double T, int grid_nodes = 101);

/// Flat key-value model file: parameters, box, horizon, torque bounds, target.
struct ModelSpec {
  std::string kind;  // "ipm" | "dpm"
  IpmParams ipm;
  DpmParams dpm;
  StateBox box;
  TorqueBounds ubounds;
  TargetSet target;
};

void write_model_file(const std::string& path, const ModelSpec& spec);
ModelSpec read_model_file(const std::string& path);

}  // namespace bos::models
