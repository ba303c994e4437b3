#pragma once

#include <string>

namespace uavbs {

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s

/// Air-to-ground propagation constants: sigmoid parameters (a, b) of the
/// LoS probability and the excess losses added on top of free space.
struct AtgEnvironment {
    double a = 9.61;           // dimensionless
    double b = 0.16;           // per degree
    double eta_los_db = 1.0;   // excess loss, LoS state
    double eta_nlos_db = 20.0; // excess loss, NLoS state
    std::string name = "urban";

    void validate() const;
};

/// Named parameter sets adopted from the ATG literature. Configurable inputs,
/// not ground truth: tests rely on formula oracles, never on these values.
AtgEnvironment environment_preset(const std::string& name);

struct RadioConfig {
    double carrier_hz = 2.0e9;
    double tx_power_dbm = 30.0;
    double noise_dbm = -96.0;
    double bandwidth_hz = 10.0e6;
    double pl_threshold_db = 103.0;      // coverage edge criterion
    double backhaul_cap_bps = 950.0e6;
    double backhaul_rtt_budget_ms = 5.0;

    void validate() const;
};

/// Elevation angle in degrees, in [0, 90], from altitude h and ground range r.
double elevation_angle(double h_m, double r_m);

/// LoS probability 1 / (1 + a*exp(-b*(theta - a))). Strictly increasing in
/// theta for b > 0, bounded in (0, 1).
double p_los(double theta_deg, const AtgEnvironment& env);

/// Free-space path loss 20*log10(4*pi*d*f/c) in dB.
double fspl(double d_m, double carrier_hz);

/// Mean path loss: fspl(slant distance) + p_los*eta_los + (1-p_los)*eta_nlos.
double mean_path_loss(double h_m, double r_m, const AtgEnvironment& env, double carrier_hz);

double snr_db(double path_loss_db, const RadioConfig& radio);

/// Shannon rate w * log2(1 + 10^(snr/10)) in bits/s.
double shannon_rate(double bandwidth_hz, double snr_db);

/// Largest ground range r with mean_path_loss(h, r) <= pl_threshold, found by
/// doubling + bisection to 0.1 m. Returns 0 when even r -> 0+ is over the
/// threshold; capped at 1e6 m.
double coverage_radius(double h_m, const AtgEnvironment& env, const RadioConfig& radio);

}  // namespace uavbs
