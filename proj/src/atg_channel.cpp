#include "uavbs/atg_channel.hpp"

#include <cmath>
#include <stdexcept>

namespace uavbs {

void AtgEnvironment::validate() const {
    if (!(b > 0.0))
        throw std::invalid_argument("environment.b must be > 0");
    if (!(eta_los_db >= 0.0) || !(eta_nlos_db >= eta_los_db))
        throw std::invalid_argument("environment requires eta_nlos_db >= eta_los_db >= 0");
}

AtgEnvironment environment_preset(const std::string& name) {
    if (name == "suburban") return {4.88, 0.43, 0.1, 21.0, "suburban"};
    if (name == "urban") return {9.61, 0.16, 1.0, 20.0, "urban"};
    if (name == "dense-urban") return {12.08, 0.11, 1.6, 23.0, "dense-urban"};
    if (name == "high-rise") return {27.23, 0.08, 2.3, 34.0, "high-rise"};
    throw std::invalid_argument("unknown environment preset: " + name);
}

void RadioConfig::validate() const {
    if (!(carrier_hz > 0.0)) throw std::invalid_argument("radio.carrier_hz must be > 0");
    if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("radio.bandwidth_hz must be > 0");
    if (!(backhaul_cap_bps > 0.0)) throw std::invalid_argument("radio.backhaul_cap_bps must be > 0");
}

double elevation_angle(double h_m, double r_m) {
    if (h_m < 0.0 || r_m < 0.0 || (h_m == 0.0 && r_m == 0.0))
        throw std::domain_error("elevation_angle: requires h >= 0, r >= 0, not both 0");
    return std::atan2(h_m, r_m) * 180.0 / M_PI;
}

double p_los(double theta_deg, const AtgEnvironment& env) {
    return 1.0 / (1.0 + env.a * std::exp(-env.b * (theta_deg - env.a)));
}

double fspl(double d_m, double carrier_hz) {
    if (!(d_m > 0.0)) throw std::domain_error("fspl: distance must be > 0");
    return 20.0 * std::log10(4.0 * M_PI * d_m * carrier_hz / kSpeedOfLight);
}

double mean_path_loss(double h_m, double r_m, const AtgEnvironment& env, double carrier_hz) {
    if (h_m < 0.0) throw std::domain_error("mean_path_loss: altitude must be >= 0");
    const double d = std::hypot(h_m, r_m);
    const double theta = elevation_angle(h_m, r_m);
    const double p = p_los(theta, env);
    return fspl(d, carrier_hz) + p * env.eta_los_db + (1.0 - p) * env.eta_nlos_db;
}

double snr_db(double path_loss_db, const RadioConfig& radio) {
    return radio.tx_power_dbm - path_loss_db - radio.noise_dbm;
}

double shannon_rate(double bandwidth_hz, double snr_db) {
    if (bandwidth_hz < 0.0) throw std::domain_error("shannon_rate: bandwidth must be >= 0");
    if (bandwidth_hz == 0.0) return 0.0;
    return bandwidth_hz * std::log2(1.0 + std::pow(10.0, snr_db / 10.0));
}

double coverage_radius(double h_m, const AtgEnvironment& env, const RadioConfig& radio) {
    if (!(h_m > 0.0)) throw std::domain_error("coverage_radius: altitude must be > 0");
    const double thr = radio.pl_threshold_db;
    if (mean_path_loss(h_m, 0.0, env, radio.carrier_hz) > thr) return 0.0;

    constexpr double kRadiusCap = 1.0e6;
    double hi = 1.0;
    while (mean_path_loss(h_m, hi, env, radio.carrier_hz) <= thr) {
        hi *= 2.0;
        if (hi >= kRadiusCap) return kRadiusCap;
    }
    double lo = hi > 1.0 ? hi / 2.0 : 0.0;
    while (hi - lo > 0.1) {
        const double mid = 0.5 * (lo + hi);
        if (mean_path_loss(h_m, mid, env, radio.carrier_hz) <= thr)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace uavbs
