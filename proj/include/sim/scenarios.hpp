/**
 * Built-in scenarios: configuration loading, Walker constellation
 * generation, the 16-satellite constellation study, the two-satellite
 * decentralized-learning run, and the runtime-overhead / scaling
 * benchmarks.
 */
#ifndef SIM_SCENARIOS_HPP
#define SIM_SCENARIOS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sim/actor.hpp"
#include "sim/runtime.hpp"

namespace sim::scenarios {

enum class ScenarioKind { Overhead, Constellation, FedAvg };

struct WalkerParams {
    int total_satellites{16};
    int planes{4};
    double altitude_m{550e3};
    double inclination_deg{10.0};
};

struct ScenarioConfig {
    ScenarioKind kind{ScenarioKind::Constellation};
    double duration_s{28800.0};
    double physics_dt_s{1.0};
    double constraint_check_interval_s{1.0};
    std::uint64_t seed{0};
    double log_interval_s{60.0};  // snapshot cadence in the event log

    // Constellation.
    WalkerParams walker;
    double decision_interval_s{600.0};
    // Processing is only entered (and kept) while SoC stays above this;
    // it sits slightly above the 0.2 operating floor so that the floor
    // is never crossed between 1 s checks.
    double standby_soc_threshold{0.21};
    double standby_temperature_limit_k{330.0};

    // Decentralized learning.
    double revolutions{30.0};
    double quiet_revolutions{10.0};
    double epoch_duration_s{30.0};  // model time consumed by one training epoch

    // Overhead benchmark.
    double activity_duration_s{29.0};
    int runs_per_interval{3};
    std::vector<double> intervals_s{0.25, 0.5, 1.0};

    void validate() const;
};

ScenarioConfig parse_scenario_config(const std::string& json_text);
ScenarioConfig load_scenario_config(const std::string& path);

/**
 * Walker pattern: `planes` planes equally spaced in RAAN over 2 pi,
 * total/planes satellites per plane equally spaced in true anomaly, all
 * circular at body radius + altitude with a common inclination.
 */
std::vector<astro::OrbitState> generate_walker(int total_satellites, int planes,
                                               double altitude_m, double inclination_deg,
                                               Epoch epoch, const CentralBody& body);

/** Maspalomas ground station (27.7629 N, -15.6338 E, 205.1 m, 5 deg mask). */
Actor make_maspalomas(Epoch epoch);

/** Geosynchronous relay on a circular equatorial orbit, phased over Maspalomas. */
Actor make_geosat(Epoch epoch);

/** Sun-synchronous LEO used by the single-satellite scenarios. */
astro::OrbitState observation_orbit(Epoch epoch);

/** The full actor set of a scenario, positioned at its epoch but not run. */
std::vector<Actor> build_actors(const ScenarioConfig& config);

struct QuantileTrace {
    std::vector<double> time_s;
    std::vector<double> q10, q50, q90;
};

struct ConstellationResult {
    runtime::EventLog log;
    double processing_fraction{};       // time-averaged share of satellites processing
    double eclipse_fraction{};          // time-averaged share in eclipse
    double no_los_fraction{};           // share with LOS to neither Maspalomas nor GeoSat
    double min_soc_after_first_rev{1.0};
    double max_soc{};
    bool gs_visibility_implies_geosat{true};
    QuantileTrace soc;
    QuantileTrace temperature_k;
    double wall_time_s{};

    std::string summary_csv() const;
};

ConstellationResult run_constellation(const ScenarioConfig& config);

struct FedAvgResult {
    runtime::EventLog log;
    bool communication_enabled{true};
    double final_accuracy_sat1{};
    double final_accuracy_sat2{};
    int windows{};               // inter-satellite windows over the whole run
    int exchanges{};             // model exchanges performed
    int improved_comparisons{};  // per-satellite accuracy comparisons where after >= before
    int improved_exchanges{};    // exchanges where the two-satellite mean accuracy rose
    double transfer_duration_s{};
    std::vector<double> accuracy_time_s;
    std::vector<double> accuracy_sat1;
    std::vector<double> accuracy_sat2;

    std::string summary_csv() const;
};

FedAvgResult run_fedavg(const ScenarioConfig& config, bool communication_enabled = true);

struct OverheadRow {
    double interval_s{};
    double activity_s{};
    double constraint_s{};
    double propagation_s{};
    double thermal_s{};
    double power_s{};
    double radiation_s{};
    double total_s{};
    double steps{};  // physics updates per run, averaged

    double model_update_s() const { return propagation_s + thermal_s + power_s + radiation_s; }
    double update_share() const { return total_s > 0.0 ? model_update_s() / total_s : 0.0; }
};

struct OverheadReport {
    std::vector<OverheadRow> rows;  // one per interval, averaged over runs
    std::string to_csv() const;
};

OverheadReport run_overhead_benchmark(const ScenarioConfig& config);

struct ScalingRow {
    int satellites{};
    double wall_s{};
    double per_satellite_s() const { return wall_s / satellites; }
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    std::string to_csv() const;
};

/** Constellation runs of `duration_s` at the given sizes, timed end to end. */
ScalingReport run_scaling_benchmark(const std::vector<int>& sizes, double duration_s = 600.0,
                                    std::uint64_t seed = 0);

int cli_main(int argc, char** argv);

}  // namespace sim::scenarios

#endif  // SIM_SCENARIOS_HPP
