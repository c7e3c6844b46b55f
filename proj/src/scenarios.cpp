#include "sim/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sim/comms.hpp"
#include "sim/learn.hpp"

namespace sim::scenarios {

using nlohmann::json;
using runtime::EventKind;
using runtime::EventRecord;

void ScenarioConfig::validate() const {
    if (duration_s <= 0.0) throw SimError("duration_s must be positive");
    if (physics_dt_s <= 0.0) throw SimError("physics_dt_s must be positive");
    if (constraint_check_interval_s <= 0.0)
        throw SimError("constraint_check_interval_s must be positive");
    if (log_interval_s <= 0.0) throw SimError("log_interval_s must be positive");
    if (walker.total_satellites <= 0 || walker.planes <= 0)
        throw SimError("walker satellite and plane counts must be positive");
    if (walker.total_satellites % walker.planes != 0)
        throw SimError("walker total_satellites must be divisible by planes");
    if (walker.altitude_m <= 0.0) throw SimError("walker altitude must be positive");
    if (decision_interval_s <= 0.0) throw SimError("decision_interval_s must be positive");
    if (standby_soc_threshold <= 0.0 || standby_soc_threshold >= 1.0)
        throw SimError("standby_soc_threshold must lie in (0, 1)");
    if (revolutions <= 0.0 || quiet_revolutions < 0.0 || quiet_revolutions >= revolutions)
        throw SimError("need 0 <= quiet_revolutions < revolutions");
    if (epoch_duration_s <= 0.0) throw SimError("epoch_duration_s must be positive");
    if (activity_duration_s <= 0.0) throw SimError("activity_duration_s must be positive");
    if (runs_per_interval <= 0) throw SimError("runs_per_interval must be positive");
    for (double interval : intervals_s)
        if (interval <= 0.0) throw SimError("benchmark intervals must be positive");
}

ScenarioConfig parse_scenario_config(const std::string& json_text) {
    const json j = json::parse(json_text);
    ScenarioConfig config;

    const std::string kind = j.at("scenario").get<std::string>();
    if (kind == "overhead")
        config.kind = ScenarioKind::Overhead;
    else if (kind == "constellation")
        config.kind = ScenarioKind::Constellation;
    else if (kind == "fedavg")
        config.kind = ScenarioKind::FedAvg;
    else
        throw SimError("unknown scenario kind: " + kind);

    config.duration_s = j.value("duration_s", config.duration_s);
    config.physics_dt_s = j.value("physics_dt_s", config.physics_dt_s);
    config.constraint_check_interval_s =
        j.value("constraint_check_interval_s", config.constraint_check_interval_s);
    config.seed = j.value("seed", config.seed);
    config.log_interval_s = j.value("log_interval_s", config.log_interval_s);

    if (j.contains("walker")) {
        const json& w = j.at("walker");
        config.walker.total_satellites = w.value("total_satellites", config.walker.total_satellites);
        config.walker.planes = w.value("planes", config.walker.planes);
        config.walker.altitude_m = w.value("altitude_m", config.walker.altitude_m);
        config.walker.inclination_deg = w.value("inclination_deg", config.walker.inclination_deg);
    }
    config.decision_interval_s = j.value("decision_interval_s", config.decision_interval_s);
    config.standby_soc_threshold = j.value("standby_soc_threshold", config.standby_soc_threshold);
    config.standby_temperature_limit_k =
        j.value("standby_temperature_limit_k", config.standby_temperature_limit_k);
    config.revolutions = j.value("revolutions", config.revolutions);
    config.quiet_revolutions = j.value("quiet_revolutions", config.quiet_revolutions);
    config.epoch_duration_s = j.value("epoch_duration_s", config.epoch_duration_s);
    config.activity_duration_s = j.value("activity_duration_s", config.activity_duration_s);
    config.runs_per_interval = j.value("runs_per_interval", config.runs_per_interval);
    if (j.contains("intervals_s")) config.intervals_s = j.at("intervals_s").get<std::vector<double>>();

    config.validate();
    return config;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw SimError("cannot read config file: " + path);
    std::ostringstream text;
    text << file.rdbuf();
    return parse_scenario_config(text.str());
}

std::vector<astro::OrbitState> generate_walker(int total_satellites, int planes,
                                               double altitude_m, double inclination_deg,
                                               Epoch epoch, const CentralBody& body) {
    if (total_satellites <= 0 || planes <= 0)
        throw SimError("walker counts must be positive");
    if (total_satellites % planes != 0)
        throw SimError("walker total_satellites must be divisible by planes");
    const int per_plane = total_satellites / planes;
    const double radius_m = body.radius_m + altitude_m;

    std::vector<astro::OrbitState> orbits;
    orbits.reserve(total_satellites);
    for (int p = 0; p < planes; ++p) {
        const double raan = 2.0 * kPi * p / planes;
        for (int s = 0; s < per_plane; ++s) {
            const double anomaly = 2.0 * kPi * s / per_plane;
            orbits.push_back(astro::circular_orbit(radius_m, deg2rad(inclination_deg), raan,
                                                   anomaly, epoch, body));
        }
    }
    return orbits;
}

Actor make_maspalomas(Epoch epoch) {
    return make_ground_station("maspalomas", epoch, 27.7629, -15.6338, 205.1, 5.0);
}

Actor make_geosat(Epoch epoch) {
    const CentralBody earth = CentralBody::earth();
    // Phase the relay over the station's inertial longitude at the epoch;
    // with a sidereal-rate orbit it stays there.
    const astro::GeodeticCoordinates site{27.7629, -15.6338, 205.1};
    const Vec3 station = astro::station_position(site, epoch, earth);
    const double phase = std::atan2(station.y, station.x);
    return make_spacecraft("geosat",
                           epoch, astro::circular_orbit(42164e3, 0.0, 0.0, phase, epoch, earth));
}

astro::OrbitState observation_orbit(Epoch epoch) {
    // Sun-synchronous LEO at 786 km, the kind of orbit an Earth-observation
    // satellite with Maspalomas passes would fly.
    // The node is placed so that no Maspalomas pass is dead-overhead:
    // passes then stay in the usual few-minute range for this altitude.
    return astro::circular_orbit(6371000.0 + 786e3, deg2rad(98.57), deg2rad(75.0), 0.0, epoch,
                                 CentralBody::earth());
}

namespace {

constexpr double kSolarIrradianceWm2 = 1360.0;

thermal::ThermalState constellation_thermal() {
    thermal::ThermalState state;
    state.temperature_k = 273.15;
    state.properties.mass_kg = 50.0;
    state.properties.thermal_capacity_j_kg_k = 1000.0;
    state.properties.solar_absorptance = 1.0;
    state.properties.ir_absorptance = 1.0;
    state.properties.area_sun_m2 = 2.0;
    state.properties.area_albedo_m2 = 2.0;
    state.properties.area_body_m2 = 2.0;
    state.properties.emissive_area_m2 = 4.0;
    state.properties.power_to_heat_ratio = 0.5;
    state.properties.solar_irradiance_w_m2 = kSolarIrradianceWm2;
    return state;
}

std::string satellite_id(int index) {
    char id[16];
    std::snprintf(id, sizeof id, "sat%03d", index + 1);
    return id;
}

double percentile(std::vector<double> values, double q) {
    std::sort(values.begin(), values.end());
    const double rank = q * (values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(rank);
    const std::size_t hi = std::min(values.size() - 1, lo + 1);
    const double frac = rank - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[hi] * frac;
}

std::string format_cell(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

}  // namespace

std::vector<Actor> build_actors(const ScenarioConfig& config) {
    const Epoch epoch{0.0};
    const CentralBody earth = CentralBody::earth();
    std::vector<Actor> actors;

    switch (config.kind) {
        case ScenarioKind::Constellation: {
            std::mt19937_64 rng(config.seed);
            std::uniform_real_distribution<double> initial_soc(0.1, 1.0);
            const auto orbits =
                generate_walker(config.walker.total_satellites, config.walker.planes,
                                config.walker.altitude_m, config.walker.inclination_deg, epoch,
                                earth);
            for (std::size_t i = 0; i < orbits.size(); ++i) {
                Actor sat = make_spacecraft(satellite_id(static_cast<int>(i)), epoch, orbits[i]);
                sat.set_thermal(constellation_thermal());
                sat.set_battery({1.0e6, initial_soc(rng) * 1.0e6, 50.0});
                actors.push_back(std::move(sat));
            }
            actors.push_back(make_maspalomas(epoch));
            actors.push_back(make_geosat(epoch));
            break;
        }
        case ScenarioKind::FedAvg: {
            std::mt19937_64 rng(config.seed);
            std::uniform_real_distribution<double> initial_soc(0.6, 0.8);
            const double radius_m = earth.radius_m + 550e3;
            const double inclination = deg2rad(98.62);
            // Counter-rotating pair: opposite RAAN puts the planes'
            // intersection on the node line, and the quarter-phase offsets
            // make the satellites meet there twice per revolution.
            const astro::OrbitState orbit1 = astro::circular_orbit(
                radius_m, inclination, 0.0, deg2rad(90.0), epoch, earth);
            const astro::OrbitState orbit2 = astro::circular_orbit(
                radius_m, inclination, kPi, deg2rad(270.0), epoch, earth);
            for (int i = 0; i < 2; ++i) {
                Actor sat = make_spacecraft(i == 0 ? "sat1" : "sat2", epoch,
                                            i == 0 ? orbit1 : orbit2);
                sat.set_battery({0.1e6, initial_soc(rng) * 0.1e6, 50.0});
                sat.add_comm_device("isl", 1.0e6);
                actors.push_back(std::move(sat));
            }
            break;
        }
        case ScenarioKind::Overhead: {
            Actor sat = make_spacecraft("sat1", epoch, observation_orbit(epoch));
            sat.set_thermal(constellation_thermal());
            sat.set_battery({0.162e6, 0.162e6, 10.0});
            sat.set_radiation({0.0, 0.0, 0.0, config.seed});
            actors.push_back(std::move(sat));
            actors.push_back(make_maspalomas(epoch));
            break;
        }
    }
    return actors;
}

ConstellationResult run_constellation(const ScenarioConfig& config) {
    config.validate();
    if (config.kind != ScenarioKind::Constellation)
        throw SimError("run_constellation requires a constellation config");

    runtime::SimulationConfig sim_config;
    sim_config.physics_dt_s = config.physics_dt_s;
    sim_config.constraint_check_interval_s = config.constraint_check_interval_s;
    sim_config.seed = config.seed;
    runtime::Simulation sim(sim_config);

    std::vector<std::string> sat_ids;
    for (Actor& actor : build_actors(config)) {
        if (actor.is_spacecraft() && actor.battery) sat_ids.push_back(actor.id);
        sim.add_actor(std::move(actor));
    }
    const int n_sats = static_cast<int>(sat_ids.size());
    const double period_s = sim.actor(sat_ids.front()).orbit->period_s();

    // Per-satellite state is accessed every step; resolve the map nodes
    // once (stable addresses) so the hot loop stays linear in n_sats.
    std::vector<Actor*> sats;
    for (const std::string& id : sat_ids) sats.push_back(&sim.actor(id));
    std::vector<char> processing(sat_ids.size(), 0);
    std::map<std::string, double> power;
    for (const std::string& id : sat_ids) power[id] = 2.0;
    std::vector<std::map<std::string, double>::iterator> power_slots;
    for (const std::string& id : sat_ids) power_slots.push_back(power.find(id));

    const auto may_process = [&](const Actor& sat) {
        return sat.battery->state_of_charge() >= config.standby_soc_threshold &&
               sat.thermal->temperature_k <= config.standby_temperature_limit_k;
    };

    ConstellationResult result;
    const double dt = config.physics_dt_s;
    const long long steps = std::llround(config.duration_s / dt);
    const long long decision_every = std::max(1LL, std::llround(config.decision_interval_s / dt));
    const long long log_every = std::max(1LL, std::llround(config.log_interval_s / dt));

    double processing_sum = 0.0, eclipse_sum = 0.0, no_los_sum = 0.0;

    const auto wall_start = std::chrono::steady_clock::now();
    for (long long step = 0; step < steps; ++step) {
        if (step % decision_every == 0) {
            for (size_t i = 0; i < sats.size(); ++i) {
                processing[i] = may_process(*sats[i]);
                power_slots[i]->second = processing[i] ? 100.0 : 2.0;
            }
        }

        sim.step_all(dt, power);

        int n_processing = 0, n_eclipse = 0, n_no_los = 0;
        const Actor& station = sim.actor("maspalomas");
        const Actor& geosat = sim.actor("geosat");
        for (size_t i = 0; i < sats.size(); ++i) {
            Actor& sat = *sats[i];
            // A constraint violated mid-interval parks the satellite in
            // Standby for the remainder of the interval.
            if (processing[i] && !may_process(sat)) {
                processing[i] = false;
                power_slots[i]->second = 2.0;
            }
            if (processing[i]) ++n_processing;
            if (sat.in_eclipse) ++n_eclipse;

            const bool sees_station = comms::is_visible(sat, station, sim.now());
            const bool sees_geosat = comms::is_visible(sat, geosat, sim.now());
            if (!sees_station && !sees_geosat) ++n_no_los;
            if (sees_station && !sees_geosat) result.gs_visibility_implies_geosat = false;

            const double soc = sat.battery->state_of_charge();
            result.max_soc = std::max(result.max_soc, soc);
            if (sim.now().seconds >= period_s)
                result.min_soc_after_first_rev = std::min(result.min_soc_after_first_rev, soc);
        }
        processing_sum += static_cast<double>(n_processing) / n_sats;
        eclipse_sum += static_cast<double>(n_eclipse) / n_sats;
        no_los_sum += static_cast<double>(n_no_los) / n_sats;

        if ((step + 1) % log_every == 0) {
            std::vector<double> socs, temps;
            for (size_t i = 0; i < sats.size(); ++i) {
                const Actor& sat = *sats[i];
                socs.push_back(sat.battery->state_of_charge());
                temps.push_back(sat.thermal->temperature_k);

                EventRecord record;
                record.time_s = sim.now().seconds;
                record.actor_id = sat_ids[i];
                record.position_m = sat.position;
                record.temperature_k = sat.thermal->temperature_k;
                record.state_of_charge = sat.battery->state_of_charge();
                record.in_eclipse = sat.in_eclipse;
                record.current_activity = processing[i] ? "processing" : "standby";
                record.event = EventKind::Snapshot;
                result.log.add(std::move(record));
            }
            result.soc.time_s.push_back(sim.now().seconds);
            result.soc.q10.push_back(percentile(socs, 0.10));
            result.soc.q50.push_back(percentile(socs, 0.50));
            result.soc.q90.push_back(percentile(socs, 0.90));
            result.temperature_k.time_s.push_back(sim.now().seconds);
            result.temperature_k.q10.push_back(percentile(temps, 0.10));
            result.temperature_k.q50.push_back(percentile(temps, 0.50));
            result.temperature_k.q90.push_back(percentile(temps, 0.90));
        }
    }
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();

    result.processing_fraction = processing_sum / static_cast<double>(steps);
    result.eclipse_fraction = eclipse_sum / static_cast<double>(steps);
    result.no_los_fraction = no_los_sum / static_cast<double>(steps);
    return result;
}

std::string ConstellationResult::summary_csv() const {
    std::string out = "metric,value\n";
    out += "processing_fraction," + format_cell(processing_fraction) + "\n";
    out += "eclipse_fraction," + format_cell(eclipse_fraction) + "\n";
    out += "no_los_fraction," + format_cell(no_los_fraction) + "\n";
    out += "min_soc_after_first_rev," + format_cell(min_soc_after_first_rev) + "\n";
    out += "max_soc," + format_cell(max_soc) + "\n";
    out += std::string("gs_visibility_implies_geosat,") +
           (gs_visibility_implies_geosat ? "1" : "0") + "\n";
    out += "wall_time_s," + format_cell(wall_time_s) + "\n";
    return out;
}

FedAvgResult run_fedavg(const ScenarioConfig& config, bool communication_enabled) {
    config.validate();
    if (config.kind != ScenarioKind::FedAvg)
        throw SimError("run_fedavg requires a fedavg config");

    runtime::SimulationConfig sim_config;
    sim_config.physics_dt_s = config.physics_dt_s;
    sim_config.seed = config.seed;
    runtime::Simulation sim(sim_config);
    for (Actor& actor : build_actors(config)) sim.add_actor(std::move(actor));

    const double period_s = sim.actor("sat1").orbit->period_s();
    const double duration_s = config.revolutions * period_s;
    const double quiet_until_s = config.quiet_revolutions * period_s;

    const auto data = learn::make_circles_dataset(4166, 3300, config.seed);
    // Both parties start from the same initialization, as a deployed
    // system would after distributing one base model.
    const learn::TinyNet initial = learn::TinyNet::initialized(config.seed ^ 0x9e3779b97f4a7c15ULL);
    std::array<learn::TinyNet, 2> nets{initial, initial};
    std::array<std::mt19937_64, 2> train_rngs{
        std::mt19937_64(config.seed ^ stable_hash("sat1-training")),
        std::mt19937_64(config.seed ^ stable_hash("sat2-training"))};
    const std::array<const std::vector<learn::Sample>*, 2> train_sets{&data.train_sat1,
                                                                      &data.train_sat2};
    std::array<double, 2> current_accuracy{learn::accuracy(nets[0], data.test),
                                           learn::accuracy(nets[1], data.test)};
    std::array<double, 2> pending_train_s{0.0, 0.0};

    FedAvgResult result;
    result.communication_enabled = communication_enabled;
    const comms::LinkBudget isl{sim.actor("sat1").comm_devices.at("isl")};
    result.transfer_duration_s =
        comms::transmission_duration_s(learn::TinyNet::kSerializedBits, isl);

    const std::array<std::string, 2> ids{"sat1", "sat2"};
    const double dt = config.physics_dt_s;
    const long long steps = std::llround(duration_s / dt);
    const long long log_every = std::max(1LL, std::llround(config.log_interval_s / dt));

    enum class SatMode { Standby, Training, Sharing };
    bool was_visible = false;
    bool exchanged_this_window = false;

    const auto record_accuracy = [&](double time_s) {
        result.accuracy_time_s.push_back(time_s);
        result.accuracy_sat1.push_back(current_accuracy[0]);
        result.accuracy_sat2.push_back(current_accuracy[1]);
    };
    record_accuracy(0.0);

    const auto log_window_event = [&](EventKind kind) {
        EventRecord record;
        record.time_s = sim.now().seconds;
        record.actor_id = "sat1";
        record.position_m = sim.actor("sat1").position;
        record.state_of_charge = sim.actor("sat1").battery->state_of_charge();
        record.in_eclipse = sim.actor("sat1").in_eclipse;
        record.event = kind;
        result.log.add(std::move(record));
    };

    for (long long step = 0; step < steps; ++step) {
        const bool visible = comms::is_visible(sim.actor("sat1"), sim.actor("sat2"), sim.now());
        const bool may_share = visible && sim.now().seconds >= quiet_until_s &&
                               communication_enabled;
        if (visible && !was_visible) {
            ++result.windows;
            exchanged_this_window = false;
            log_window_event(EventKind::WindowOpen);
        }
        if (!visible && was_visible) log_window_event(EventKind::WindowClose);
        was_visible = visible;

        std::array<SatMode, 2> modes;
        std::map<std::string, double> power;
        for (int i = 0; i < 2; ++i) {
            const double soc = sim.actor(ids[i]).battery->state_of_charge();
            modes[i] = soc < 0.5        ? SatMode::Standby
                       : may_share      ? SatMode::Sharing
                                        : SatMode::Training;
            power[ids[i]] = modes[i] == SatMode::Standby ? 2.0 : 100.0;
        }

        sim.step_all(dt, power);

        if (modes[0] == SatMode::Sharing && modes[1] == SatMode::Sharing &&
            !exchanged_this_window) {
            // One federated-averaging round per pass: quantize both models
            // to their 1312-bit wire form, exchange, and average.
            exchanged_this_window = true;
            ++result.exchanges;
            const learn::TinyNet received1 =
                learn::deserialize_params(learn::serialize_params(nets[1]));
            const learn::TinyNet received2 =
                learn::deserialize_params(learn::serialize_params(nets[0]));
            const learn::TinyNet merged1 = learn::average(nets[0], received1);
            const learn::TinyNet merged2 = learn::average(nets[1], received2);
            const double mean_before = 0.5 * (current_accuracy[0] + current_accuracy[1]);
            for (int i = 0; i < 2; ++i) {
                const double before = current_accuracy[i];
                nets[i] = i == 0 ? merged1 : merged2;
                current_accuracy[i] = learn::accuracy(nets[i], data.test);
                if (current_accuracy[i] + 1e-12 >= before) ++result.improved_comparisons;
            }
            if (0.5 * (current_accuracy[0] + current_accuracy[1]) + 1e-12 >= mean_before)
                ++result.improved_exchanges;
            record_accuracy(sim.now().seconds);
        }

        for (int i = 0; i < 2; ++i) {
            if (modes[i] != SatMode::Training) continue;
            pending_train_s[i] += dt;
            if (pending_train_s[i] >= config.epoch_duration_s) {
                pending_train_s[i] -= config.epoch_duration_s;
                learn::train_epoch(nets[i], *train_sets[i], 0.1, 32, train_rngs[i]);
                current_accuracy[i] = learn::accuracy(nets[i], data.test);
                record_accuracy(sim.now().seconds);
            }
        }

        if ((step + 1) % log_every == 0) {
            for (const std::string& id : ids) {
                const Actor& sat = sim.actor(id);
                EventRecord record;
                record.time_s = sim.now().seconds;
                record.actor_id = id;
                record.position_m = sat.position;
                record.state_of_charge = sat.battery->state_of_charge();
                record.in_eclipse = sat.in_eclipse;
                record.current_activity = modes[id == "sat1" ? 0 : 1] == SatMode::Standby
                                              ? "standby"
                                              : modes[id == "sat1" ? 0 : 1] == SatMode::Sharing
                                                    ? "sharing"
                                                    : "training";
                record.event = EventKind::Snapshot;
                result.log.add(std::move(record));
            }
        }
    }

    result.final_accuracy_sat1 = current_accuracy[0];
    result.final_accuracy_sat2 = current_accuracy[1];
    return result;
}

std::string FedAvgResult::summary_csv() const {
    std::string out = "metric,value\n";
    out += std::string("communication_enabled,") + (communication_enabled ? "1" : "0") + "\n";
    out += "final_accuracy_sat1," + format_cell(final_accuracy_sat1) + "\n";
    out += "final_accuracy_sat2," + format_cell(final_accuracy_sat2) + "\n";
    out += "windows," + std::to_string(windows) + "\n";
    out += "exchanges," + std::to_string(exchanges) + "\n";
    out += "improved_comparisons," + std::to_string(improved_comparisons) + "\n";
    out += "improved_exchanges," + std::to_string(improved_exchanges) + "\n";
    out += "transfer_duration_s," + format_cell(transfer_duration_s) + "\n";
    return out;
}

namespace {

// Fixed chunk of floating-point busy work, roughly a millisecond.
double busy_chunk(double x) {
    for (int i = 0; i < 40000; ++i) x = std::sin(x) + 1.0001;
    return x;
}

}  // namespace

OverheadReport run_overhead_benchmark(const ScenarioConfig& config) {
    config.validate();
    if (config.kind != ScenarioKind::Overhead)
        throw SimError("run_overhead_benchmark requires an overhead config");

    using clock = std::chrono::steady_clock;
    OverheadReport report;

    for (double interval : config.intervals_s) {
        OverheadRow averaged;
        averaged.interval_s = interval;

        for (int run = 0; run < config.runs_per_interval; ++run) {
            runtime::SimulationConfig sim_config;
            sim_config.physics_dt_s = interval;
            sim_config.constraint_check_interval_s = interval;
            sim_config.mode = runtime::Mode::RealTime;
            sim_config.seed = config.seed;
            runtime::Simulation sim(sim_config);
            for (Actor& actor : build_actors(config)) sim.add_actor(std::move(actor));

            runtime::StepProfile profile;
            sim.profile = &profile;

            const auto activity_start = clock::now();
            double sink = 0.1;
            runtime::Activity activity;
            activity.name = "processing";
            activity.power_w = 10.0;
            activity.action = [&](Actor&) {
                sink = busy_chunk(sink);
                runtime::SliceResult slice;
                slice.done = std::chrono::duration<double>(clock::now() - activity_start)
                                 .count() >= config.activity_duration_s;
                return slice;
            };
            activity.constraint = [&sim](const Actor& a) {
                // Process while out of sight of the ground station.
                return !comms::is_visible(a, sim.actor("maspalomas"), sim.now());
            };
            sim.register_activity("sat1", activity);

            const auto run_start = clock::now();
            sim.run_real_time("sat1", "processing");
            const double total = std::chrono::duration<double>(clock::now() - run_start).count();

            averaged.activity_s += sim.activity_wall_s;
            averaged.constraint_s += sim.constraint_wall_s;
            averaged.propagation_s += profile.propagation_s;
            averaged.thermal_s += profile.thermal_s;
            averaged.power_s += profile.power_s;
            averaged.radiation_s += profile.radiation_s;
            averaged.total_s += total;
            averaged.steps += static_cast<double>(profile.steps);
            (void)sink;
        }

        const double runs = config.runs_per_interval;
        averaged.activity_s /= runs;
        averaged.constraint_s /= runs;
        averaged.propagation_s /= runs;
        averaged.thermal_s /= runs;
        averaged.power_s /= runs;
        averaged.radiation_s /= runs;
        averaged.total_s /= runs;
        averaged.steps /= runs;
        report.rows.push_back(averaged);
    }
    return report;
}

std::string OverheadReport::to_csv() const {
    std::string out =
        "interval_s,activity_s,constraint_s,propagation_s,thermal_s,power_s,radiation_s,"
        "model_update_s,total_s,update_share,steps\n";
    for (const OverheadRow& row : rows) {
        out += format_cell(row.interval_s) + ',' + format_cell(row.activity_s) + ',' +
               format_cell(row.constraint_s) + ',' + format_cell(row.propagation_s) + ',' +
               format_cell(row.thermal_s) + ',' + format_cell(row.power_s) + ',' +
               format_cell(row.radiation_s) + ',' + format_cell(row.model_update_s()) + ',' +
               format_cell(row.total_s) + ',' + format_cell(row.update_share()) + ',' +
               format_cell(row.steps) + '\n';
    }
    return out;
}

ScalingReport run_scaling_benchmark(const std::vector<int>& sizes, double duration_s,
                                    std::uint64_t seed) {
    ScalingReport report;
    for (int size : sizes) {
        ScenarioConfig config;
        config.kind = ScenarioKind::Constellation;
        config.duration_s = duration_s;
        config.seed = seed;
        config.walker.total_satellites = size;
        config.log_interval_s = duration_s;  // stats dominate; log once
        // Small runs finish in milliseconds; take the best of three to
        // keep scheduler noise out of the per-satellite figure.
        double best_s = std::numeric_limits<double>::infinity();
        for (int attempt = 0; attempt < 3; ++attempt)
            best_s = std::min(best_s, run_constellation(config).wall_time_s);
        report.rows.push_back({size, best_s});
    }
    return report;
}

std::string ScalingReport::to_csv() const {
    std::string out = "satellites,wall_s,per_satellite_s\n";
    for (const ScalingRow& row : rows)
        out += std::to_string(row.satellites) + ',' + format_cell(row.wall_s) + ',' +
               format_cell(row.per_satellite_s()) + '\n';
    return out;
}

}  // namespace sim::scenarios
