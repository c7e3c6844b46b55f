#include "sim/comms.hpp"

#include <json.hpp>

#include "sim/astro.hpp"

namespace sim::comms {

using nlohmann::json;

void LinkBudget::validate() const {
    if (data_rate_bits_s <= 0.0) throw SimError("link data rate must be positive");
}

namespace {

bool visible_spacecraft_pair(const Actor& a, const Actor& b, Epoch t) {
    const Vec3 pa = astro::propagate(*a.orbit, t).position_m;
    const Vec3 pb = astro::propagate(*b.orbit, t).position_m;
    return astro::line_of_sight_strict(pa, pb, a.orbit->central_body);
}

bool visible_ground_pair(const Actor& station, const Actor& spacecraft, Epoch t) {
    const Vec3 sc = astro::propagate(*spacecraft.orbit, t).position_m;
    const astro::GeodeticCoordinates site{station.geodetic->latitude_deg,
                                          station.geodetic->longitude_deg,
                                          station.geodetic->elevation_m};
    const double elevation = astro::ground_station_elevation_deg(
        site, sc, t, spacecraft.orbit->central_body);
    return elevation >= station.minimum_elevation_deg;
}

}  // namespace

bool is_visible(const Actor& a, const Actor& b, Epoch t) {
    if (a.is_spacecraft() && b.is_spacecraft()) return visible_spacecraft_pair(a, b, t);
    if (!a.is_spacecraft() && !b.is_spacecraft())
        throw SimError("visibility between two ground stations is unsupported");
    const Actor& station = a.is_spacecraft() ? b : a;
    const Actor& spacecraft = a.is_spacecraft() ? a : b;
    return visible_ground_pair(station, spacecraft, t);
}

std::vector<Window> find_windows(const Actor& a, const Actor& b, Epoch t0, Epoch t1) {
    if (!(t0 < t1)) throw SimError("window search requires t0 < t1");
    constexpr double coarse_step_s = 10.0;
    constexpr double refine_tol_s = 0.1;

    // Bisect a visibility transition inside (lo, hi]; lo and hi have
    // different visibility states.
    const auto refine = [&](Epoch lo, Epoch hi, bool lo_visible) {
        while (hi - lo > refine_tol_s) {
            const Epoch mid = lo + 0.5 * (hi - lo);
            if (is_visible(a, b, mid) == lo_visible)
                lo = mid;
            else
                hi = mid;
        }
        return hi;
    };

    std::vector<Window> windows;
    bool was_visible = is_visible(a, b, t0);
    Epoch window_start = t0;
    Epoch prev = t0;
    for (Epoch t = t0 + coarse_step_s;; t = t + coarse_step_s) {
        if (t > t1) t = t1;
        const bool now_visible = is_visible(a, b, t);
        if (now_visible != was_visible) {
            const Epoch boundary = refine(prev, t, was_visible);
            if (now_visible)
                window_start = boundary;
            else
                windows.push_back({window_start, boundary, a.id, b.id});
            was_visible = now_visible;
        }
        prev = t;
        if (t == t1) break;
    }
    if (was_visible && t1 - window_start > 0.0) windows.push_back({window_start, t1, a.id, b.id});
    return windows;
}

double transmission_duration_s(double bits, const LinkBudget& link) {
    link.validate();
    if (bits < 0.0) throw SimError("bit count must be >= 0");
    return bits / link.data_rate_bits_s;
}

namespace {

json body_to_json(const CentralBody& body) {
    return {
        {"name", body.name},
        {"radius_m", body.radius_m},
        {"mu_m3_s2", body.mu_m3_s2},
        {"rotation_rate_rad_s", body.rotation_rate_rad_s},
        {"surface_temperature_k", body.surface_temperature_k},
        {"ir_emissivity", body.ir_emissivity},
        {"solar_reflectance", body.solar_reflectance},
    };
}

CentralBody body_from_json(const json& j) {
    CentralBody body;
    body.name = j.at("name").get<std::string>();
    body.radius_m = j.at("radius_m").get<double>();
    body.mu_m3_s2 = j.at("mu_m3_s2").get<double>();
    body.rotation_rate_rad_s = j.at("rotation_rate_rad_s").get<double>();
    body.surface_temperature_k = j.at("surface_temperature_k").get<double>();
    body.ir_emissivity = j.at("ir_emissivity").get<double>();
    body.solar_reflectance = j.at("solar_reflectance").get<double>();
    body.validate();
    return body;
}

}  // namespace

std::string serialize_actor(const Actor& a) {
    json j;
    j["schema_version"] = 1;
    j["id"] = a.id;
    j["kind"] = a.is_spacecraft() ? "spacecraft" : "ground_station";
    j["epoch_s"] = a.local_time.seconds;
    if (a.orbit) {
        j["orbit"] = {
            {"a_m", a.orbit->semi_major_axis_m},
            {"e", a.orbit->eccentricity},
            {"i_rad", a.orbit->inclination_rad},
            {"raan_rad", a.orbit->raan_rad},
            {"argp_rad", a.orbit->arg_periapsis_rad},
            {"nu_rad", a.orbit->true_anomaly_at_epoch_rad},
            {"epoch_s", a.orbit->epoch.seconds},
            {"central_body", body_to_json(a.orbit->central_body)},
        };
    }
    if (a.geodetic) {
        j["geodetic"] = {
            {"lat_deg", a.geodetic->latitude_deg},
            {"lon_deg", a.geodetic->longitude_deg},
            {"elev_m", a.geodetic->elevation_m},
            {"min_elev_deg", a.minimum_elevation_deg},
        };
    }
    if (a.thermal) {
        const auto& p = a.thermal->properties;
        j["thermal"] = {
            {"mass_kg", p.mass_kg},
            {"thermal_capacity_j_kg_k", p.thermal_capacity_j_kg_k},
            {"solar_absorptance", p.solar_absorptance},
            {"ir_absorptance", p.ir_absorptance},
            {"area_sun_m2", p.area_sun_m2},
            {"area_albedo_m2", p.area_albedo_m2},
            {"area_body_m2", p.area_body_m2},
            {"emissive_area_m2", p.emissive_area_m2},
            {"power_to_heat_ratio", p.power_to_heat_ratio},
            {"solar_irradiance_w_m2", p.solar_irradiance_w_m2},
            {"temperature_K", a.thermal->temperature_k},
        };
    }
    if (a.battery) {
        j["battery"] = {
            {"capacity_j", a.battery->capacity_j},
            {"level_j", a.battery->level_j},
            {"charging_rate_w", a.battery->charging_rate_w},
        };
    }
    if (a.radiation) {
        j["radiation"] = {
            {"r_d", a.radiation->config.data_corruption_rate_hz},
            {"r_i", a.radiation->config.interruption_rate_hz},
            {"r_f", a.radiation->config.failure_rate_hz},
            {"rng_seed", a.radiation->config.rng_seed},
            {"failed", a.radiation->state.failed},
        };
    }
    if (!a.comm_devices.empty()) {
        json devices = json::object();
        for (const auto& [name, rate] : a.comm_devices) devices[name] = rate;
        j["comm_devices"] = devices;
    }
    return j.dump();
}

Actor deserialize_actor(const std::string& bytes) {
    const json j = json::parse(bytes);  // throws with byte position on malformed input
    if (!j.contains("schema_version") || j.at("schema_version").get<int>() != 1)
        throw SimError("unknown actor schema version");

    const std::string id = j.at("id").get<std::string>();
    const Epoch epoch{j.at("epoch_s").get<double>()};
    const std::string kind = j.at("kind").get<std::string>();

    Actor a;
    if (kind == "spacecraft") {
        const json& o = j.at("orbit");
        astro::OrbitState orbit;
        orbit.semi_major_axis_m = o.at("a_m").get<double>();
        orbit.eccentricity = o.at("e").get<double>();
        orbit.inclination_rad = o.at("i_rad").get<double>();
        orbit.raan_rad = o.at("raan_rad").get<double>();
        orbit.arg_periapsis_rad = o.at("argp_rad").get<double>();
        orbit.true_anomaly_at_epoch_rad = o.at("nu_rad").get<double>();
        orbit.epoch = Epoch{o.at("epoch_s").get<double>()};
        orbit.central_body = body_from_json(o.at("central_body"));
        a = make_spacecraft(id, epoch, orbit);
    } else if (kind == "ground_station") {
        const json& g = j.at("geodetic");
        a = make_ground_station(id, epoch, g.at("lat_deg").get<double>(),
                                g.at("lon_deg").get<double>(), g.at("elev_m").get<double>(),
                                g.at("min_elev_deg").get<double>());
    } else {
        throw SimError("unknown actor kind: " + kind);
    }

    if (j.contains("thermal")) {
        const json& tj = j.at("thermal");
        thermal::ThermalState state;
        state.properties.mass_kg = tj.at("mass_kg").get<double>();
        state.properties.thermal_capacity_j_kg_k = tj.at("thermal_capacity_j_kg_k").get<double>();
        state.properties.solar_absorptance = tj.at("solar_absorptance").get<double>();
        state.properties.ir_absorptance = tj.at("ir_absorptance").get<double>();
        state.properties.area_sun_m2 = tj.at("area_sun_m2").get<double>();
        state.properties.area_albedo_m2 = tj.at("area_albedo_m2").get<double>();
        state.properties.area_body_m2 = tj.at("area_body_m2").get<double>();
        state.properties.emissive_area_m2 = tj.at("emissive_area_m2").get<double>();
        state.properties.power_to_heat_ratio = tj.at("power_to_heat_ratio").get<double>();
        state.properties.solar_irradiance_w_m2 = tj.at("solar_irradiance_w_m2").get<double>();
        state.temperature_k = tj.at("temperature_K").get<double>();
        a.set_thermal(state);
    }
    if (j.contains("battery")) {
        const json& bj = j.at("battery");
        a.set_battery({bj.at("capacity_j").get<double>(), bj.at("level_j").get<double>(),
                       bj.at("charging_rate_w").get<double>()});
    }
    if (j.contains("radiation")) {
        const json& rj = j.at("radiation");
        radiation::RadiationConfig config;
        config.data_corruption_rate_hz = rj.at("r_d").get<double>();
        config.interruption_rate_hz = rj.at("r_i").get<double>();
        config.failure_rate_hz = rj.at("r_f").get<double>();
        config.rng_seed = rj.value("rng_seed", std::uint64_t{0});
        a.set_radiation(config);
        if (rj.at("failed").get<bool>()) {
            a.radiation->state.failed = true;
            a.radiation_active = false;
        }
    }
    if (j.contains("comm_devices")) {
        for (const auto& [name, rate] : j.at("comm_devices").items())
            a.add_comm_device(name, rate.get<double>());
    }
    return a;
}

void update_known_peers(Actor& a, const std::vector<std::string>& serialized_peers, Epoch t) {
    std::set<std::string> live;
    for (const std::string& bytes : serialized_peers) {
        const Actor peer = deserialize_actor(bytes);
        if (peer.id == a.id) throw SimError("peer list contains the actor's own id: " + peer.id);
        if (peer.local_time > t) throw SimError("peer epoch is ahead of the update time");
        if (peer.has_failed_device()) continue;  // no heartbeat from a failed device
        live.insert(peer.id);
    }
    a.known_peers = std::move(live);
}

}  // namespace sim::comms
