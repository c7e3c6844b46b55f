#include <utility>

#include "sim/actor.hpp"
#include "sim/types.hpp"

namespace sim {

void CentralBody::validate() const {
    if (radius_m <= 0.0) throw SimError("central body radius must be positive");
    if (mu_m3_s2 <= 0.0) throw SimError("gravitational parameter must be positive");
    if (ir_emissivity < 0.0 || ir_emissivity > 1.0)
        throw SimError("infrared emissivity must lie in [0, 1]");
    if (solar_reflectance < 0.0 || solar_reflectance > 1.0)
        throw SimError("solar reflectance must lie in [0, 1]");
    if (surface_temperature_k < 0.0) throw SimError("surface temperature must be >= 0 K");
}

CentralBody CentralBody::earth() {
    CentralBody body;
    body.name = "Earth";
    body.radius_m = 6371000.0;  // volumetric mean, used for occlusion
    body.mu_m3_s2 = 3.986004418e14;
    body.rotation_rate_rad_s = 2.0 * kPi / kSiderealDay;
    body.surface_temperature_k = 288.0;
    body.ir_emissivity = 0.6;
    body.solar_reflectance = 0.3;
    return body;
}

std::uint64_t stable_hash(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void Actor::set_thermal(thermal::ThermalState state) {
    if (!is_spacecraft()) throw SimError("ground stations carry no thermal model");
    state.properties.validate();
    if (state.temperature_k < 0.0) throw SimError("temperature must be >= 0 K");
    thermal = std::move(state);
}

void Actor::set_battery(power::Battery b) {
    if (!is_spacecraft()) throw SimError("ground stations carry no battery model");
    b.validate();
    battery = b;
}

void Actor::set_radiation(const radiation::RadiationConfig& config) {
    if (!is_spacecraft()) throw SimError("ground stations carry no radiation model");
    config.validate();
    radiation = radiation::make_model(config, id);
    radiation_active = config.data_corruption_rate_hz > 0.0 ||
                       config.interruption_rate_hz > 0.0 || config.failure_rate_hz > 0.0;
}

void Actor::add_comm_device(const std::string& name, double bits_per_s) {
    if (bits_per_s <= 0.0) throw SimError("comm device data rate must be positive");
    comm_devices[name] = bits_per_s;
}

Vec3 Actor::position_at(Epoch t) const {
    if (is_spacecraft()) {
        return astro::propagate(*orbit, t).position_m;
    }
    astro::GeodeticCoordinates site{geodetic->latitude_deg, geodetic->longitude_deg,
                                    geodetic->elevation_m};
    return astro::station_position(site, t, CentralBody::earth());
}

Actor make_spacecraft(const std::string& id, Epoch epoch, astro::OrbitState orbit) {
    if (id.empty()) throw SimError("actor id must be nonempty");
    orbit.validate();
    Actor a;
    a.id = id;
    a.kind = ActorKind::Spacecraft;
    a.local_time = epoch;
    a.orbit = std::move(orbit);
    a.position = astro::propagate(*a.orbit, epoch).position_m;
    return a;
}

Actor make_ground_station(const std::string& id, Epoch epoch, double latitude_deg,
                          double longitude_deg, double elevation_m,
                          double minimum_elevation_deg) {
    if (id.empty()) throw SimError("actor id must be nonempty");
    if (latitude_deg < -90.0 || latitude_deg > 90.0)
        throw SimError("latitude out of range [-90, 90]");
    if (longitude_deg < -180.0 || longitude_deg > 180.0)
        throw SimError("longitude out of range [-180, 180]");
    Actor a;
    a.id = id;
    a.kind = ActorKind::GroundStation;
    a.local_time = epoch;
    a.geodetic = GeodeticPosition{latitude_deg, longitude_deg, elevation_m};
    a.minimum_elevation_deg = minimum_elevation_deg;
    a.position = a.position_at(epoch);
    return a;
}

}  // namespace sim
