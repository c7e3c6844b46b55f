/**
 * Actors: spacecraft and ground stations with optional physical models
 * attached after construction.
 */
#ifndef SIM_ACTOR_HPP
#define SIM_ACTOR_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "sim/astro.hpp"
#include "sim/power.hpp"
#include "sim/radiation.hpp"
#include "sim/thermal.hpp"
#include "sim/types.hpp"

namespace sim {

enum class ActorKind { Spacecraft, GroundStation };

/** Fixed position on the rotating central body, WGS84 geodetic. */
struct GeodeticPosition {
    double latitude_deg{};
    double longitude_deg{};
    double elevation_m{};
};

/**
 * A spacecraft or ground station. Spacecraft carry an orbit; ground
 * stations a geodetic position. Ground stations never carry thermal,
 * battery or radiation models.
 */
struct Actor {
    std::string id;
    ActorKind kind{ActorKind::Spacecraft};
    Epoch local_time{};
    std::optional<astro::OrbitState> orbit;
    std::optional<GeodeticPosition> geodetic;
    double minimum_elevation_deg{0.0};  // ground stations only
    std::optional<thermal::ThermalState> thermal;
    std::optional<power::Battery> battery;
    std::optional<radiation::RadiationModel> radiation;
    std::map<std::string, double> comm_devices;  // device name -> bits/s
    std::set<std::string> known_peers;

    // Derived per-step state maintained by the simulation engine.
    Vec3 position{};
    bool in_eclipse{false};
    bool pending_interrupt{false};
    // True while the radiation model can still produce events (attached,
    // a nonzero rate, not failed); lets the engine skip the model - and
    // its large RNG state - on the hot path otherwise.
    bool radiation_active{false};

    bool is_spacecraft() const { return kind == ActorKind::Spacecraft; }
    bool has_failed_device() const { return radiation && radiation->state.failed; }

    // Model attachment; throws SimError for ground stations or invalid
    // parameters.
    void set_thermal(thermal::ThermalState state);
    void set_battery(power::Battery battery);
    void set_radiation(const radiation::RadiationConfig& config);
    void add_comm_device(const std::string& name, double bits_per_s);

    /** Position at an arbitrary time (propagated orbit or rotated station). */
    Vec3 position_at(Epoch t) const;
};

Actor make_spacecraft(const std::string& id, Epoch epoch, astro::OrbitState orbit);

Actor make_ground_station(const std::string& id, Epoch epoch, double latitude_deg,
                          double longitude_deg, double elevation_m,
                          double minimum_elevation_deg = 0.0);

}  // namespace sim

#endif  // SIM_ACTOR_HPP
