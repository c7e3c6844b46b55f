/**
 * Single-node spacecraft temperature model: absorbed solar, albedo and
 * body infrared fluxes plus activity heat against radiative dissipation,
 * integrated by explicit Euler.
 */
#ifndef SIM_THERMAL_HPP
#define SIM_THERMAL_HPP

#include "sim/types.hpp"

namespace sim::thermal {

struct ThermalProperties {
    double mass_kg{};
    double thermal_capacity_j_kg_k{};
    double solar_absorptance{};  // in [0, 1]
    double ir_absorptance{};     // in [0, 1]
    double area_sun_m2{};
    double area_albedo_m2{};
    double area_body_m2{};
    double emissive_area_m2{};
    double power_to_heat_ratio{};     // in [0, 1]
    double solar_irradiance_w_m2{};

    void validate() const;
};

struct ThermalState {
    double temperature_k{};  // never below 0 K
    ThermalProperties properties;
};

struct HeatFluxes {
    double solar_w{};
    double albedo_w{};
    double ir_w{};
    double activity_w{};
    double dissipated_w{};

    double net_w() const { return solar_w + albedo_w + ir_w + activity_w - dissipated_w; }
};

/**
 * Instantaneous heat fluxes. Solar and albedo terms apply only when
 * sunlit; the body infrared term scales with the inverse square of the
 * distance to the body center and is not gated by eclipse.
 */
HeatFluxes heat_fluxes(const ThermalState& state, bool sunlit, double distance_to_body_center_m,
                       double activity_power_w, const CentralBody& body);

/** One explicit Euler step; the result is clamped at 0 K. */
ThermalState step_temperature(const ThermalState& state, const HeatFluxes& fluxes, double dt_s);

}  // namespace sim::thermal

#endif  // SIM_THERMAL_HPP
