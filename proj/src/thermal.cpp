#include "sim/thermal.hpp"

#include <algorithm>

namespace sim::thermal {

namespace {

void check_ratio(double value, const char* name) {
    if (value < 0.0 || value > 1.0) throw SimError(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

void ThermalProperties::validate() const {
    if (mass_kg <= 0.0) throw SimError("mass must be positive");
    if (thermal_capacity_j_kg_k <= 0.0) throw SimError("thermal capacity must be positive");
    check_ratio(solar_absorptance, "solar absorptance");
    check_ratio(ir_absorptance, "infrared absorptance");
    check_ratio(power_to_heat_ratio, "power-to-heat ratio");
    if (area_sun_m2 < 0.0 || area_albedo_m2 < 0.0 || area_body_m2 < 0.0 ||
        emissive_area_m2 < 0.0)
        throw SimError("areas must be >= 0");
    if (solar_irradiance_w_m2 < 0.0) throw SimError("solar irradiance must be >= 0");
}

HeatFluxes heat_fluxes(const ThermalState& state, bool sunlit, double distance_to_body_center_m,
                       double activity_power_w, const CentralBody& body) {
    if (distance_to_body_center_m <= body.radius_m)
        throw SimError("spacecraft distance must exceed the body radius");
    if (state.temperature_k < 0.0) throw SimError("temperature must be >= 0 K");

    const ThermalProperties& p = state.properties;
    HeatFluxes fluxes;
    if (sunlit) {
        fluxes.solar_w = p.solar_absorptance * p.solar_irradiance_w_m2 * p.area_sun_m2;
        fluxes.albedo_w = 0.5 * p.solar_absorptance * body.solar_reflectance *
                          p.solar_irradiance_w_m2 * p.area_albedo_m2;
    }
    const double rb = body.radius_m;
    const double tb = body.surface_temperature_k;
    fluxes.ir_w = rb * rb * p.ir_absorptance * body.ir_emissivity * kStefanBoltzmann *
                  tb * tb * tb * tb * p.area_body_m2 /
                  (distance_to_body_center_m * distance_to_body_center_m);
    fluxes.activity_w = p.power_to_heat_ratio * activity_power_w;
    const double t = state.temperature_k;
    fluxes.dissipated_w = p.ir_absorptance * p.emissive_area_m2 * kStefanBoltzmann * t * t * t * t;
    return fluxes;
}

ThermalState step_temperature(const ThermalState& state, const HeatFluxes& fluxes, double dt_s) {
    if (dt_s <= 0.0) throw SimError("dt must be positive");
    const double heat_capacity = state.properties.mass_kg * state.properties.thermal_capacity_j_kg_k;
    ThermalState next = state;
    next.temperature_k = std::max(0.0, state.temperature_k + dt_s * fluxes.net_w() / heat_capacity);
    return next;
}

}  // namespace sim::thermal
