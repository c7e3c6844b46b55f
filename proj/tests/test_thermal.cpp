#include <doctest.h>

#include <cmath>

#include "sim/thermal.hpp"

using namespace sim;
using namespace sim::thermal;

namespace {

// The 16-satellite constellation spacecraft: 50 kg, c = 1000, perfect
// absorber, 2 m^2 facing the Sun / albedo / body, 4 m^2 emissive, half
// the activity power turned into heat, 1360 W/m^2.
ThermalState constellation_state() {
    ThermalState state;
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
    state.properties.solar_irradiance_w_m2 = 1360.0;
    return state;
}

}  // namespace

TEST_CASE("sunlit flux terms match hand-computed values") {
    const auto body = CentralBody::earth();
    const auto state = constellation_state();
    const double r = 6928137.0;
    const HeatFluxes f = heat_fluxes(state, /*sunlit=*/true, r, /*activity_power_w=*/100.0, body);

    CHECK(f.solar_w == doctest::Approx(2720.0));   // 1.0 * 1360 * 2
    CHECK(f.albedo_w == doctest::Approx(408.0));   // 0.5 * 1.0 * 0.3 * 1360 * 2
    const double ir_expected = body.radius_m * body.radius_m * 1.0 * 0.6 * kStefanBoltzmann *
                               std::pow(288.0, 4.0) * 2.0 / (r * r);
    CHECK(f.ir_w == doctest::Approx(ir_expected).epsilon(1e-12));
    CHECK(f.activity_w == doctest::Approx(50.0));  // 0.5 * 100
    const double diss_expected =
        1.0 * 4.0 * kStefanBoltzmann * std::pow(273.15, 4.0);
    CHECK(f.dissipated_w == doctest::Approx(diss_expected).epsilon(1e-12));
}

TEST_CASE("eclipse gates solar and albedo but not infrared") {
    const auto body = CentralBody::earth();
    auto state = constellation_state();
    state.temperature_k = 0.0;  // no dissipation either
    const HeatFluxes f = heat_fluxes(state, /*sunlit=*/false, 6928137.0, 0.0, body);
    CHECK(f.solar_w == 0.0);
    CHECK(f.albedo_w == 0.0);
    CHECK(f.activity_w == 0.0);
    CHECK(f.dissipated_w == 0.0);
    CHECK(f.ir_w > 0.0);
    CHECK(f.net_w() == f.ir_w);
}

TEST_CASE("infrared flux falls with the inverse square of distance") {
    const auto body = CentralBody::earth();
    const auto state = constellation_state();
    const double near = heat_fluxes(state, false, 7000e3, 0.0, body).ir_w;
    const double far = heat_fluxes(state, false, 14000e3, 0.0, body).ir_w;
    CHECK(near == doctest::Approx(4.0 * far).epsilon(1e-12));
}

TEST_CASE("power to heat ratio is irrelevant at zero activity power") {
    const auto body = CentralBody::earth();
    auto a = constellation_state();
    auto b = constellation_state();
    a.properties.power_to_heat_ratio = 0.1;
    b.properties.power_to_heat_ratio = 0.9;
    const HeatFluxes fa = heat_fluxes(a, true, 6928137.0, 0.0, body);
    const HeatFluxes fb = heat_fluxes(b, true, 6928137.0, 0.0, body);
    CHECK(fa.net_w() == fb.net_w());
}

TEST_CASE("constant flux integrates to the closed-form equilibrium") {
    const auto body = CentralBody::earth();
    auto state = constellation_state();
    // Hold 300 W of input flux fixed and let only dissipation vary:
    // T_eq = (300 / (eps * A * sigma))^(1/4) with eps = 1, A = 4.
    const double t_eq = std::pow(300.0 / (4.0 * kStefanBoltzmann), 0.25);
    CHECK(t_eq == doctest::Approx(190.7).epsilon(1e-3));

    state.temperature_k = 273.15;
    for (int i = 0; i < 300000; ++i) {
        HeatFluxes f;
        f.solar_w = 300.0;
        f.dissipated_w = heat_fluxes(state, false, 1e30, 0.0, body).dissipated_w;
        state = step_temperature(state, f, 1.0);
    }
    CHECK(state.temperature_k == doctest::Approx(t_eq).epsilon(0.1 / t_eq));

    // From below as well.
    state.temperature_k = 50.0;
    for (int i = 0; i < 300000; ++i) {
        HeatFluxes f;
        f.solar_w = 300.0;
        f.dissipated_w = heat_fluxes(state, false, 1e30, 0.0, body).dissipated_w;
        state = step_temperature(state, f, 1.0);
    }
    CHECK(state.temperature_k == doctest::Approx(t_eq).epsilon(0.1 / t_eq));
}

TEST_CASE("constellation satellite warms at its initial state when sunlit") {
    const auto body = CentralBody::earth();
    const auto state = constellation_state();
    const HeatFluxes f = heat_fluxes(state, true, 6921000.0, 100.0, body);
    CHECK(f.net_w() > 0.0);
    const ThermalState next = step_temperature(state, f, 1.0);
    CHECK(next.temperature_k > state.temperature_k);
    // dT = Q dt / (m c)
    CHECK(next.temperature_k - state.temperature_k ==
          doctest::Approx(f.net_w() / (50.0 * 1000.0)).epsilon(1e-12));
}

TEST_CASE("temperature never drops below absolute zero") {
    auto state = constellation_state();
    state.temperature_k = 1.0;
    HeatFluxes f;
    f.dissipated_w = 1e9;
    const ThermalState next = step_temperature(state, f, 10.0);
    CHECK(next.temperature_k == 0.0);
}

TEST_CASE("property validation rejects bad parameters") {
    auto props = constellation_state().properties;
    props.mass_kg = 0.0;
    CHECK_THROWS_AS(props.validate(), SimError);
    props = constellation_state().properties;
    props.solar_absorptance = 1.5;
    CHECK_THROWS_AS(props.validate(), SimError);
    props = constellation_state().properties;
    props.power_to_heat_ratio = -0.1;
    CHECK_THROWS_AS(props.validate(), SimError);
}
