#include <doctest.h>

#include "sim/power.hpp"

using namespace sim;
using namespace sim::power;

TEST_CASE("sunlit charging fills the observation-scenario battery in one pass") {
    // 0.162 MJ at SoC 0.5, 10 W charger, 8100 s of sunlight.
    Battery battery{0.162e6, 0.081e6, 10.0};
    battery = charge(battery, /*sunlit=*/true, 8100.0);
    CHECK(battery.state_of_charge() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("charging is gated by sunlight and clamped at capacity") {
    const Battery battery{1e6, 0.5e6, 50.0};
    CHECK(charge(battery, false, 5000.0).level_j == 0.5e6);
    CHECK(charge(battery, true, 1e9).level_j == 1e6);
    CHECK(charge(battery, true, 100.0).level_j == doctest::Approx(0.5e6 + 5000.0));
}

TEST_CASE("discharge at constellation rates") {
    // 1 MJ at SoC 1.0, 100 W, 600 s -> SoC 0.94.
    const Battery battery{1e6, 1e6, 50.0};
    const DischargeResult r = discharge(battery, 100.0, 600.0);
    CHECK(r.battery.state_of_charge() == doctest::Approx(0.94).epsilon(1e-12));
    CHECK_FALSE(r.depleted);
}

TEST_CASE("discharge clamps at empty and reports depletion") {
    const Battery battery{1e6, 50.0, 0.0};
    const DischargeResult r = discharge(battery, 100.0, 1.0);
    CHECK(r.battery.level_j == 0.0);
    CHECK(r.depleted);
    // Zero draw leaves the battery untouched and is never a depletion.
    const DischargeResult r0 = discharge(battery, 0.0, 1.0);
    CHECK(r0.battery.level_j == 50.0);
    CHECK_FALSE(r0.depleted);
}

TEST_CASE("substepping an interval is exact when no clamp engages") {
    Battery coarse{1e6, 0.5e6, 50.0};
    Battery fine = coarse;
    coarse = charge(coarse, true, 1000.0);
    coarse = discharge(coarse, 30.0, 1000.0).battery;
    for (int i = 0; i < 1000; ++i) {
        fine = charge(fine, true, 1.0);
        fine = discharge(fine, 30.0, 1.0).battery;
    }
    CHECK(fine.level_j == doctest::Approx(coarse.level_j).epsilon(1e-12));
}

TEST_CASE("state of charge stays within bounds under any interleaving") {
    Battery battery{1e4, 5e3, 200.0};
    for (int i = 0; i < 500; ++i) {
        battery = charge(battery, i % 3 != 0, 17.0);
        battery = discharge(battery, (i % 5) * 100.0, 13.0).battery;
        CHECK(battery.state_of_charge() >= 0.0);
        CHECK(battery.state_of_charge() <= 1.0);
    }
}

TEST_CASE("battery validation") {
    CHECK_THROWS_AS((Battery{0.0, 0.0, 10.0}.validate()), SimError);
    CHECK_THROWS_AS((Battery{1e6, 2e6, 10.0}.validate()), SimError);
    CHECK_THROWS_AS((Battery{1e6, -1.0, 10.0}.validate()), SimError);
    CHECK_THROWS_AS((Battery{1e6, 1e5, -10.0}.validate()), SimError);
    Battery ok{1e6, 1e5, 10.0};
    ok.validate();
}
