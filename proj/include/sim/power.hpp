/**
 * Battery state-of-charge accounting: constant-rate solar charging when
 * sunlit, constant-rate discharge during activities.
 */
#ifndef SIM_POWER_HPP
#define SIM_POWER_HPP

#include "sim/types.hpp"

namespace sim::power {

struct Battery {
    double capacity_j{};
    double level_j{};
    double charging_rate_w{};

    double state_of_charge() const { return level_j / capacity_j; }

    void validate() const;
};

/** Adds charging_rate * dt when sunlit, clamped at capacity. */
Battery charge(const Battery& battery, bool sunlit, double dt_s);

struct DischargeResult {
    Battery battery;
    bool depleted{};  // true iff the level clamped at zero
};

/** Removes activity_power * dt, clamped at zero. */
DischargeResult discharge(const Battery& battery, double activity_power_w, double dt_s);

}  // namespace sim::power

#endif  // SIM_POWER_HPP
