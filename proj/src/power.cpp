#include "sim/power.hpp"

#include <algorithm>

namespace sim::power {

void Battery::validate() const {
    if (capacity_j <= 0.0) throw SimError("battery capacity must be positive");
    if (level_j < 0.0 || level_j > capacity_j)
        throw SimError("battery level must lie in [0, capacity]");
    if (charging_rate_w < 0.0) throw SimError("charging rate must be >= 0");
}

Battery charge(const Battery& battery, bool sunlit, double dt_s) {
    if (dt_s <= 0.0) throw SimError("dt must be positive");
    if (!sunlit) return battery;
    Battery next = battery;
    next.level_j = std::min(battery.capacity_j, battery.level_j + battery.charging_rate_w * dt_s);
    return next;
}

DischargeResult discharge(const Battery& battery, double activity_power_w, double dt_s) {
    if (dt_s <= 0.0) throw SimError("dt must be positive");
    if (activity_power_w < 0.0) throw SimError("activity power must be >= 0");
    const double drawn = battery.level_j - activity_power_w * dt_s;
    DischargeResult result{battery, drawn < 0.0};
    result.battery.level_j = std::max(0.0, drawn);
    return result;
}

}  // namespace sim::power
