/**
 * Poisson-process single-event-effect model: bit flips, activity
 * interruptions and permanent device failure.
 */
#ifndef SIM_RADIATION_HPP
#define SIM_RADIATION_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "sim/types.hpp"

namespace sim::radiation {

struct RadiationConfig {
    double data_corruption_rate_hz{};  // bit-flip events per second
    double interruption_rate_hz{};     // activity-interrupt events per second
    double failure_rate_hz{};          // device-failure events per second
    std::uint64_t rng_seed{};

    void validate() const;
};

/**
 * Per-actor radiation state. The generator is owned by the actor's
 * simulation instance; a failed device stays failed.
 */
struct RadiationState {
    bool failed{false};
    std::uint64_t cumulative_bitflips{0};
    std::mt19937_64 rng;
};

struct RadiationModel {
    RadiationConfig config;
    RadiationState state;
};

/** Seeds the generator from the config seed XOR a stable hash of the actor id. */
RadiationModel make_model(const RadiationConfig& config, const std::string& actor_id);

/**
 * Poisson sample. Inversion by sequential search for lambda < 10, a
 * rounded clamped normal approximation for lambda >= 10. lambda = 0
 * returns 0 without consuming the generator.
 */
std::uint64_t sample_poisson(std::mt19937_64& rng, double lambda);

struct EventSample {
    std::uint64_t bitflips{};
    bool interrupted{};
    bool failed_now{};
};

/**
 * Draws the three event counts for an interval dt in the fixed order
 * corruption, interruption, failure. Calling on a failed device throws.
 */
EventSample sample_events(RadiationModel& model, double dt_s);

/**
 * XOR-flips `bitflips` uniformly chosen bit positions (with
 * replacement). Flipping a nonzero count on an empty buffer throws.
 */
std::vector<std::uint8_t> corrupt_buffer(const std::vector<std::uint8_t>& buffer,
                                         std::uint64_t bitflips, std::mt19937_64& rng);

}  // namespace sim::radiation

#endif  // SIM_RADIATION_HPP
