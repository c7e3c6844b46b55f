#include "sim/radiation.hpp"

#include <cmath>

namespace sim::radiation {

void RadiationConfig::validate() const {
    if (data_corruption_rate_hz < 0.0 || interruption_rate_hz < 0.0 || failure_rate_hz < 0.0)
        throw SimError("radiation event rates must be >= 0");
}

RadiationModel make_model(const RadiationConfig& config, const std::string& actor_id) {
    config.validate();
    RadiationModel model;
    model.config = config;
    model.state.rng.seed(config.rng_seed ^ stable_hash(actor_id));
    return model;
}

std::uint64_t sample_poisson(std::mt19937_64& rng, double lambda) {
    if (lambda < 0.0) throw SimError("Poisson rate must be >= 0");
    if (lambda == 0.0) return 0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (lambda < 10.0) {
        // Inversion by sequential search.
        const double u = unit(rng);
        double p = std::exp(-lambda);
        double cumulative = p;
        std::uint64_t k = 0;
        while (u > cumulative && k < 1000000) {
            ++k;
            p *= lambda / static_cast<double>(k);
            cumulative += p;
        }
        return k;
    }
    // Rounded clamped normal approximation for large rates.
    std::normal_distribution<double> normal(lambda, std::sqrt(lambda));
    return static_cast<std::uint64_t>(std::llround(std::max(0.0, normal(rng))));
}

EventSample sample_events(RadiationModel& model, double dt_s) {
    if (dt_s <= 0.0) throw SimError("dt must be positive");
    if (model.state.failed) throw SimError("device has failed permanently; no further sampling");

    EventSample sample;
    // Fixed draw order: corruption, interruption, failure.
    sample.bitflips = sample_poisson(model.state.rng, model.config.data_corruption_rate_hz * dt_s);
    sample.interrupted =
        sample_poisson(model.state.rng, model.config.interruption_rate_hz * dt_s) >= 1;
    sample.failed_now = sample_poisson(model.state.rng, model.config.failure_rate_hz * dt_s) >= 1;

    model.state.cumulative_bitflips += sample.bitflips;
    if (sample.failed_now) model.state.failed = true;
    return sample;
}

std::vector<std::uint8_t> corrupt_buffer(const std::vector<std::uint8_t>& buffer,
                                         std::uint64_t bitflips, std::mt19937_64& rng) {
    if (bitflips == 0) return buffer;
    if (buffer.empty()) throw SimError("cannot corrupt an empty buffer");
    std::vector<std::uint8_t> corrupted = buffer;
    std::uniform_int_distribution<std::uint64_t> position(0, buffer.size() * 8 - 1);
    for (std::uint64_t i = 0; i < bitflips; ++i) {
        const std::uint64_t bit = position(rng);
        corrupted[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    }
    return corrupted;
}

}  // namespace sim::radiation
