/**
 * Communication geometry and actor exchange: visibility, window search,
 * transmission timing, serialization and the peer registry.
 */
#ifndef SIM_COMMS_HPP
#define SIM_COMMS_HPP

#include <string>
#include <vector>

#include "sim/actor.hpp"

namespace sim::comms {

/** Maximal interval of continuous visibility between two actors. */
struct Window {
    Epoch start;
    Epoch end;
    std::string from_actor;
    std::string to_actor;
};

struct LinkBudget {
    double data_rate_bits_s{};  // constant, distance-independent

    void validate() const;
};

/**
 * Visibility at time t. Spacecraft pairs use the strict (infinite-line)
 * body occlusion test; spacecraft-ground pairs require the station
 * elevation to reach its minimum. Ground-ground pairs are unsupported
 * and throw. Symmetric in its arguments.
 */
bool is_visible(const Actor& a, const Actor& b, Epoch t);

/**
 * All maximal visibility intervals within [t0, t1]: 10 s coarse scan,
 * boundaries refined by bisection to 0.1 s. Intervals shorter than the
 * scan step can be missed.
 */
std::vector<Window> find_windows(const Actor& a, const Actor& b, Epoch t0, Epoch t1);

/** bits / data_rate, exactly. */
double transmission_duration_s(double bits, const LinkBudget& link);

/**
 * Versioned UTF-8 JSON serialization of an actor, including orbit
 * elements, model parameters and current model state. Optional keys are
 * omitted when the model is absent; output is byte-stable for identical
 * actors.
 */
std::string serialize_actor(const Actor& a);

/** Inverse of serialize_actor. Malformed or unknown-version input throws. */
Actor deserialize_actor(const std::string& bytes);

/**
 * Replaces a's known peers with the live peers from the given serialized
 * actors; peers flagged failed are excluded. A peer carrying a's own id
 * throws. Peer epochs must not be ahead of t.
 */
void update_known_peers(Actor& a, const std::vector<std::string>& serialized_peers, Epoch t);

}  // namespace sim::comms

#endif  // SIM_COMMS_HPP
