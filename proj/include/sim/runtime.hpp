/**
 * The simulation engine: owns actors, interleaves user activities with
 * physics-model updates and constraint checks, advances time in
 * simulated or wall-clock-paced mode, and logs state.
 */
#ifndef SIM_RUNTIME_HPP
#define SIM_RUNTIME_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sim/actor.hpp"

namespace sim::runtime {

enum class ActivityOutcome { Completed, ConstraintViolated, RadiationInterrupted, Aborted };

const char* to_string(ActivityOutcome outcome);

/**
 * One bounded slice of an activity's work. In simulated mode
 * model_time_s is the model time the slice represents; in real-time mode
 * the wall clock drives time and model_time_s is ignored.
 */
struct SliceResult {
    double model_time_s{0.0};
    bool done{false};
    bool abort{false};
};

/**
 * User workload descriptor. The action is invoked in bounded slices and
 * must return control at least every constraint-check interval of model
 * time; the engine owns the clock. The constraint, when present, is
 * evaluated at the check interval and interrupts the activity when it
 * turns false. on_termination runs exactly once with the outcome.
 */
struct Activity {
    std::string name;
    double power_w{0.0};
    std::function<SliceResult(Actor&)> action;
    std::function<bool(const Actor&)> constraint;
    std::function<void(ActivityOutcome)> on_termination;
};

enum class Mode { Simulated, RealTime };

struct SimulationConfig {
    double physics_dt_s{1.0};
    double constraint_check_interval_s{1.0};
    Mode mode{Mode::Simulated};
    std::uint64_t seed{0};

    void validate() const;
};

enum class EventKind {
    Snapshot,
    ActivityStart,
    ActivityEnd,
    Interrupted,
    WindowOpen,
    WindowClose,
    RadiationBitflip,
    RadiationInterrupt,
    DeviceFailure,
};

const char* to_string(EventKind kind);

/** One CSV row: actor state snapshot or discrete event. */
struct EventRecord {
    double time_s{};
    std::string actor_id;
    Vec3 position_m;
    std::optional<double> temperature_k;
    std::optional<double> state_of_charge;
    bool in_eclipse{false};
    std::string current_activity;
    EventKind event{EventKind::Snapshot};
};

/** Time-ordered event records, written as CSV. */
class EventLog {
public:
    void add(EventRecord record);
    const std::vector<EventRecord>& records() const { return records_; }

    /** Writes the CSV file (UTF-8, LF, full double round-trip precision). */
    void write_csv(const std::string& path) const;
    std::string to_csv() const;

private:
    std::vector<EventRecord> records_;
};

/** Accumulated wall time per physics-update phase, for profiling. */
struct StepProfile {
    double propagation_s{};  // positions + eclipse flag
    double thermal_s{};
    double power_s{};
    double radiation_s{};
    std::uint64_t steps{};

    double model_total_s() const { return propagation_s + thermal_s + power_s + radiation_s; }
};

struct InterruptCondition {
    std::string id;
    std::function<bool(const class Simulation&)> predicate;
};

struct AdvanceResult {
    double elapsed_s{};
    std::optional<std::string> fired;
};

/**
 * One simulation instance: a set of actors advanced in lockstep under a
 * single logical thread of control. Distinct instances are independent.
 */
class Simulation {
public:
    explicit Simulation(SimulationConfig config = {});

    const SimulationConfig& config() const { return config_; }

    /** Registers an actor; duplicate ids are rejected. */
    Actor& add_actor(Actor actor);
    Actor& actor(const std::string& id);
    const Actor& actor(const std::string& id) const;
    std::vector<std::string> actor_ids() const;

    Epoch now() const { return now_; }

    void register_activity(const std::string& actor_id, Activity activity);

    /**
     * Runs the named activity to its outcome in simulated time. Physics
     * advances at physics_dt for every actor with the activity's power
     * applied to the performing actor; the constraint is evaluated every
     * constraint-check interval. Only one activity may run per actor.
     */
    ActivityOutcome perform_activity(const std::string& actor_id, const std::string& name);

    /**
     * Same semantics as perform_activity but model time is driven by the
     * host monotonic clock: physics updates use measured wall intervals
     * and constraint checks run at wall-clock cadence.
     */
    ActivityOutcome run_real_time(const std::string& actor_id, const std::string& name);

    /**
     * Steps all actors at physics_dt for up to `duration_s`, stopping
     * after the first step at which any interrupt condition holds (a
     * condition already true at entry fires after one step).
     */
    AdvanceResult advance_time(double duration_s,
                               const std::vector<InterruptCondition>& conditions = {});

    /**
     * Low-level lockstep physics update over dt: per actor, propagate
     * position, refresh the eclipse flag, step the thermal model, charge
     * then discharge the battery at the actor's entry in activity_power,
     * and sample radiation events.
     */
    void step_all(double dt_s, const std::map<std::string, double>& activity_power_w = {});

    /** Appends one snapshot record per actor to the log. */
    void snapshot();

    EventLog& log() { return log_; }
    const EventLog& log() const { return log_; }

    // Optional profiling sink for step_all phases and, during
    // perform/run_real_time, activity and constraint timings.
    StepProfile* profile{nullptr};
    double activity_wall_s{};
    double constraint_wall_s{};

private:
    void step_actor(Actor& actor, double dt_s, double activity_power_w);
    ActivityOutcome finish_activity(Actor& actor, const Activity& activity,
                                    ActivityOutcome outcome);

    SimulationConfig config_;
    Epoch now_{};
    bool clock_initialized_{false};
    std::map<std::string, Actor> actors_;
    std::map<std::string, std::map<std::string, Activity>> activities_;
    std::string running_activity_actor_;
    std::string running_activity_name_;
    EventLog log_;
};

}  // namespace sim::runtime

#endif  // SIM_RUNTIME_HPP
