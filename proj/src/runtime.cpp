#include "sim/runtime.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>

namespace sim::runtime {

const char* to_string(ActivityOutcome outcome) {
    switch (outcome) {
        case ActivityOutcome::Completed: return "completed";
        case ActivityOutcome::ConstraintViolated: return "constraint_violated";
        case ActivityOutcome::RadiationInterrupted: return "radiation_interrupted";
        case ActivityOutcome::Aborted: return "aborted";
    }
    return "unknown";
}

const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Snapshot: return "snapshot";
        case EventKind::ActivityStart: return "activity_start";
        case EventKind::ActivityEnd: return "activity_end";
        case EventKind::Interrupted: return "interrupted";
        case EventKind::WindowOpen: return "window_open";
        case EventKind::WindowClose: return "window_close";
        case EventKind::RadiationBitflip: return "radiation_bitflip";
        case EventKind::RadiationInterrupt: return "radiation_interrupt";
        case EventKind::DeviceFailure: return "device_failure";
    }
    return "unknown";
}

void SimulationConfig::validate() const {
    if (physics_dt_s <= 0.0) throw SimError("physics_dt must be positive");
    if (constraint_check_interval_s <= 0.0)
        throw SimError("constraint_check_interval must be positive");
}

namespace {

// Shortest round-trip decimal form, so logs are byte-stable across runs.
std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

}  // namespace

void EventLog::add(EventRecord record) {
    if (!records_.empty() && record.time_s < records_.back().time_s)
        throw SimError("event log records must be time-ordered");
    records_.push_back(std::move(record));
}

std::string EventLog::to_csv() const {
    std::string out =
        "time_s,actor_id,pos_x_m,pos_y_m,pos_z_m,temperature_K,state_of_charge,"
        "is_in_eclipse,current_activity,event\n";
    for (const EventRecord& r : records_) {
        out += format_double(r.time_s);
        out += ',';
        out += r.actor_id;
        out += ',';
        out += format_double(r.position_m.x);
        out += ',';
        out += format_double(r.position_m.y);
        out += ',';
        out += format_double(r.position_m.z);
        out += ',';
        if (r.temperature_k) out += format_double(*r.temperature_k);
        out += ',';
        if (r.state_of_charge) out += format_double(*r.state_of_charge);
        out += ',';
        out += r.in_eclipse ? '1' : '0';
        out += ',';
        out += r.current_activity;
        out += ',';
        out += to_string(r.event);
        out += '\n';
    }
    return out;
}

void EventLog::write_csv(const std::string& path) const {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw SimError("cannot open log file for writing: " + path);
    file << to_csv();
    if (!file) throw SimError("failed writing log file: " + path);
}

Simulation::Simulation(SimulationConfig config) : config_(config) { config_.validate(); }

Actor& Simulation::add_actor(Actor actor) {
    if (actors_.count(actor.id)) throw SimError("duplicate actor id: " + actor.id);
    if (!clock_initialized_) {
        now_ = actor.local_time;
        clock_initialized_ = true;
    } else if (actor.local_time.seconds != now_.seconds) {
        throw SimError("actor " + actor.id + " has a different epoch than the simulation");
    }
    actor.position = actor.position_at(now_);
    auto [it, inserted] = actors_.emplace(actor.id, std::move(actor));
    return it->second;
}

Actor& Simulation::actor(const std::string& id) {
    const auto it = actors_.find(id);
    if (it == actors_.end()) throw SimError("unknown actor: " + id);
    return it->second;
}

const Actor& Simulation::actor(const std::string& id) const {
    const auto it = actors_.find(id);
    if (it == actors_.end()) throw SimError("unknown actor: " + id);
    return it->second;
}

std::vector<std::string> Simulation::actor_ids() const {
    std::vector<std::string> ids;
    ids.reserve(actors_.size());
    for (const auto& [id, _] : actors_) ids.push_back(id);
    return ids;
}

void Simulation::register_activity(const std::string& actor_id, Activity activity) {
    if (!activity.action) throw SimError("activity must have an action");
    if (activity.power_w < 0.0) throw SimError("activity power must be >= 0");
    actor(actor_id);  // validates the id
    auto& per_actor = activities_[actor_id];
    if (per_actor.count(activity.name))
        throw SimError("duplicate activity name on actor " + actor_id + ": " + activity.name);
    per_actor.emplace(activity.name, std::move(activity));
}

void Simulation::step_actor(Actor& a, double dt_s, double activity_power_w) {
    using clock = std::chrono::steady_clock;
    const Epoch t_next = now_ + dt_s;

    auto phase_start = clock::now();
    const auto charge_phase = [&](double StepProfile::* field) {
        if (profile) {
            const auto phase_end = clock::now();
            profile->*field += std::chrono::duration<double>(phase_end - phase_start).count();
            phase_start = phase_end;
        }
    };

    a.position = a.position_at(t_next);
    if (a.is_spacecraft()) {
        const Vec3 sun = astro::sun_position(t_next).position_m;
        a.in_eclipse = astro::is_in_eclipse(a.position, sun, a.orbit->central_body);
    }
    charge_phase(&StepProfile::propagation_s);

    if (a.thermal) {
        const auto fluxes = thermal::heat_fluxes(*a.thermal, !a.in_eclipse, norm(a.position),
                                                 activity_power_w, a.orbit->central_body);
        *a.thermal = thermal::step_temperature(*a.thermal, fluxes, dt_s);
    }
    charge_phase(&StepProfile::thermal_s);

    if (a.battery) {
        *a.battery = power::charge(*a.battery, !a.in_eclipse, dt_s);
        *a.battery = power::discharge(*a.battery, activity_power_w, dt_s).battery;
    }
    charge_phase(&StepProfile::power_s);

    if (a.radiation_active) {
        const auto events = radiation::sample_events(*a.radiation, dt_s);
        const auto log_event = [&](EventKind kind) {
            EventRecord record;
            record.time_s = t_next.seconds;
            record.actor_id = a.id;
            record.position_m = a.position;
            if (a.thermal) record.temperature_k = a.thermal->temperature_k;
            if (a.battery) record.state_of_charge = a.battery->state_of_charge();
            record.in_eclipse = a.in_eclipse;
            record.event = kind;
            log_.add(std::move(record));
        };
        if (events.bitflips > 0) log_event(EventKind::RadiationBitflip);
        if (events.interrupted) {
            a.pending_interrupt = true;
            log_event(EventKind::RadiationInterrupt);
        }
        if (events.failed_now) {
            a.radiation_active = false;
            log_event(EventKind::DeviceFailure);
        }
    }
    charge_phase(&StepProfile::radiation_s);

    a.local_time = t_next;
}

void Simulation::step_all(double dt_s, const std::map<std::string, double>& activity_power_w) {
    if (dt_s <= 0.0) throw SimError("dt must be positive");
    for (auto& [id, a] : actors_) {
        const auto it = activity_power_w.find(id);
        step_actor(a, dt_s, it == activity_power_w.end() ? 0.0 : it->second);
    }
    now_ = now_ + dt_s;
    if (profile) ++profile->steps;
}

void Simulation::snapshot() {
    for (const auto& [id, a] : actors_) {
        EventRecord record;
        record.time_s = now_.seconds;
        record.actor_id = id;
        record.position_m = a.position;
        if (a.thermal) record.temperature_k = a.thermal->temperature_k;
        if (a.battery) record.state_of_charge = a.battery->state_of_charge();
        record.in_eclipse = a.in_eclipse;
        if (id == running_activity_actor_) record.current_activity = running_activity_name_;
        record.event = EventKind::Snapshot;
        log_.add(std::move(record));
    }
}

ActivityOutcome Simulation::finish_activity(Actor& a, const Activity& activity,
                                            ActivityOutcome outcome) {
    EventRecord record;
    record.time_s = now_.seconds;
    record.actor_id = a.id;
    record.position_m = a.position;
    if (a.thermal) record.temperature_k = a.thermal->temperature_k;
    if (a.battery) record.state_of_charge = a.battery->state_of_charge();
    record.in_eclipse = a.in_eclipse;
    record.current_activity = activity.name;
    record.event = outcome == ActivityOutcome::Completed || outcome == ActivityOutcome::Aborted
                       ? EventKind::ActivityEnd
                       : EventKind::Interrupted;
    log_.add(std::move(record));

    running_activity_actor_.clear();
    running_activity_name_.clear();
    if (activity.on_termination) activity.on_termination(outcome);
    return outcome;
}

ActivityOutcome Simulation::perform_activity(const std::string& actor_id,
                                             const std::string& name) {
    using clock = std::chrono::steady_clock;
    if (!running_activity_actor_.empty())
        throw SimError("an activity is already running on actor " + running_activity_actor_);
    Actor& a = actor(actor_id);
    const auto per_actor = activities_.find(actor_id);
    if (per_actor == activities_.end() || !per_actor->second.count(name))
        throw SimError("unknown activity on actor " + actor_id + ": " + name);
    const Activity& activity = per_actor->second.at(name);

    running_activity_actor_ = actor_id;
    running_activity_name_ = name;
    a.pending_interrupt = false;

    EventRecord start;
    start.time_s = now_.seconds;
    start.actor_id = actor_id;
    start.position_m = a.position;
    if (a.thermal) start.temperature_k = a.thermal->temperature_k;
    if (a.battery) start.state_of_charge = a.battery->state_of_charge();
    start.in_eclipse = a.in_eclipse;
    start.current_activity = name;
    start.event = EventKind::ActivityStart;
    log_.add(std::move(start));

    const std::map<std::string, double> power{{actor_id, activity.power_w}};
    double since_check_s = 0.0;
    for (;;) {
        const auto slice_start = clock::now();
        const SliceResult slice = activity.action(a);
        activity_wall_s += std::chrono::duration<double>(clock::now() - slice_start).count();
        if (slice.model_time_s < 0.0) throw SimError("activity slice reported negative time");
        if (slice.model_time_s == 0.0 && !slice.done && !slice.abort)
            throw SimError("activity slice reported no progress");

        // Advance physics through the slice's model time, checking the
        // constraint and radiation interrupts at the check interval.
        double remaining_s = slice.model_time_s;
        while (remaining_s > 0.0) {
            const double dt = std::min(config_.physics_dt_s, remaining_s);
            step_all(dt, power);
            remaining_s -= dt;
            since_check_s += dt;
            if (since_check_s + 1e-9 >= config_.constraint_check_interval_s) {
                since_check_s = 0.0;
                if (a.pending_interrupt) {
                    a.pending_interrupt = false;
                    return finish_activity(a, activity, ActivityOutcome::RadiationInterrupted);
                }
                if (activity.constraint) {
                    const auto check_start = clock::now();
                    const bool ok = activity.constraint(a);
                    constraint_wall_s +=
                        std::chrono::duration<double>(clock::now() - check_start).count();
                    if (!ok)
                        return finish_activity(a, activity, ActivityOutcome::ConstraintViolated);
                }
            }
        }
        if (slice.abort) return finish_activity(a, activity, ActivityOutcome::Aborted);
        if (slice.done) return finish_activity(a, activity, ActivityOutcome::Completed);
    }
}

ActivityOutcome Simulation::run_real_time(const std::string& actor_id, const std::string& name) {
    using clock = std::chrono::steady_clock;
    if (config_.mode != Mode::RealTime)
        throw SimError("run_real_time requires RealTime mode");
    if (!running_activity_actor_.empty())
        throw SimError("an activity is already running on actor " + running_activity_actor_);
    Actor& a = actor(actor_id);
    const auto per_actor = activities_.find(actor_id);
    if (per_actor == activities_.end() || !per_actor->second.count(name))
        throw SimError("unknown activity on actor " + actor_id + ": " + name);
    const Activity& activity = per_actor->second.at(name);

    running_activity_actor_ = actor_id;
    running_activity_name_ = name;
    a.pending_interrupt = false;

    EventRecord start;
    start.time_s = now_.seconds;
    start.actor_id = actor_id;
    start.position_m = a.position;
    if (a.thermal) start.temperature_k = a.thermal->temperature_k;
    if (a.battery) start.state_of_charge = a.battery->state_of_charge();
    start.in_eclipse = a.in_eclipse;
    start.current_activity = name;
    start.event = EventKind::ActivityStart;
    log_.add(std::move(start));

    const std::map<std::string, double> power{{actor_id, activity.power_w}};
    auto last_update = clock::now();

    // Steps physics by the measured wall interval since the previous
    // update and runs one constraint/interrupt check.
    const auto update = [&]() -> std::optional<ActivityOutcome> {
        const auto now_wall = clock::now();
        const double dt = std::chrono::duration<double>(now_wall - last_update).count();
        last_update = now_wall;
        if (dt > 0.0) step_all(dt, power);
        if (a.pending_interrupt) {
            a.pending_interrupt = false;
            return ActivityOutcome::RadiationInterrupted;
        }
        if (activity.constraint) {
            const auto check_start = clock::now();
            const bool ok = activity.constraint(a);
            constraint_wall_s += std::chrono::duration<double>(clock::now() - check_start).count();
            if (!ok) return ActivityOutcome::ConstraintViolated;
        }
        return std::nullopt;
    };

    for (;;) {
        const auto slice_start = clock::now();
        const SliceResult slice = activity.action(a);
        activity_wall_s += std::chrono::duration<double>(clock::now() - slice_start).count();

        const double since_update_s =
            std::chrono::duration<double>(clock::now() - last_update).count();
        if (slice.done || slice.abort || since_update_s >= config_.constraint_check_interval_s) {
            const auto outcome = update();
            if (outcome && !slice.done && !slice.abort)
                return finish_activity(a, activity, *outcome);
        }
        if (slice.abort) return finish_activity(a, activity, ActivityOutcome::Aborted);
        if (slice.done) return finish_activity(a, activity, ActivityOutcome::Completed);
    }
}

AdvanceResult Simulation::advance_time(double duration_s,
                                       const std::vector<InterruptCondition>& conditions) {
    if (duration_s <= 0.0) throw SimError("duration must be positive");
    double elapsed_s = 0.0;
    while (elapsed_s < duration_s - 1e-12) {
        const double dt = std::min(config_.physics_dt_s, duration_s - elapsed_s);
        step_all(dt);
        elapsed_s += dt;
        for (const InterruptCondition& condition : conditions) {
            if (condition.predicate(*this)) return {elapsed_s, condition.id};
        }
    }
    return {elapsed_s, std::nullopt};
}

}  // namespace sim::runtime
