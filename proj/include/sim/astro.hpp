/**
 * Two-body orbit propagation, analytic Sun ephemeris, eclipse
 * determination and visibility geometry.
 *
 * All operations are pure functions of their inputs and may be called
 * from any number of threads.
 */
#ifndef SIM_ASTRO_HPP
#define SIM_ASTRO_HPP

#include "sim/types.hpp"

namespace sim::astro {

/**
 * Keplerian elements plus epoch defining a trajectory about a central
 * body. Elliptical orbits only (0 <= e < 1); angles in radians,
 * normalized to [0, 2*pi).
 */
struct OrbitState {
    double semi_major_axis_m{};
    double eccentricity{};
    double inclination_rad{};
    double raan_rad{};
    double arg_periapsis_rad{};
    double true_anomaly_at_epoch_rad{};
    Epoch epoch{};
    CentralBody central_body;

    /** Checks the element ranges and normalizes angles into [0, 2*pi). */
    void validate();

    /** Orbital period 2*pi*sqrt(a^3/mu) [s]. */
    double period_s() const;
};

/** Inertial-frame position and velocity of the central body. */
struct StateVector {
    Vec3 position_m;
    Vec3 velocity_m_s;
};

/** Circular orbit helper: e = 0, periapsis argument 0. */
OrbitState circular_orbit(double radius_m, double inclination_rad, double raan_rad,
                          double true_anomaly_rad, Epoch epoch, const CentralBody& body);

/**
 * Exact two-body state at time t. Advances the mean anomaly by n*(t -
 * epoch), solves Kepler's equation by Newton-Raphson (tolerance 1e-12
 * rad, max 50 iterations) and rotates the perifocal state into the
 * inertial frame. Throws SimError with iteration diagnostics if the
 * solver fails to converge.
 */
StateVector propagate(const OrbitState& orbit, Epoch t);

/**
 * Geocentric Sun state from low-precision analytic mean elements
 * (mean longitude plus equation of center, rotated by the mean
 * obliquity). Direction good to <= 0.05 deg, distance to <= 0.1%,
 * within +-100 years of J2000.
 */
StateVector sun_position(Epoch t);

/**
 * Cylindrical umbra test: true iff the spacecraft sits behind the body
 * relative to the Sun and within one body radius of the anti-Sun axis.
 */
bool is_in_eclipse(const Vec3& sc_position_m, const Vec3& sun_position_m,
                   const CentralBody& body);

/**
 * True iff the segment p1 -> p2 does not intersect the body sphere
 * (radius + margin) centered at the origin. Both endpoints must lie
 * outside the sphere.
 */
bool line_of_sight(const Vec3& p1_m, const Vec3& p2_m, const CentralBody& body,
                   double margin_m = 0.0);

/**
 * Occlusion test on the full infinite line through p1 and p2: true iff
 * that line stays clear of the body sphere (radius + margin). Stricter
 * than line_of_sight; this is the spacecraft-to-spacecraft visibility
 * rule used by the comms layer.
 */
bool line_of_sight_strict(const Vec3& p1_m, const Vec3& p2_m, const CentralBody& body,
                          double margin_m = 0.0);

struct GeodeticCoordinates {
    double latitude_deg{};
    double longitude_deg{};
    double elevation_m{};
};

/**
 * Inertial position of a WGS84 geodetic point rotated by the linear
 * sidereal angle model theta(t) = theta_J2000 + rotation_rate * t.
 */
Vec3 station_position(const GeodeticCoordinates& site, Epoch t, const CentralBody& body);

/**
 * Elevation of a spacecraft above the station's geodetic horizon,
 * in degrees (negative when below the horizon).
 */
double ground_station_elevation_deg(const GeodeticCoordinates& site, const Vec3& sc_position_m,
                                    Epoch t, const CentralBody& body);

}  // namespace sim::astro

#endif  // SIM_ASTRO_HPP
