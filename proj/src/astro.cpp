#include "sim/astro.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sim::astro {

namespace {

double normalize_angle(double rad) {
    double wrapped = std::fmod(rad, 2.0 * kPi);
    if (wrapped < 0.0) wrapped += 2.0 * kPi;
    return wrapped;
}

// Newton-Raphson on Kepler's equation M = E - e sin E.
double solve_kepler(double mean_anomaly, double eccentricity) {
    constexpr double tol = 1e-12;
    constexpr int max_iterations = 50;
    const double m = normalize_angle(mean_anomaly);
    double e_anom = eccentricity < 0.8 ? m : kPi;
    for (int i = 0; i < max_iterations; ++i) {
        const double f = e_anom - eccentricity * std::sin(e_anom) - m;
        const double fp = 1.0 - eccentricity * std::cos(e_anom);
        const double delta = f / fp;
        e_anom -= delta;
        if (std::abs(delta) < tol) return e_anom;
    }
    std::ostringstream msg;
    msg << "Kepler solver failed to converge after " << max_iterations
        << " iterations (M=" << m << ", e=" << eccentricity << ")";
    throw SimError(msg.str());
}

double true_to_eccentric(double true_anomaly, double e) {
    const double cos_nu = std::cos(true_anomaly);
    const double sin_nu = std::sin(true_anomaly);
    const double denom = 1.0 + e * cos_nu;
    return std::atan2(std::sqrt(1.0 - e * e) * sin_nu / denom, (e + cos_nu) / denom);
}

// Rotation from perifocal to the inertial frame: R3(-raan) R1(-i) R3(-argp).
Vec3 perifocal_to_inertial(const Vec3& v, double inclination, double raan, double argp) {
    const double cO = std::cos(raan), sO = std::sin(raan);
    const double ci = std::cos(inclination), si = std::sin(inclination);
    const double cw = std::cos(argp), sw = std::sin(argp);
    return {
        (cO * cw - sO * sw * ci) * v.x + (-cO * sw - sO * cw * ci) * v.y + (sO * si) * v.z,
        (sO * cw + cO * sw * ci) * v.x + (-sO * sw + cO * cw * ci) * v.y + (-cO * si) * v.z,
        (sw * si) * v.x + (cw * si) * v.y + ci * v.z,
    };
}

Vec3 rotate_z(const Vec3& v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y, v.z};
}

// WGS84 ellipsoid.
constexpr double kWgs84A = 6378137.0;
constexpr double kWgs84F = 1.0 / 298.257223563;
constexpr double kWgs84E2 = kWgs84F * (2.0 - kWgs84F);

// Mean sidereal angle at J2000 for the linear rotation model.
const double kSiderealAngleJ2000 = deg2rad(280.46);

Vec3 geodetic_to_ecef(const GeodeticCoordinates& site) {
    const double lat = deg2rad(site.latitude_deg);
    const double lon = deg2rad(site.longitude_deg);
    const double sin_lat = std::sin(lat), cos_lat = std::cos(lat);
    const double n = kWgs84A / std::sqrt(1.0 - kWgs84E2 * sin_lat * sin_lat);
    return {
        (n + site.elevation_m) * cos_lat * std::cos(lon),
        (n + site.elevation_m) * cos_lat * std::sin(lon),
        (n * (1.0 - kWgs84E2) + site.elevation_m) * sin_lat,
    };
}

Vec3 geodetic_zenith_ecef(const GeodeticCoordinates& site) {
    const double lat = deg2rad(site.latitude_deg);
    const double lon = deg2rad(site.longitude_deg);
    return {std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)};
}

Vec3 sun_position_only(double t_seconds) {
    // Low-precision solar ephemeris from mean elements (days since J2000).
    const double n_days = t_seconds / 86400.0;
    const double mean_longitude = deg2rad(280.460 + 0.9856474 * n_days);
    const double mean_anomaly = deg2rad(357.528 + 0.9856003 * n_days);
    const double ecliptic_longitude = mean_longitude +
                                      deg2rad(1.915) * std::sin(mean_anomaly) +
                                      deg2rad(0.020) * std::sin(2.0 * mean_anomaly);
    const double distance_au =
        1.00014 - 0.01671 * std::cos(mean_anomaly) - 0.00014 * std::cos(2.0 * mean_anomaly);
    const double obliquity = deg2rad(23.439 - 4.0e-7 * n_days);
    const double r = distance_au * kAstronomicalUnit;
    const double cl = std::cos(ecliptic_longitude), sl = std::sin(ecliptic_longitude);
    return {r * cl, r * std::cos(obliquity) * sl, r * std::sin(obliquity) * sl};
}

}  // namespace

void OrbitState::validate() {
    if (semi_major_axis_m <= 0.0) throw SimError("semi-major axis must be positive");
    if (eccentricity < 0.0 || eccentricity >= 1.0)
        throw SimError("eccentricity must lie in [0, 1) (elliptical orbits only)");
    central_body.validate();
    inclination_rad = normalize_angle(inclination_rad);
    raan_rad = normalize_angle(raan_rad);
    arg_periapsis_rad = normalize_angle(arg_periapsis_rad);
    true_anomaly_at_epoch_rad = normalize_angle(true_anomaly_at_epoch_rad);
}

double OrbitState::period_s() const {
    const double a = semi_major_axis_m;
    return 2.0 * kPi * std::sqrt(a * a * a / central_body.mu_m3_s2);
}

OrbitState circular_orbit(double radius_m, double inclination_rad, double raan_rad,
                          double true_anomaly_rad, Epoch epoch, const CentralBody& body) {
    OrbitState orbit;
    orbit.semi_major_axis_m = radius_m;
    orbit.eccentricity = 0.0;
    orbit.inclination_rad = inclination_rad;
    orbit.raan_rad = raan_rad;
    orbit.arg_periapsis_rad = 0.0;
    orbit.true_anomaly_at_epoch_rad = true_anomaly_rad;
    orbit.epoch = epoch;
    orbit.central_body = body;
    orbit.validate();
    return orbit;
}

StateVector propagate(const OrbitState& orbit, Epoch t) {
    const double a = orbit.semi_major_axis_m;
    const double e = orbit.eccentricity;
    const double mu = orbit.central_body.mu_m3_s2;
    const double mean_motion = std::sqrt(mu / (a * a * a));

    const double e_anom0 = true_to_eccentric(orbit.true_anomaly_at_epoch_rad, e);
    const double m0 = e_anom0 - e * std::sin(e_anom0);
    const double m = m0 + mean_motion * (t - orbit.epoch);
    const double e_anom = solve_kepler(m, e);

    const double cosE = std::cos(e_anom), sinE = std::sin(e_anom);
    const double r = a * (1.0 - e * cosE);
    const double root = std::sqrt(1.0 - e * e);
    const Vec3 pos_pf{a * (cosE - e), a * root * sinE, 0.0};
    const double v_scale = std::sqrt(mu * a) / r;
    const Vec3 vel_pf{-v_scale * sinE, v_scale * root * cosE, 0.0};

    return {
        perifocal_to_inertial(pos_pf, orbit.inclination_rad, orbit.raan_rad,
                              orbit.arg_periapsis_rad),
        perifocal_to_inertial(vel_pf, orbit.inclination_rad, orbit.raan_rad,
                              orbit.arg_periapsis_rad),
    };
}

StateVector sun_position(Epoch t) {
    const Vec3 pos = sun_position_only(t.seconds);
    // Velocity by central difference; plenty for eclipse/thermal use.
    const double h = 60.0;
    const Vec3 vel = (sun_position_only(t.seconds + h) - sun_position_only(t.seconds - h)) /
                     (2.0 * h);
    return {pos, vel};
}

bool is_in_eclipse(const Vec3& sc_position_m, const Vec3& sun_position_m,
                   const CentralBody& body) {
    const Vec3 anti_sun = -normalized(sun_position_m);
    const double along = dot(sc_position_m, anti_sun);
    if (along <= 0.0) return false;
    const Vec3 perpendicular = sc_position_m - along * anti_sun;
    return norm(perpendicular) < body.radius_m;
}

bool line_of_sight(const Vec3& p1_m, const Vec3& p2_m, const CentralBody& body,
                   double margin_m) {
    const double blocked_radius = body.radius_m + margin_m;
    const Vec3 d = p2_m - p1_m;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return norm(p1_m) >= blocked_radius;
    // Closest approach of the segment to the origin.
    double t = -dot(p1_m, d) / len2;
    if (t <= 0.0) return norm(p1_m) >= blocked_radius;
    if (t >= 1.0) return norm(p2_m) >= blocked_radius;
    return norm(p1_m + t * d) >= blocked_radius;
}

bool line_of_sight_strict(const Vec3& p1_m, const Vec3& p2_m, const CentralBody& body,
                          double margin_m) {
    const double blocked_radius = body.radius_m + margin_m;
    const Vec3 d = p2_m - p1_m;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return norm(p1_m) >= blocked_radius;
    const double t = -dot(p1_m, d) / len2;
    return norm(p1_m + t * d) >= blocked_radius;
}

Vec3 station_position(const GeodeticCoordinates& site, Epoch t, const CentralBody& body) {
    const double theta = kSiderealAngleJ2000 + body.rotation_rate_rad_s * t.seconds;
    return rotate_z(geodetic_to_ecef(site), theta);
}

double ground_station_elevation_deg(const GeodeticCoordinates& site, const Vec3& sc_position_m,
                                    Epoch t, const CentralBody& body) {
    const double theta = kSiderealAngleJ2000 + body.rotation_rate_rad_s * t.seconds;
    const Vec3 station = rotate_z(geodetic_to_ecef(site), theta);
    const Vec3 zenith = rotate_z(geodetic_zenith_ecef(site), theta);
    const Vec3 to_spacecraft = sc_position_m - station;
    const double cos_zenith_angle =
        dot(zenith, to_spacecraft) / (norm(zenith) * norm(to_spacecraft));
    return 90.0 - rad2deg(std::acos(std::clamp(cos_zenith_angle, -1.0, 1.0)));
}

}  // namespace sim::astro
