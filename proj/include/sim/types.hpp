/**
 * Shared primitive types: vectors, epochs, central bodies, constants.
 */
#ifndef SIM_TYPES_HPP
#define SIM_TYPES_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sim {

// Stefan-Boltzmann constant [W m^-2 K^-4]
inline constexpr double kStefanBoltzmann = 5.670374419e-8;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kAstronomicalUnit = 1.495978707e11;  // m
// Mean sidereal day [s]; Earth's default rotation rate is 2*pi over this
// (~7.2921159e-5 rad/s).
inline constexpr double kSiderealDay = 86164.0905;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/** Cartesian 3-vector (meters or m/s depending on context). */
struct Vec3 {
    double x{};
    double y{};
    double z{};
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator*(const Vec3& v, double s) { return s * v; }
inline Vec3 operator/(const Vec3& v, double s) { return {v.x / s, v.y / s, v.z / s}; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

/**
 * Instant in time, stored as seconds since J2000 (2000-01-01T12:00:00 TT)
 * in double precision.
 */
struct Epoch {
    double seconds{};  // seconds since J2000

    Epoch operator+(double dt_s) const { return {seconds + dt_s}; }
    Epoch operator-(double dt_s) const { return {seconds - dt_s}; }
    double operator-(const Epoch& other) const { return seconds - other.seconds; }
    auto operator<=>(const Epoch&) const = default;
};

// Errors raised on domain invariant violations throughout the library.
class SimError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Physical constants of the body an actor is gravitationally bound to.
 * The thermal fields (surface temperature, emissivity, reflectance) feed
 * the infrared and albedo heat fluxes.
 */
struct CentralBody {
    std::string name;
    double radius_m{};             // occluding sphere radius
    double mu_m3_s2{};             // gravitational parameter GM
    double rotation_rate_rad_s{};  // 0 for a non-rotating body
    double surface_temperature_k{};
    double ir_emissivity{};      // in [0, 1]
    double solar_reflectance{};  // in [0, 1]

    void validate() const;

    static CentralBody earth();
};

// FNV-1a; used to derive per-actor RNG seeds stable across runs.
std::uint64_t stable_hash(const std::string& s);

}  // namespace sim

#endif  // SIM_TYPES_HPP
