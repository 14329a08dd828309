#ifndef AEROSIM_GEOMETRY_HPP
#define AEROSIM_GEOMETRY_HPP

#include <cmath>

namespace aerosim {

/// 3D position, kilometres. z is altitude above ground.
struct Position {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Position&, const Position&) = default;
};

inline double distance_km(const Position& a, const Position& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Speed of light, km/s. Used for propagation delay.
inline constexpr double kSpeedOfLightKmPerS = 299792.458;

} // namespace aerosim

#endif
