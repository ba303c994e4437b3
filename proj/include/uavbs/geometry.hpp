#pragma once

#include <cmath>
#include <stdexcept>

namespace uavbs {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
    double norm_sq() const { return x * x + y * y; }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }
inline double distance_sq(const Vec2& a, const Vec2& b) { return (a - b).norm_sq(); }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Axis-aligned serving area.
struct Region {
    double x_min = 0.0;
    double x_max = 1000.0;
    double y_min = 0.0;
    double y_max = 1000.0;

    void validate() const {
        if (!(x_min < x_max) || !(y_min < y_max))
            throw std::invalid_argument("region: requires x_min < x_max and y_min < y_max");
    }

    bool contains(const Vec2& p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }

    Vec2 clamp(const Vec2& p) const {
        return {std::fmin(std::fmax(p.x, x_min), x_max),
                std::fmin(std::fmax(p.y, y_min), y_max)};
    }

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    Vec2 center() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }
};

}  // namespace uavbs
