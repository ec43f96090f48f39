#pragma once

#include <cmath>

namespace renyi {

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;
inline constexpr double kPi = static_cast<double>(kPiL);

/// Plain 2-d vector with the usual componentwise arithmetic.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }

    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(const Vec2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    Vec2& operator*=(double s) {
        x *= s;
        y *= s;
        return *this;
    }

    constexpr bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    constexpr bool operator!=(const Vec2& o) const { return !(*this == o); }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

inline double squared_norm(const Vec2& v) { return dot(v, v); }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

/// Rotation of the plane by the angle pi*t/3.  The parameter t is the
/// natural coordinate here: arc positions live on a circle whose full
/// turn corresponds to t = 6, so rotations compose by adding parameters
/// and Q(t + 6) = Q(t).
class Rot2 {
public:
    explicit Rot2(double t) : t_(t), c_(std::cos(kPi * t / 3.0)), s_(std::sin(kPi * t / 3.0)) {}

    /// Rotation parameter t (angle is pi*t/3).
    double parameter() const { return t_; }

    double cosine() const { return c_; }
    double sine() const { return s_; }

    Vec2 apply(const Vec2& w) const { return {c_ * w.x - s_ * w.y, s_ * w.x + c_ * w.y}; }

    Rot2 inverse() const { return Rot2(-t_); }

    /// Composition: (*this) * other rotates by other first, then by *this.
    Rot2 operator*(const Rot2& o) const { return Rot2(t_ + o.t_); }

private:
    double t_;
    double c_;
    double s_;
};

inline Rot2 rotation(double t) { return Rot2(t); }

/// Unit vector at arc position y: (cos(pi*y/3), sin(pi*y/3)).
/// Equals rotation(y) applied to (1, 0).
inline Vec2 circle_point(double y) { return {std::cos(kPi * y / 3.0), std::sin(kPi * y / 3.0)}; }

} // namespace renyi
