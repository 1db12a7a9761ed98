#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subplanck {

/// A point (x1, p1, x2, p2) of the two-particle phase space.
struct PhasePoint {
    double x1 = 0.0;
    double p1 = 0.0;
    double x2 = 0.0;
    double p2 = 0.0;
};

/// Coordinate index in canonical order (x1, p1, x2, p2).
enum class Coord { X1 = 0, P1 = 1, X2 = 2, P2 = 3 };

bool is_momentum(Coord c);
double get(const PhasePoint& pt, Coord c);
void set(PhasePoint& pt, Coord c, double value);

/// A two-dimensional section of phase space, named by its (axis1, axis2).
enum class Plane { X1P1, X2P2, X1P2, X2P1, X1X2, P1P2 };

std::string_view to_string(Plane plane);
std::optional<Plane> parse_plane(std::string_view name);

/// The plane's two axes followed by the two fixed coordinates, each group in
/// canonical order.
std::array<Coord, 2> plane_axes(Plane plane);
std::array<Coord, 2> plane_fixed(Plane plane);

struct Interval {
    double lo;
    double hi;
};

/// Sampling recipe for a cross-section of W. `fixed` holds the values of the
/// two remaining coordinates in canonical order.
struct SectionSpec {
    Plane plane = Plane::X1P1;
    std::array<double, 2> fixed{0.0, 0.0};
    Interval range1{-8.0, 8.0};
    Interval range2{-8.0, 8.0};
    std::size_t n1 = 512;
    std::size_t n2 = 512;

    /// Throws InvalidArgument on degenerate ranges or resolutions below 2.
    void validate() const;

    double axis1_at(std::size_t i) const;
    double axis2_at(std::size_t j) const;
    PhasePoint point(double u, double v) const;
};

/// A sampled scalar field over a section. Values are row-major with axis1
/// fastest: values[j * n1 + i] belongs to (axis1[i], axis2[j]).
struct Grid2D {
    SectionSpec spec;
    std::vector<double> axis1;
    std::vector<double> axis2;
    std::vector<double> values;

    double at(std::size_t i, std::size_t j) const { return values[j * axis1.size() + i]; }
};

/// Evaluates field on every node of the section (in parallel; the result does
/// not depend on the worker count).
Grid2D sample_section(const SectionSpec& spec, const std::function<double(const PhasePoint&)>& field);

} // namespace subplanck
