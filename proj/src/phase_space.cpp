#include "subplanck/phase_space.hpp"

#include "subplanck/errors.hpp"
#include "subplanck/parallel.hpp"

#include <cmath>
#include <utility>

namespace subplanck {

namespace {

struct PlaneInfo {
    Plane plane;
    std::string_view name;
    std::array<Coord, 2> axes;
    std::array<Coord, 2> fixed;
};

constexpr std::array<PlaneInfo, 6> kPlanes{{
    {Plane::X1P1, "X1P1", {Coord::X1, Coord::P1}, {Coord::X2, Coord::P2}},
    {Plane::X2P2, "X2P2", {Coord::X2, Coord::P2}, {Coord::X1, Coord::P1}},
    {Plane::X1P2, "X1P2", {Coord::X1, Coord::P2}, {Coord::P1, Coord::X2}},
    {Plane::X2P1, "X2P1", {Coord::X2, Coord::P1}, {Coord::X1, Coord::P2}},
    {Plane::X1X2, "X1X2", {Coord::X1, Coord::X2}, {Coord::P1, Coord::P2}},
    {Plane::P1P2, "P1P2", {Coord::P1, Coord::P2}, {Coord::X1, Coord::X2}},
}};

const PlaneInfo& info(Plane plane) {
    for (const auto& p : kPlanes) {
        if (p.plane == plane) return p;
    }
    throw InvalidArgument("unknown plane");
}

} // namespace

bool is_momentum(Coord c) { return c == Coord::P1 || c == Coord::P2; }

double get(const PhasePoint& pt, Coord c) {
    switch (c) {
    case Coord::X1: return pt.x1;
    case Coord::P1: return pt.p1;
    case Coord::X2: return pt.x2;
    case Coord::P2: return pt.p2;
    }
    return 0.0;
}

void set(PhasePoint& pt, Coord c, double value) {
    switch (c) {
    case Coord::X1: pt.x1 = value; break;
    case Coord::P1: pt.p1 = value; break;
    case Coord::X2: pt.x2 = value; break;
    case Coord::P2: pt.p2 = value; break;
    }
}

std::string_view to_string(Plane plane) { return info(plane).name; }

std::optional<Plane> parse_plane(std::string_view name) {
    for (const auto& p : kPlanes) {
        if (p.name.size() != name.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < name.size(); ++i) {
            const char c = name[i];
            const char upper = (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
            if (upper != p.name[i]) same = false;
        }
        if (same) return p.plane;
    }
    return std::nullopt;
}

std::array<Coord, 2> plane_axes(Plane plane) { return info(plane).axes; }
std::array<Coord, 2> plane_fixed(Plane plane) { return info(plane).fixed; }

void SectionSpec::validate() const {
    if (n1 < 2 || n2 < 2) throw InvalidArgument("section resolution must be at least 2 per axis");
    if (!(range1.hi > range1.lo) || !(range2.hi > range2.lo)) {
        throw InvalidArgument("section ranges must be non-degenerate");
    }
    if (!std::isfinite(range1.lo) || !std::isfinite(range1.hi) || !std::isfinite(range2.lo) ||
        !std::isfinite(range2.hi) || !std::isfinite(fixed[0]) || !std::isfinite(fixed[1])) {
        throw InvalidArgument("section coordinates must be finite");
    }
}

double SectionSpec::axis1_at(std::size_t i) const {
    if (i + 1 == n1) return range1.hi;
    return range1.lo + (range1.hi - range1.lo) * static_cast<double>(i) / static_cast<double>(n1 - 1);
}

double SectionSpec::axis2_at(std::size_t j) const {
    if (j + 1 == n2) return range2.hi;
    return range2.lo + (range2.hi - range2.lo) * static_cast<double>(j) / static_cast<double>(n2 - 1);
}

PhasePoint SectionSpec::point(double u, double v) const {
    PhasePoint pt;
    const auto axes = plane_axes(plane);
    const auto rest = plane_fixed(plane);
    set(pt, axes[0], u);
    set(pt, axes[1], v);
    set(pt, rest[0], fixed[0]);
    set(pt, rest[1], fixed[1]);
    return pt;
}

Grid2D sample_section(const SectionSpec& spec, const std::function<double(const PhasePoint&)>& field) {
    spec.validate();
    Grid2D grid;
    grid.spec = spec;
    grid.axis1.resize(spec.n1);
    grid.axis2.resize(spec.n2);
    for (std::size_t i = 0; i < spec.n1; ++i) grid.axis1[i] = spec.axis1_at(i);
    for (std::size_t j = 0; j < spec.n2; ++j) grid.axis2[j] = spec.axis2_at(j);
    grid.values.assign(spec.n1 * spec.n2, 0.0);
    parallel_for(spec.n2, [&](std::size_t j) {
        for (std::size_t i = 0; i < spec.n1; ++i) {
            grid.values[j * spec.n1 + i] = field(spec.point(grid.axis1[i], grid.axis2[j]));
        }
    });
    return grid;
}

} // namespace subplanck
