#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "monomap/geometry.hpp"

namespace monomap {

// World-space points with optional per-point color and the id of the image
// they came from (-1 when unknown, e.g. after reading back from disk).
struct PointCloud {
    struct Point {
        WorldPoint position = WorldPoint::Zero();
        std::array<std::uint8_t, 3> rgb{0, 0, 0};
        std::int32_t source_image = -1;
    };

    std::vector<Point> points;
    bool has_color = false;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

}  // namespace monomap
