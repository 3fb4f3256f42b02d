#pragma once

#include <string>

#include "monomap/point_cloud.hpp"

namespace monomap::io {

// Binary little-endian PLY with exactly one "vertex" element carrying
// properties x y z (float64) and red green blue (uint8). Coordinates and
// colors round trip bit-exactly; source image ids are not persisted and read
// back as -1. Readers reject any other property layout.
void write_ply(const PointCloud& cloud, const std::string& path);
PointCloud read_ply(const std::string& path);

}  // namespace monomap::io
