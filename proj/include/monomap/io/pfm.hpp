#pragma once

#include <string>

#include "monomap/raster.hpp"

namespace monomap::io {

// Grayscale PFM ("Pf"): header line "Pf", a dimensions line "width height",
// a scale line whose sign encodes endianness (negative = little endian),
// then width*height float32 samples stored bottom row first. Invalid pixels
// are stored as NaN; non-finite samples read back as invalid. The written
// scale is -1.0. Round trips are bit-exact for finite values.
DepthMap read_depth_pfm(const std::string& path, DepthKind kind = DepthKind::relative);
void write_depth_pfm(const DepthMap& map, const std::string& path);

}  // namespace monomap::io
