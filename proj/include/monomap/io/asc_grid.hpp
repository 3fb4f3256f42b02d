#pragma once

#include <string>

#include "monomap/raster.hpp"

namespace monomap::io {

// ESRI ASCII grid. Header keys ncols, nrows, xllcorner, yllcorner, cellsize,
// NODATA_value (one per line, in that order on write; any order accepted on
// read), followed by nrows rows of ncols whitespace-separated values with
// row 0 the northernmost. Values are printed with 6 significant digits, so
// round trips preserve values to that precision only.
void write_asc_grid(const RasterGrid& grid, const std::string& path);
RasterGrid read_asc_grid(const std::string& path);

}  // namespace monomap::io
