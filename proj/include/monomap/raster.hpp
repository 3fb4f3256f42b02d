#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "monomap/geometry.hpp"

namespace monomap {

enum class DepthKind { metric, relative, disparity };

std::string_view to_string(DepthKind kind);
std::optional<DepthKind> depth_kind_from_string(std::string_view s);

// Row-major float raster with a per-pixel validity mask. Row 0 is the top
// image row. Valid values are finite; metric maps additionally hold only
// positive values. Immutable for reads after construction/fill.
class DepthMap {
  public:
    DepthMap() = default;
    DepthMap(int width, int height, DepthKind kind);

    int width() const { return width_; }
    int height() const { return height_; }
    DepthKind kind() const { return kind_; }
    void set_kind(DepthKind kind) { kind_ = kind; }

    float at(int i, int j) const { return values_[idx(i, j)]; }
    bool is_valid(int i, int j) const { return valid_[idx(i, j)] != 0; }

    // Marks the pixel valid; the value must be finite (and positive when the
    // map is metric).
    void set(int i, int j, float value);
    void set_invalid(int i, int j);

    std::size_t valid_count() const;

    // Bilinear blend of the 4 surrounding pixels. Returns nullopt outside the
    // sampleable domain [0, w-1] x [0, h-1] or when any contributing
    // neighbor is invalid; validity never heals through interpolation.
    std::optional<double> sample_bilinear(const PixelCoord& px) const;

    const std::vector<float>& values() const { return values_; }
    const std::vector<std::uint8_t>& validity() const { return valid_; }

  private:
    std::size_t idx(int i, int j) const;

    int width_ = 0;
    int height_ = 0;
    DepthKind kind_ = DepthKind::relative;
    std::vector<float> values_;
    std::vector<std::uint8_t> valid_;
};

// Bilinear rescaling onto the new pixel-center lattice (endpoints aligned:
// source x = dst x * (w_src-1)/(w_dst-1)). Output pixels are valid only when
// every contributing source pixel is valid; kind is preserved. Identical
// dimensions return a bit-identical copy.
DepthMap resample(const DepthMap& map, int new_width, int new_height, int workers = 1);

// 8-bit RGB image, row-major, no validity mask.
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;  // 3 bytes per pixel

    ColorImage() = default;
    ColorImage(int w, int h) : width(w), height(h), rgb(static_cast<std::size_t>(w) * h * 3, 0) {}

    std::array<std::uint8_t, 3> at(int i, int j) const {
        const std::size_t o = (static_cast<std::size_t>(j) * width + i) * 3;
        return {rgb[o], rgb[o + 1], rgb[o + 2]};
    }
    void set(int i, int j, std::array<std::uint8_t, 3> c) {
        const std::size_t o = (static_cast<std::size_t>(j) * width + i) * 3;
        rgb[o] = c[0];
        rgb[o + 1] = c[1];
        rgb[o + 2] = c[2];
    }

    // Bilinear RGB blend; nullopt outside [0, w-1] x [0, h-1].
    std::optional<std::array<double, 3>> sample_bilinear(const PixelCoord& px) const;
};

// Georeferenced 2D grid. Rows are stored top-down while the y axis grows
// upward: row 0 is the northernmost row. (origin_x, origin_y) is the
// lower-left corner of the grid in world meters.
class RasterGrid {
  public:
    RasterGrid() = default;
    RasterGrid(int ncols, int nrows, double origin_x, double origin_y, double cell_size,
               double nodata = -9999.0);

    int ncols() const { return ncols_; }
    int nrows() const { return nrows_; }
    double origin_x() const { return origin_x_; }
    double origin_y() const { return origin_y_; }
    double cell_size() const { return cell_size_; }
    double nodata() const { return nodata_; }

    bool has_value(int col, int row) const { return valid_[idx(col, row)] != 0; }
    // Stored value; equals the nodata sentinel for empty cells.
    double at(int col, int row) const { return values_[idx(col, row)]; }

    void set(int col, int row, double value);
    void set_nodata(int col, int row);

    // World coordinates of the cell center:
    //   x = origin_x + (col + 0.5) * cell_size
    //   y = origin_y + (nrows - row - 0.5) * cell_size
    std::pair<double, double> cell_center(int col, int row) const;

    // Cell indices of a world position; may be out of range (caller checks).
    int col_of(double x) const;
    int row_of(double y) const;
    bool in_grid(int col, int row) const {
        return col >= 0 && col < ncols_ && row >= 0 && row < nrows_;
    }

    std::size_t cell_count() const { return values_.size(); }
    std::size_t valid_count() const;

    bool same_layout(const RasterGrid& other) const;

  private:
    std::size_t idx(int col, int row) const;

    int ncols_ = 0;
    int nrows_ = 0;
    double origin_x_ = 0.0;
    double origin_y_ = 0.0;
    double cell_size_ = 1.0;
    double nodata_ = -9999.0;
    std::vector<double> values_;
    std::vector<std::uint8_t> valid_;
};

}  // namespace monomap
