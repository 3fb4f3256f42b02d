#include "monomap/raster.hpp"

#include <cmath>
#include <sstream>

#include "monomap/parallel.hpp"

namespace monomap {

std::string_view to_string(DepthKind kind) {
    switch (kind) {
        case DepthKind::metric:
            return "metric";
        case DepthKind::relative:
            return "relative";
        case DepthKind::disparity:
            return "disparity";
    }
    return "unknown";
}

std::optional<DepthKind> depth_kind_from_string(std::string_view s) {
    if (s == "metric") return DepthKind::metric;
    if (s == "relative") return DepthKind::relative;
    if (s == "disparity") return DepthKind::disparity;
    return std::nullopt;
}

DepthMap::DepthMap(int width, int height, DepthKind kind)
    : width_(width), height_(height), kind_(kind) {
    if (width < 1 || height < 1) {
        std::ostringstream oss;
        oss << "depth map dimensions must be positive, got " << width << "x" << height;
        throw InvalidArgument(oss.str());
    }
    values_.assign(static_cast<std::size_t>(width) * height, 0.0f);
    valid_.assign(values_.size(), 0);
}

std::size_t DepthMap::idx(int i, int j) const {
    if (i < 0 || i >= width_ || j < 0 || j >= height_) {
        std::ostringstream oss;
        oss << "pixel (" << i << ", " << j << ") outside " << width_ << "x" << height_;
        throw InvalidArgument(oss.str());
    }
    return static_cast<std::size_t>(j) * width_ + i;
}

void DepthMap::set(int i, int j, float value) {
    if (!std::isfinite(value)) {
        throw InvalidArgument("valid depth-map values must be finite");
    }
    if (kind_ == DepthKind::metric && !(value > 0.0f)) {
        std::ostringstream oss;
        oss << "metric depth must be positive, got " << value;
        throw InvalidArgument(oss.str());
    }
    const std::size_t o = idx(i, j);
    values_[o] = value;
    valid_[o] = 1;
}

void DepthMap::set_invalid(int i, int j) {
    const std::size_t o = idx(i, j);
    values_[o] = 0.0f;
    valid_[o] = 0;
}

std::size_t DepthMap::valid_count() const {
    std::size_t n = 0;
    for (const auto v : valid_) n += v;
    return n;
}

namespace {

// Shared bilinear footprint: integer cell (i0, j0) and fractional offsets,
// with the convention that samples exactly on the far edge use weight-1 on
// the second neighbor. Requires w, h >= 1 and px inside [0,w-1]x[0,h-1].
struct BilinearCell {
    int i0, j0;
    double fu, fv;
};

std::optional<BilinearCell> bilinear_cell(double u, double v, int w, int h) {
    if (!(u >= 0.0 && u <= w - 1.0 && v >= 0.0 && v <= h - 1.0)) return std::nullopt;
    BilinearCell c{};
    if (w == 1) {
        c.i0 = 0;
        c.fu = 0.0;
    } else {
        c.i0 = std::min(static_cast<int>(std::floor(u)), w - 2);
        c.fu = u - c.i0;
    }
    if (h == 1) {
        c.j0 = 0;
        c.fv = 0.0;
    } else {
        c.j0 = std::min(static_cast<int>(std::floor(v)), h - 2);
        c.fv = v - c.j0;
    }
    return c;
}

}  // namespace

std::optional<double> DepthMap::sample_bilinear(const PixelCoord& px) const {
    const auto cell = bilinear_cell(px.u, px.v, width_, height_);
    if (!cell) return std::nullopt;
    const int i1 = width_ == 1 ? cell->i0 : cell->i0 + 1;
    const int j1 = height_ == 1 ? cell->j0 : cell->j0 + 1;
    if (!is_valid(cell->i0, cell->j0) || !is_valid(i1, cell->j0) || !is_valid(cell->i0, j1) ||
        !is_valid(i1, j1)) {
        return std::nullopt;
    }
    const double v00 = at(cell->i0, cell->j0);
    const double v10 = at(i1, cell->j0);
    const double v01 = at(cell->i0, j1);
    const double v11 = at(i1, j1);
    const double top = v00 * (1.0 - cell->fu) + v10 * cell->fu;
    const double bot = v01 * (1.0 - cell->fu) + v11 * cell->fu;
    return top * (1.0 - cell->fv) + bot * cell->fv;
}

DepthMap resample(const DepthMap& map, int new_width, int new_height, int workers) {
    if (new_width < 1 || new_height < 1) {
        throw InvalidArgument("resample target dimensions must be positive");
    }
    DepthMap out(new_width, new_height, map.kind());
    const double sx = new_width == 1 ? 0.0
                                     : static_cast<double>(map.width() - 1) / (new_width - 1);
    const double sy = new_height == 1 ? 0.0
                                      : static_cast<double>(map.height() - 1) / (new_height - 1);
    const double x_center = (map.width() - 1) / 2.0;
    const double y_center = (map.height() - 1) / 2.0;
    par::parallel_for(new_height, workers, [&](int j) {
        const double v = new_height == 1 ? y_center : j * sy;
        for (int i = 0; i < new_width; ++i) {
            const double u = new_width == 1 ? x_center : i * sx;
            const auto s = map.sample_bilinear({u, v});
            if (s) {
                out.set(i, j, static_cast<float>(*s));
            } else {
                out.set_invalid(i, j);
            }
        }
    });
    return out;
}

std::optional<std::array<double, 3>> ColorImage::sample_bilinear(const PixelCoord& px) const {
    const auto cell = bilinear_cell(px.u, px.v, width, height);
    if (!cell) return std::nullopt;
    const int i1 = width == 1 ? cell->i0 : cell->i0 + 1;
    const int j1 = height == 1 ? cell->j0 : cell->j0 + 1;
    const auto c00 = at(cell->i0, cell->j0);
    const auto c10 = at(i1, cell->j0);
    const auto c01 = at(cell->i0, j1);
    const auto c11 = at(i1, j1);
    std::array<double, 3> out{};
    for (int ch = 0; ch < 3; ++ch) {
        const double top = c00[ch] * (1.0 - cell->fu) + c10[ch] * cell->fu;
        const double bot = c01[ch] * (1.0 - cell->fu) + c11[ch] * cell->fu;
        out[ch] = top * (1.0 - cell->fv) + bot * cell->fv;
    }
    return out;
}

RasterGrid::RasterGrid(int ncols, int nrows, double origin_x, double origin_y, double cell_size,
                       double nodata)
    : ncols_(ncols),
      nrows_(nrows),
      origin_x_(origin_x),
      origin_y_(origin_y),
      cell_size_(cell_size),
      nodata_(nodata) {
    if (ncols < 1 || nrows < 1) {
        throw InvalidArgument("grid dimensions must be positive");
    }
    if (!(cell_size > 0.0)) {
        throw InvalidArgument("cell size must be positive");
    }
    values_.assign(static_cast<std::size_t>(ncols) * nrows, nodata);
    valid_.assign(values_.size(), 0);
}

std::size_t RasterGrid::idx(int col, int row) const {
    if (!in_grid(col, row)) {
        std::ostringstream oss;
        oss << "cell (" << col << ", " << row << ") outside " << ncols_ << "x" << nrows_;
        throw InvalidArgument(oss.str());
    }
    return static_cast<std::size_t>(row) * ncols_ + col;
}

void RasterGrid::set(int col, int row, double value) {
    if (!std::isfinite(value)) {
        throw InvalidArgument("grid values must be finite");
    }
    const std::size_t o = idx(col, row);
    values_[o] = value;
    valid_[o] = 1;
}

void RasterGrid::set_nodata(int col, int row) {
    const std::size_t o = idx(col, row);
    values_[o] = nodata_;
    valid_[o] = 0;
}

std::pair<double, double> RasterGrid::cell_center(int col, int row) const {
    idx(col, row);  // range check
    return {origin_x_ + (col + 0.5) * cell_size_,
            origin_y_ + (nrows_ - row - 0.5) * cell_size_};
}

int RasterGrid::col_of(double x) const {
    return static_cast<int>(std::floor((x - origin_x_) / cell_size_));
}

int RasterGrid::row_of(double y) const {
    return nrows_ - 1 - static_cast<int>(std::floor((y - origin_y_) / cell_size_));
}

std::size_t RasterGrid::valid_count() const {
    std::size_t n = 0;
    for (const auto v : valid_) n += v;
    return n;
}

bool RasterGrid::same_layout(const RasterGrid& other) const {
    return ncols_ == other.ncols_ && nrows_ == other.nrows_ && origin_x_ == other.origin_x_ &&
           origin_y_ == other.origin_y_ && cell_size_ == other.cell_size_;
}

}  // namespace monomap
