#include "monomap/io/asc_grid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "monomap/errors.hpp"

namespace monomap::io {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

double parse_number(const std::string& tok, const std::string& path, int line,
                    const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size() || !std::isfinite(v)) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(path, line, "malformed " + what + ": '" + tok + "'");
    }
}

}  // namespace

void write_asc_grid(const RasterGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw MissingFileError("cannot open grid file for writing: " + path);
    }
    char buf[64];
    out << "ncols " << grid.ncols() << "\n";
    out << "nrows " << grid.nrows() << "\n";
    std::snprintf(buf, sizeof(buf), "%.10g", grid.origin_x());
    out << "xllcorner " << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.10g", grid.origin_y());
    out << "yllcorner " << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.10g", grid.cell_size());
    out << "cellsize " << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.6g", grid.nodata());
    out << "NODATA_value " << buf << "\n";
    for (int row = 0; row < grid.nrows(); ++row) {
        for (int col = 0; col < grid.ncols(); ++col) {
            std::snprintf(buf, sizeof(buf), "%.6g", grid.at(col, row));
            if (col) out << ' ';
            out << buf;
        }
        out << '\n';
    }
    if (!out) {
        throw MissingFileError("short write to grid file: " + path);
    }
}

RasterGrid read_asc_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingFileError("cannot open grid file: " + path);
    }
    std::map<std::string, double> header;
    std::string line;
    int line_no = 0;
    // Header lines are "key value"; the first line whose key is not a known
    // keyword starts the data block.
    std::streampos data_start = in.tellg();
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) {
            data_start = in.tellg();
            continue;  // blank line
        }
        const std::string k = lower(key);
        if (k == "ncols" || k == "nrows" || k == "xllcorner" || k == "yllcorner" ||
            k == "cellsize" || k == "nodata_value") {
            std::string value;
            if (!(ls >> value)) {
                throw ParseError(path, line_no, "header key '" + key + "' has no value");
            }
            header[k] = parse_number(value, path, line_no, "header value for " + key);
            data_start = in.tellg();
            continue;
        }
        break;  // start of data
    }
    for (const char* required : {"ncols", "nrows", "xllcorner", "yllcorner", "cellsize"}) {
        if (!header.count(required)) {
            throw ParseError(path, 0, std::string("missing header key '") + required + "'");
        }
    }
    const double ncols_d = header["ncols"];
    const double nrows_d = header["nrows"];
    if (ncols_d < 1 || nrows_d < 1 || ncols_d != std::floor(ncols_d) ||
        nrows_d != std::floor(nrows_d) || ncols_d > 1e7 || nrows_d > 1e7) {
        throw ParseError(path, 0, "invalid grid dimensions in header");
    }
    if (!(header["cellsize"] > 0.0)) {
        throw ParseError(path, 0, "cellsize must be positive");
    }
    const double nodata = header.count("nodata_value") ? header["nodata_value"] : -9999.0;
    RasterGrid grid(static_cast<int>(ncols_d), static_cast<int>(nrows_d), header["xllcorner"],
                    header["yllcorner"], header["cellsize"], nodata);

    in.clear();
    in.seekg(data_start);
    const std::size_t expected = grid.cell_count();
    std::size_t count = 0;
    std::string tok;
    while (count < expected && in >> tok) {
        const double v = parse_number(tok, path, 0, "grid value");
        const int row = static_cast<int>(count / grid.ncols());
        const int col = static_cast<int>(count % grid.ncols());
        if (v == nodata) {
            grid.set_nodata(col, row);
        } else {
            grid.set(col, row, v);
        }
        ++count;
    }
    if (count != expected) {
        std::ostringstream oss;
        oss << "grid data truncated: expected " << expected << " values, got " << count;
        throw ParseError(path, 0, oss.str());
    }
    return grid;
}

}  // namespace monomap::io
