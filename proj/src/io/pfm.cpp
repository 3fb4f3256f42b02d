#include "monomap/io/pfm.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "monomap/errors.hpp"

namespace monomap::io {

namespace {

// PFM tokens are separated by single whitespace characters; the header ends
// with exactly one whitespace before the binary payload.
std::string next_token(std::istream& in, const std::string& path) {
    std::string tok;
    char c;
    while (in.get(c)) {
        if (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(c);
    }
    if (!tok.empty()) return tok;
    throw ParseError(path, 0, "unexpected end of file in PFM header");
}

void byteswap_floats(std::vector<float>& data) {
    for (float& f : data) {
        std::uint32_t u;
        std::memcpy(&u, &f, 4);
        u = ((u & 0x000000ffu) << 24) | ((u & 0x0000ff00u) << 8) | ((u & 0x00ff0000u) >> 8) |
            ((u & 0xff000000u) >> 24);
        std::memcpy(&f, &u, 4);
    }
}

long parse_dim(const std::string& tok, const std::string& path, const char* what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(path, 0, std::string("malformed PFM ") + what + ": '" + tok + "'");
    }
    if (pos != tok.size() || v < 1 || v > 1 << 20) {
        throw ParseError(path, 0, std::string("malformed PFM ") + what + ": '" + tok + "'");
    }
    return v;
}

}  // namespace

DepthMap read_depth_pfm(const std::string& path, DepthKind kind) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MissingFileError("cannot open PFM file: " + path);
    }
    const std::string magic = next_token(in, path);
    if (magic == "PF") {
        throw ParseError(path, 0, "color PFM not supported, expected grayscale 'Pf'");
    }
    if (magic != "Pf") {
        throw ParseError(path, 0, "not a PFM file (missing 'Pf' header)");
    }
    const long w = parse_dim(next_token(in, path), path, "width");
    const long h = parse_dim(next_token(in, path), path, "height");
    const std::string scale_tok = next_token(in, path);
    double scale = 0.0;
    try {
        std::size_t pos = 0;
        scale = std::stod(scale_tok, &pos);
        if (pos != scale_tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError(path, 0, "malformed PFM scale line: '" + scale_tok + "'");
    }
    if (scale == 0.0 || !std::isfinite(scale)) {
        throw ParseError(path, 0, "PFM scale must be finite and non-zero");
    }

    std::vector<float> data(static_cast<std::size_t>(w) * h);
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size() * 4));
    if (static_cast<std::size_t>(in.gcount()) != data.size() * 4) {
        std::ostringstream oss;
        oss << "truncated PFM payload: expected " << data.size() * 4 << " bytes, got "
            << in.gcount();
        throw ParseError(path, 0, oss.str());
    }

    const bool file_little = scale < 0.0;
    if (file_little != (std::endian::native == std::endian::little)) {
        byteswap_floats(data);
    }

    DepthMap map(static_cast<int>(w), static_cast<int>(h), kind);
    for (int j = 0; j < map.height(); ++j) {
        // PFM stores the bottom row first
        const std::size_t src_row = static_cast<std::size_t>(h - 1 - j) * w;
        for (int i = 0; i < map.width(); ++i) {
            const float v = data[src_row + i];
            const bool ok = std::isfinite(v) && (kind != DepthKind::metric || v > 0.0f);
            if (ok) {
                map.set(i, j, v);
            } else {
                map.set_invalid(i, j);
            }
        }
    }
    return map;
}

void write_depth_pfm(const DepthMap& map, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw MissingFileError("cannot open PFM file for writing: " + path);
    }
    const double scale = std::endian::native == std::endian::little ? -1.0 : 1.0;
    out << "Pf\n" << map.width() << " " << map.height() << "\n" << scale << "\n";
    std::vector<float> row(map.width());
    for (int j = map.height() - 1; j >= 0; --j) {
        for (int i = 0; i < map.width(); ++i) {
            row[i] = map.is_valid(i, j) ? map.at(i, j)
                                        : std::numeric_limits<float>::quiet_NaN();
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size() * 4));
    }
    if (!out) {
        throw MissingFileError("short write to PFM file: " + path);
    }
}

}  // namespace monomap::io
