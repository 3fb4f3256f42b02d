#include "monomap/io/ply.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "monomap/errors.hpp"

namespace monomap::io {

namespace {

constexpr const char* kExpectedProperties[6] = {"double x",   "double y",    "double z",
                                                "uchar red",  "uchar green", "uchar blue"};

std::string read_header_line(std::istream& in, const std::string& path, int& line_no) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(path, line_no, "unexpected end of file in PLY header");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

void write_ply(const PointCloud& cloud, const std::string& path) {
    static_assert(std::endian::native == std::endian::little,
                  "PLY writer assumes a little-endian host");
    for (const auto& p : cloud.points) {
        if (!p.position.allFinite()) {
            throw InvalidArgument("point cloud contains non-finite coordinates");
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw MissingFileError("cannot open PLY file for writing: " + path);
    }
    out << "ply\nformat binary_little_endian 1.0\n";
    out << "element vertex " << cloud.points.size() << "\n";
    for (const char* prop : kExpectedProperties) {
        out << "property " << prop << "\n";
    }
    out << "end_header\n";
    for (const auto& p : cloud.points) {
        double xyz[3] = {p.position.x(), p.position.y(), p.position.z()};
        out.write(reinterpret_cast<const char*>(xyz), 24);
        out.write(reinterpret_cast<const char*>(p.rgb.data()), 3);
    }
    if (!out) {
        throw MissingFileError("short write to PLY file: " + path);
    }
}

PointCloud read_ply(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MissingFileError("cannot open PLY file: " + path);
    }
    int line_no = 0;
    if (read_header_line(in, path, line_no) != "ply") {
        throw ParseError(path, 1, "not a PLY file (missing 'ply' magic)");
    }
    std::string line = read_header_line(in, path, line_no);
    if (line != "format binary_little_endian 1.0") {
        throw ParseError(path, line_no, "unsupported PLY variant: '" + line + "'");
    }

    long vertex_count = -1;
    std::vector<std::string> properties;
    while (true) {
        line = read_header_line(in, path, line_no);
        if (line == "end_header") break;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "comment") continue;
        if (word == "element") {
            std::string name;
            long count = 0;
            if (!(ls >> name >> count) || count < 0) {
                throw ParseError(path, line_no, "malformed element line: '" + line + "'");
            }
            if (name != "vertex" || vertex_count >= 0) {
                throw ParseError(path, line_no, "unsupported PLY variant: element '" + name + "'");
            }
            vertex_count = count;
            continue;
        }
        if (word == "property") {
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
            properties.push_back(rest);
            continue;
        }
        throw ParseError(path, line_no, "unexpected PLY header line: '" + line + "'");
    }
    if (vertex_count < 0) {
        throw ParseError(path, line_no, "PLY header has no vertex element");
    }
    if (properties.size() != 6) {
        throw ParseError(path, line_no, "unsupported PLY variant: expected 6 vertex properties");
    }
    for (std::size_t i = 0; i < 6; ++i) {
        if (properties[i] != kExpectedProperties[i]) {
            throw ParseError(path, line_no,
                             "unsupported PLY variant: property '" + properties[i] + "'");
        }
    }

    PointCloud cloud;
    cloud.has_color = true;
    cloud.points.resize(static_cast<std::size_t>(vertex_count));
    for (auto& p : cloud.points) {
        char buf[27];
        in.read(buf, 27);
        if (in.gcount() != 27) {
            throw ParseError(path, 0, "truncated PLY payload");
        }
        double xyz[3];
        std::memcpy(xyz, buf, 24);
        p.position = WorldPoint(xyz[0], xyz[1], xyz[2]);
        std::memcpy(p.rgb.data(), buf + 24, 3);
        p.source_image = -1;
    }
    return cloud;
}

}  // namespace monomap::io
