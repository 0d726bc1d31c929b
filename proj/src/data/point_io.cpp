#include "ddc/data/point_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "ddc/errors.hpp"

namespace ddc::data {

namespace {

bool parse_line(const std::string& line, geom::Point& p) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) return false;
    try {
        std::size_t u1 = 0, u2 = 0;
        const std::string xs = line.substr(0, comma);
        const std::string ys = line.substr(comma + 1);
        p.x = std::stod(xs, &u1);
        p.y = std::stod(ys, &u2);
        for (std::size_t i = u2; i < ys.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(ys[i]))) return false;
        return std::isfinite(p.x) && std::isfinite(p.y);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

PointSet read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open point file: " + path);
    PointSet out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        geom::Point p;
        if (parse_line(line, p)) {
            out.push_back(p);
        } else if (line_no != 1) {
            // Only the first line may be a header.
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected x,y");
        }
    }
    return out;
}

void write_points(const std::string& path, const PointSet& points) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw ConfigError("cannot write point file: " + path);
    for (const auto& p : points) std::fprintf(f, "%.17g,%.17g\n", p.x, p.y);
    std::fclose(f);
}

}  // namespace ddc::data
