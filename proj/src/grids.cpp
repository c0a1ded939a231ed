#include "ambiarray/grids.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <span>

namespace ambiarray {

namespace {

DirectionGrid from_table(const char* name, const detail::LebedevPoint* pts, int n) {
    DirectionGrid g;
    g.name = name;
    g.directions.reserve(n);
    g.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        g.directions.push_back(Direction::normalized(pts[i].theta, pts[i].phi));
        g.weights[i] = pts[i].weight;
    }
    return g;
}

}  // namespace

const std::vector<int>& lebedev_sizes() {
    static const std::vector<int> sizes = {6, 26, 194, 2702};
    return sizes;
}

DirectionGrid lebedev_grid(int point_count) {
    switch (point_count) {
        case 6: return from_table("lebedev6", detail::kLebedev6, 6);
        case 26: return from_table("lebedev26", detail::kLebedev26, 26);
        case 194: return from_table("lebedev194", detail::kLebedev194, 194);
        case 2702: return from_table("lebedev2702", detail::kLebedev2702, 2702);
        default:
            throw ConfigError("unsupported Lebedev size " + std::to_string(point_count) +
                              " (have 6, 26, 194, 2702)");
    }
}

DirectionGrid fibonacci_grid(int count) {
    if (count < 1) throw DomainError("grid needs at least one point");
    DirectionGrid g;
    g.name = "fibonacci" + std::to_string(count);
    g.weights = VectorXd::Constant(count, kFourPi / count);
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / count;
        g.directions.push_back(Direction::normalized(std::acos(z), wrap_angle(golden * i)));
    }
    return g;
}

void write_grid_csv(const std::filesystem::path& path, const DirectionGrid& grid) {
    grid.validate();
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "theta,phi,weight\n";
    out.precision(17);
    for (int q = 0; q < grid.size(); ++q) {
        out << grid.directions[q].theta << ',' << grid.directions[q].phi << ','
            << grid.weights[q] << '\n';
    }
    if (!out) throw IoError("write failed for " + path.string());
}

DirectionGrid read_grid_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty grid file " + path.string());
    // tolerate \r\n and surrounding spaces in the header
    auto strip = [](std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
        return s;
    };
    if (strip(line) != "theta,phi,weight")
        throw IoError("bad grid header in " + path.string() + ": " + line);
    DirectionGrid g;
    g.name = path.stem().string();
    std::vector<double> w;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip(line);
        if (line.empty()) continue;
        double v[3];
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int k = 0; k < 3; ++k) {
            auto [next, ec] = std::from_chars(p, end, v[k]);
            if (ec != std::errc{})
                throw IoError(path.string() + ":" + std::to_string(lineno) + ": bad number");
            p = next;
            if (k < 2) {
                if (p == end || *p != ',')
                    throw IoError(path.string() + ":" + std::to_string(lineno) +
                                  ": expected 3 comma separated fields");
                ++p;
            }
        }
        g.directions.push_back(Direction::normalized(v[0], v[1]));
        w.push_back(v[2]);
    }
    g.weights = Eigen::Map<const VectorXd>(w.data(), w.size());
    g.validate();
    return g;
}

}  // namespace ambiarray
