#include "polyheat/grid.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polyheat {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}

GridSpec::GridSpec(int dim, int n, double length)
    : dimension(dim), points_per_axis(n), box_length(length) {
    if (dim < 1 || dim > 3) throw std::domain_error("GridSpec: dimension must be 1, 2 or 3");
    if (n < 8 || !power_of_two(n))
        throw std::domain_error("GridSpec: points_per_axis must be a power of two >= 8");
    if (!(length > 0.0)) throw std::domain_error("GridSpec: box_length must be positive");
}

double GridSpec::cell_volume() const {
    double v = 1.0;
    for (int i = 0; i < dimension; ++i) v *= h();
    return v;
}

std::size_t GridSpec::total_points() const {
    std::size_t t = 1;
    for (int i = 0; i < dimension; ++i) t *= static_cast<std::size_t>(points_per_axis);
    return t;
}

GridField::GridField(const GridSpec& s) : spec(s), values(s.total_points(), 0.0) {}

Point node_coord(const GridSpec& spec, std::size_t flat) {
    Point p{0.0, 0.0, 0.0};
    const std::size_t n = spec.points_per_axis;
    for (int axis = spec.dimension - 1; axis >= 0; --axis) {
        p[axis] = spec.coord(static_cast<int>(flat % n));
        flat /= n;
    }
    return p;
}

double lp_norm(const GridField& field, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : field.values) m = std::max(m, std::abs(v));
        return m;
    }
    if (!(p >= 1.0)) throw std::domain_error("lp_norm: requires p >= 1");
    long double acc = 0.0L;
    for (double v : field.values) acc += std::pow(std::abs(static_cast<long double>(v)), p);
    acc *= field.spec.cell_volume();
    return static_cast<double>(std::pow(acc, 1.0L / p));
}

double mean_value(const GridField& field) {
    long double acc = 0.0L;
    for (double v : field.values) acc += v;
    return static_cast<double>(acc / field.values.size());
}

GridField sample_function(const GridSpec& spec, const std::function<double(const Point&)>& f) {
    GridField out(spec);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Point x = node_coord(spec, i);
        double v = f(x);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "sample_function: non-finite value at node " << i << " (x = " << x[0];
            if (spec.dimension > 1) os << ", " << x[1];
            if (spec.dimension > 2) os << ", " << x[2];
            os << ")";
            throw std::runtime_error(os.str());
        }
        out[i] = v;
    }
    return out;
}

double boundary_max(const GridField& field) {
    const GridSpec& s = field.spec;
    const std::size_t n = s.points_per_axis;
    double m = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) {
        std::size_t rem = i;
        bool on_boundary = false;
        for (int axis = 0; axis < s.dimension; ++axis) {
            std::size_t idx = rem % n;
            rem /= n;
            if (idx == 0 || idx == n - 1) {
                on_boundary = true;
                break;
            }
        }
        if (on_boundary) m = std::max(m, std::abs(field[i]));
    }
    return m;
}

GridField operator+(const GridField& a, const GridField& b) {
    if (!(a.spec == b.spec)) throw std::invalid_argument("GridField: spec mismatch");
    GridField out(a.spec);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

GridField operator-(const GridField& a, const GridField& b) {
    if (!(a.spec == b.spec)) throw std::invalid_argument("GridField: spec mismatch");
    GridField out(a.spec);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

GridField operator*(double c, const GridField& a) {
    GridField out(a.spec);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * a[i];
    return out;
}

void save_field(const GridField& field, const std::string& path) {
    nlohmann::json hdr = {{"dimension", field.spec.dimension},
                          {"points_per_axis", field.spec.points_per_axis},
                          {"box_length", field.spec.box_length},
                          {"format", "float64"}};
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_field: cannot open " + path);
    os << hdr.dump() << "\n";
    os.write(reinterpret_cast<const char*>(field.values.data()),
             static_cast<std::streamsize>(field.values.size() * sizeof(double)));
}

GridField load_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_field: cannot open " + path);
    std::string line;
    std::getline(is, line);
    auto hdr = nlohmann::json::parse(line);
    GridSpec spec(hdr.at("dimension").get<int>(), hdr.at("points_per_axis").get<int>(),
                  hdr.at("box_length").get<double>());
    GridField out(spec);
    is.read(reinterpret_cast<char*>(out.values.data()),
            static_cast<std::streamsize>(out.values.size() * sizeof(double)));
    if (!is) throw std::runtime_error("load_field: truncated payload in " + path);
    for (double v : out.values)
        if (!std::isfinite(v)) throw std::runtime_error("load_field: non-finite value in " + path);
    return out;
}

void export_csv_1d(const GridField& field, const std::string& path) {
    if (field.spec.dimension != 1)
        throw std::domain_error("export_csv_1d: only N = 1 fields export to CSV");
    std::ofstream os(path);
    if (!os) throw std::runtime_error("export_csv_1d: cannot open " + path);
    os << "x,value\n";
    char buf[64];
    for (std::size_t i = 0; i < field.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", field.spec.coord(static_cast<int>(i)),
                      field[i]);
        os << buf;
    }
}

} // namespace polyheat
