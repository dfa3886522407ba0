#ifndef POLYHEAT_GRID_HPP
#define POLYHEAT_GRID_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace polyheat {

// Uniform periodic grid on [-L/2, L/2)^N, N in {1,2,3}, n a power of two.
struct GridSpec {
    int dimension = 1;
    int points_per_axis = 64;
    double box_length = 1.0;

    GridSpec() = default;
    GridSpec(int dim, int n, double length);

    double h() const { return box_length / points_per_axis; }
    double cell_volume() const;
    std::size_t total_points() const;
    // node coordinate along one axis
    double coord(int index) const { return -0.5 * box_length + h() * index; }
    bool operator==(const GridSpec&) const = default;
};

// Sampled real field on a GridSpec. Row-major, last axis fastest.
struct GridField {
    GridSpec spec;
    std::vector<double> values;

    GridField() = default;
    explicit GridField(const GridSpec& s);

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }
};

using Point = std::array<double, 3>;

// Coordinates of a flat index.
Point node_coord(const GridSpec& spec, std::size_t flat);

// (sum |u|^p h^N)^(1/p); p = infinity gives max |u|. Throws for p < 1.
double lp_norm(const GridField& field, double p);

double mean_value(const GridField& field);

// Samples f at the grid nodes. Throws std::runtime_error naming the node if
// any sample is non-finite.
GridField sample_function(const GridSpec& spec, const std::function<double(const Point&)>& f);

// Max |u| over the outermost node layer (indices 0 and n-1 on any axis);
// diagnostic for whether the periodic truncation is hurting.
double boundary_max(const GridField& field);

// Arithmetic helpers
GridField operator+(const GridField& a, const GridField& b);
GridField operator-(const GridField& a, const GridField& b);
GridField operator*(double c, const GridField& a);

// Flat binary (little-endian doubles) preceded by a one-line JSON header.
void save_field(const GridField& field, const std::string& path);
GridField load_field(const std::string& path);

// CSV (coordinate, value) for N = 1 fields.
void export_csv_1d(const GridField& field, const std::string& path);

} // namespace polyheat

#endif
