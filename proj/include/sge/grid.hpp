#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sge {

/// Uniform rectangular (x, z) grid, endpoints inclusive.
struct GridSpec {
    double x_min = -100.0, x_max = 100.0;
    int nx = 512;
    double z_min = -140.0, z_max = 140.0;
    int nz = 512;

    double dx() const { return (x_max - x_min) / (nx - 1); }
    double dz() const { return (z_max - z_min) / (nz - 1); }
    double x(int i) const { return x_min + i * dx(); }
    double z(int j) const { return z_min + j * dz(); }

    bool operator==(const GridSpec&) const = default;
};

inline GridSpec validate_grid(const GridSpec& g) {
    if (g.nx < 2 || g.nz < 2) throw std::invalid_argument("grid: nx and nz must be >= 2");
    if (!(g.x_max > g.x_min)) throw std::invalid_argument("grid: x_max must exceed x_min");
    if (!(g.z_max > g.z_min)) throw std::invalid_argument("grid: z_max must exceed z_min");
    return g;
}

/// Probability density sampled on a grid; values[j*nx + i] is the node
/// (x_i, z_j), i.e. rows run over z.
struct DensityField {
    GridSpec grid;
    std::vector<double> values;

    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * grid.nx + i]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * grid.nx + i]; }
};

inline DensityField make_field(const GridSpec& g) {
    validate_grid(g);
    return {g, std::vector<double>(static_cast<std::size_t>(g.nx) * g.nz, 0.0)};
}

/// 2D trapezoidal integral over the grid.
inline double integrate(const DensityField& d) {
    const auto& g = d.grid;
    double sum = 0.0;
    for (int j = 0; j < g.nz; ++j) {
        const double wz = (j == 0 || j == g.nz - 1) ? 0.5 : 1.0;
        double row = 0.0;
        for (int i = 0; i < g.nx; ++i) {
            const double wx = (i == 0 || i == g.nx - 1) ? 0.5 : 1.0;
            row += wx * d.at(i, j);
        }
        sum += wz * row;
    }
    return sum * g.dx() * g.dz();
}

inline double max_value(const DensityField& d) {
    double m = 0.0;
    for (double v : d.values)
        if (v > m) m = v;
    return m;
}

}  // namespace sge
