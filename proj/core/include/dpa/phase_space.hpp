#pragma once

#include <utility>
#include <vector>

#include "dpa/ermakov.hpp"

namespace dpa {

struct RotatedCoords {
    double X, P;
};

struct SqueezedCoords {
    double U, V;
};

struct PhaseSpacePoint {
    double x, p;
    double X, P;
    double U, V;
    double t;
};

// X = w x cos wt - p sin wt, P = w x sin wt + p cos wt.
RotatedCoords rotate(double x, double p, double t, double omega);

// Inverse of rotate; returns (x, p) packed as {X = x, P = p}.
RotatedCoords unrotate(double X, double P, double t, double omega);

SqueezedCoords squeeze_coords(double X, double P, double t, const ModelParams& params);
RotatedCoords unsqueeze_coords(double U, double V, double t, const ModelParams& params);

PhaseSpacePoint phase_space_point(double x, double p, double t, const ModelParams& params);

// Q(U, V) for the initial data of the dynamical vacuum.
double quadratic_form(const InitialData& init, double U, double V, double omega);

// exp(-Q) / pi. Requires init.n = 0.
double wigner_vacuum(const InitialData& init, double t, const ModelParams& params, double x, double p);

struct WignerGrid {
    double x_min = 0.0, x_max = 0.0;
    double p_min = 0.0, p_max = 0.0;
    int nx = 0, np = 0;
    std::vector<double> values;  // values[i * np + j] at (x(i), p(j))
    double t = 0.0;

    double x(int i) const { return x_min + i * (x_max - x_min) / (nx - 1); }
    double p(int j) const { return p_min + j * (p_max - p_min) / (np - 1); }
    double at(int i, int j) const { return values[std::size_t(i) * np + j]; }
};

WignerGrid wigner_grid(const InitialData& init, double t, const ModelParams& params, double x_min,
                       double x_max, int nx, double p_min, double p_max, int np);

// Grid centred on the means, spanning 8 standard deviations each way.
WignerGrid wigner_grid_auto(const InitialData& init, double t, const ModelParams& params,
                            int points = 513);

struct Contour {
    double t = 0.0;
    double level = 0.0;
    std::vector<std::pair<double, double>> points;  // (x, p), closed implicitly
};

// The ellipse Q(U, V) = level mapped back to (x, p).
Contour contour_q(double level, double t, const InitialData& init, const ModelParams& params,
                  int num_points = 256);

// Shoelace area of the closed polygon.
double polygon_area(const std::vector<std::pair<double, double>>& pts);

}  // namespace dpa
