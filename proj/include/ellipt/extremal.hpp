#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ellipt/parameter.hpp"

namespace ellipt {

/// A located maximum (u, m*, sigma) or root (u, m~, residual) on the real axis.
struct ExtremalResult {
    double u = 0.0;
    double location = 0.0;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
    /// Sampling found a single local maximum on the search interval.
    bool unimodal = true;
};

/// phi(u, mu) = dc^2(K(mu1) u | mu1) - dc^2(K(mu) u | mu), mu1 = 1 - mu.
/// u and mu in (0, 1).
double phi(double u, double mu);

/// Root m~(u) in (1, 2) of phi(u, 1/m) = 1, by bisection in mu on (1/2, 1)
/// down to |d mu| <= 1e-12. `value` holds the residual phi - 1.
/// Throws DomainError for u outside (1/2, 1), where no root exists.
ExtremalResult m_tilde(double u);

struct CutMaxOptions {
    /// Points of the sampling pass that checks for a single local maximum.
    int scan_points = 1000;
};

/// Maximum of m -> sigma(u, m) on the cut. For u in (1/2, 1) the search runs
/// on [1 + 1e-9, m~ - 1e-9] (golden section to a 1e-10 bracket, then one
/// parabolic step); for u <= 1/2 the supremum is the limit value 1 at m = 1.
ExtremalResult max_on_cut(double u, const CutMaxOptions& options = {});

struct UGrid {
    double u_min = 0.5;
    double u_max = 1.0;
    double step = 0.01;
};

struct GlobalMaximum {
    double u_star = 0.0;
    double m_star = 0.0;
    double sigma_star = 0.0;
    int evaluations = 0;
};

/// Global maximum of sigma over (u, m). The maximum over m sits on the real
/// interval (1, 2), so the search scans max_on_cut over the open u-grid and
/// then refines u by golden section until the bracket is below `refine`.
GlobalMaximum global_max(const UGrid& grid = {}, double refine = 1e-8);

/// One row of the m*(u) / sigma(u, m*(u)) table; m_tilde is NaN for u <= 1/2.
struct MaximaRow {
    double u;
    double m_tilde;
    double m_star;
    double sigma_star;
};
std::vector<MaximaRow> maxima_table(double u_min, double u_max, double u_step);

/// sigma(u, m) along the real segment [m_min, m_max].
struct Profile {
    double u = 0.0;
    std::vector<double> m;
    std::vector<double> sigma;
    /// "convex", "concave" or "mixed" from the sign of second differences
    /// over the samples with m > 1.
    std::string shape;
};
Profile profile(double u, double m_min, double m_max, double step);

struct Window {
    double x0, x1, y0, y1;
};

/// A piece of the sigma = 1 level set, vertices in the m-plane.
struct ContourPolyline {
    std::vector<cplx> vertices;
    bool closed = false;
};

/// sigma sampled on a grid over a window of the m-plane, with its level set
/// sigma = 1. Values are row-major: index = iy * nx + ix.
struct RegionGrid {
    double u = 0.0;
    double x0 = 0.0, y0 = 0.0, step = 0.0;
    int nx = 0, ny = 0;
    std::vector<double> values;
    std::vector<ContourPolyline> contour;

    double x(int ix) const;
    double y(int iy) const;
    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }
};

RegionGrid region_scan(double u, const Window& window, double step);

/// Marching squares on a row-major scalar grid. A node is inside when its
/// value exceeds `level`; crossing points are linearly interpolated along
/// cell edges and chained into polylines in a fixed order.
std::vector<ContourPolyline> extract_level_set(const std::vector<double>& values, int nx, int ny, double x0,
                                               double y0, double step, double level);

}  // namespace ellipt
