#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "ellipt/detail/parallel.hpp"
#include "ellipt/errors.hpp"
#include "ellipt/extremal.hpp"
#include "ellipt/jacobi.hpp"

namespace ellipt {

namespace {

constexpr long kMaxNodes = 16'000'000;

// Grid coordinate origin + i*step, snapped onto the nearest multiple of step
// when it is within rounding of one, so that 0 and 1 hit the axis and m = 1
// exactly instead of landing a few ulps away.
double grid_coordinate(double origin, int i, double step) {
    const double v = origin + i * step;
    const double k = std::round(v / step);
    return std::abs(v - k * step) <= 1e-9 * step ? k * step : v;
}

int node_count(double lo, double hi, double step) {
    return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

struct Segment {
    std::int64_t a, b;
};

}  // namespace

double RegionGrid::x(int ix) const { return grid_coordinate(x0, ix, step); }
double RegionGrid::y(int iy) const { return grid_coordinate(y0, iy, step); }

RegionGrid region_scan(double u, const Window& window, double step) {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("region_scan: u must lie in (0, 1)");
    if (!(step > 0.0) || !(window.x1 > window.x0) || !(window.y1 > window.y0)) {
        throw DomainError("region_scan: need a non-empty window and a positive step");
    }
    RegionGrid g;
    g.u = u;
    g.x0 = window.x0;
    g.y0 = window.y0;
    g.step = step;
    g.nx = node_count(window.x0, window.x1, step);
    g.ny = node_count(window.y0, window.y1, step);
    if (g.nx < 2 || g.ny < 2) throw DomainError("region_scan: window must span at least one cell");
    if (static_cast<long>(g.nx) * g.ny > kMaxNodes) throw DomainError("region_scan: grid too large");
    g.values.resize(static_cast<std::size_t>(g.nx) * g.ny);

    detail::parallel_for(static_cast<std::size_t>(g.ny), [&](std::size_t row) {
        const int iy = static_cast<int>(row);
        const double y = g.y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            g.values[row * g.nx + ix] = sigma(u, Parameter(cplx(g.x(ix), y))).sigma;
        }
    });
    g.contour = extract_level_set(g.values, g.nx, g.ny, g.x0, g.y0, step, 1.0);
    return g;
}

std::vector<ContourPolyline> extract_level_set(const std::vector<double>& values, int nx, int ny, double x0,
                                               double y0, double step, double level) {
    if (nx < 2 || ny < 2 || values.size() != static_cast<std::size_t>(nx) * ny) {
        throw DomainError("extract_level_set: grid shape does not match values");
    }
    auto value = [&](int ix, int iy) { return values[static_cast<std::size_t>(iy) * nx + ix]; };
    auto inside = [&](int ix, int iy) { return value(ix, iy) > level; };

    // Edge ids: 2*node for the horizontal edge to the right of a node,
    // 2*node + 1 for the vertical edge above it.
    auto horizontal = [&](int ix, int iy) { return 2 * (static_cast<std::int64_t>(iy) * nx + ix); };
    auto vertical = [&](int ix, int iy) { return horizontal(ix, iy) + 1; };

    auto crossing = [&](std::int64_t edge) {
        const std::int64_t node = edge / 2;
        const int ix = static_cast<int>(node % nx);
        const int iy = static_cast<int>(node / nx);
        const bool up = edge % 2 == 1;
        const int jx = up ? ix : ix + 1;
        const int jy = up ? iy + 1 : iy;
        const double va = value(ix, iy);
        const double vb = value(jx, jy);
        const double t = (level - va) / (vb - va);
        const double xa = grid_coordinate(x0, ix, step);
        const double ya = grid_coordinate(y0, iy, step);
        const double xb = grid_coordinate(x0, jx, step);
        const double yb = grid_coordinate(y0, jy, step);
        return cplx(xa + t * (xb - xa), ya + t * (yb - ya));
    };

    std::vector<Segment> segments;
    for (int iy = 0; iy + 1 < ny; ++iy) {
        for (int ix = 0; ix + 1 < nx; ++ix) {
            const int code = (inside(ix, iy) ? 1 : 0) | (inside(ix + 1, iy) ? 2 : 0) |
                             (inside(ix + 1, iy + 1) ? 4 : 0) | (inside(ix, iy + 1) ? 8 : 0);
            if (code == 0 || code == 15) continue;
            const std::int64_t e[4] = {horizontal(ix, iy), vertical(ix + 1, iy), horizontal(ix, iy + 1),
                                       vertical(ix, iy)};
            auto add = [&](int p, int q) { segments.push_back({e[p], e[q]}); };
            const bool centre = 0.25 * (value(ix, iy) + value(ix + 1, iy) + value(ix + 1, iy + 1) +
                                        value(ix, iy + 1)) > level;
            switch (code) {
                case 1: case 14: add(3, 0); break;
                case 2: case 13: add(0, 1); break;
                case 3: case 12: add(3, 1); break;
                case 4: case 11: add(1, 2); break;
                case 6: case 9: add(0, 2); break;
                case 7: case 8: add(3, 2); break;
                case 5:
                    if (centre) { add(0, 1); add(2, 3); } else { add(3, 0); add(1, 2); }
                    break;
                case 10:
                    if (centre) { add(3, 0); add(1, 2); } else { add(0, 1); add(2, 3); }
                    break;
                default: break;
            }
        }
    }

    std::unordered_map<std::int64_t, std::vector<std::size_t>> by_edge;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        by_edge[segments[i].a].push_back(i);
        by_edge[segments[i].b].push_back(i);
    }
    std::vector<bool> used(segments.size(), false);
    auto next_segment = [&](std::int64_t edge) -> long {
        for (std::size_t j : by_edge[edge]) {
            if (!used[j]) return static_cast<long>(j);
        }
        return -1;
    };
    // Follows unused segments from `edge`, returning the visited edge ids.
    auto walk = [&](std::int64_t edge) {
        std::vector<std::int64_t> path;
        for (long j = next_segment(edge); j >= 0; j = next_segment(edge)) {
            used[j] = true;
            edge = segments[j].a == edge ? segments[j].b : segments[j].a;
            path.push_back(edge);
        }
        return path;
    };

    std::vector<ContourPolyline> out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const std::int64_t start = segments[i].a;
        std::vector<std::int64_t> edges{start, segments[i].b};
        const std::vector<std::int64_t> forward = walk(segments[i].b);
        edges.insert(edges.end(), forward.begin(), forward.end());
        ContourPolyline line;
        line.closed = edges.size() > 2 && edges.back() == start;
        if (!line.closed) {
            const std::vector<std::int64_t> backward = walk(start);
            edges.insert(edges.begin(), backward.rbegin(), backward.rend());
        }
        line.vertices.reserve(edges.size());
        for (std::int64_t e : edges) line.vertices.push_back(crossing(e));
        out.push_back(std::move(line));
    }
    return out;
}

}  // namespace ellipt
