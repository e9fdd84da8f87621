#include "ellipt/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ellipt/detail/parallel.hpp"
#include "ellipt/elliptic_core.hpp"
#include "ellipt/errors.hpp"
#include "ellipt/jacobi.hpp"

namespace ellipt {

namespace {

constexpr double kRootTolerance = 1e-12;
constexpr double kEndpointOffset = 1e-9;
constexpr double kCutBracket = 1e-10;
constexpr double kMuUpper = 1.0 - 1e-13;

struct GoldenResult {
    double x;
    double fx;
    int evaluations;
};

// Golden-section maximisation of a unimodal f on [a, b] down to a bracket of
// width `tol`, finished with one parabolic step through x - tol, x, x + tol.
template <typename F>
GoldenResult golden_maximize(F&& f, double a, double b, double tol) {
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = f(c);
    double fd = f(d);
    int evaluations = 2;
    while (b - a > tol && evaluations < 400) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
        ++evaluations;
    }
    GoldenResult best = fc >= fd ? GoldenResult{c, fc, evaluations} : GoldenResult{d, fd, evaluations};

    const double h = std::max(tol, 1e-3 * (b - a));
    const double left = best.x - h;
    const double right = best.x + h;
    const double fl = f(left);
    const double fr = f(right);
    best.evaluations += 2;
    const double curvature = fl - 2.0 * best.fx + fr;
    if (curvature < 0.0) {
        const double vertex = best.x + 0.5 * h * (fl - fr) / curvature;
        if (vertex > left && vertex < right) {
            const double fv = f(vertex);
            ++best.evaluations;
            if (fv >= best.fx) best = {vertex, fv, best.evaluations};
        }
    }
    return best;
}

double dc_real(double u, double m) { return jacobi_ratio(RatioKind::dc, u, build_context(Parameter(m))).real(); }

double cut_sigma(double u, double m) { return std::sqrt(cut_sigma_squared(u, m)); }

void check_open_unit(double u, const char* what) {
    if (!(u > 0.0 && u < 1.0)) throw DomainError(what);
}

// Uniform samples lo + i*step for i = 0.. while <= hi (with a small slack).
std::vector<double> samples(double lo, double hi, double step) {
    std::vector<double> out;
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
    return out;
}

}  // namespace

double phi(double u, double mu) {
    check_open_unit(u, "phi: u must lie in (0, 1)");
    check_open_unit(mu, "phi: mu must lie in (0, 1)");
    const double a = dc_real(u, 1.0 - mu);
    const double b = dc_real(u, mu);
    return a * a - b * b;
}

ExtremalResult m_tilde(double u) {
    if (!(u > 0.5 && u < 1.0)) throw DomainError("m_tilde: no root of phi = 1 for u outside (1/2, 1)");
    double lo = 0.5;
    double hi = kMuUpper;
    if (!(phi(u, hi) > 1.0)) throw DomainError("m_tilde: phi = 1 is not bracketed on (1/2, 1)");
    int iterations = 0;
    while (hi - lo > kRootTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (phi(u, mid) < 1.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iterations;
    }
    const double mu = 0.5 * (lo + hi);
    return {u, 1.0 / mu, phi(u, mu) - 1.0, iterations, true, true};
}

ExtremalResult max_on_cut(double u, const CutMaxOptions& options) {
    check_open_unit(u, "max_on_cut: u must lie in (0, 1)");
    if (u <= 0.5) return {u, 1.0, 1.0, 0, true, true};

    const ExtremalResult root = m_tilde(u);
    double a = 1.0 + kEndpointOffset;
    double b = root.location - kEndpointOffset;
    auto f = [u](double m) { return cut_sigma(u, m); };

    bool unimodal = true;
    int evaluations = 0;
    if (options.scan_points >= 3) {
        const int n = options.scan_points;
        std::vector<double> xs(n);
        std::vector<double> fs(n);
        for (int i = 0; i < n; ++i) {
            xs[i] = a + (b - a) * i / (n - 1);
            fs[i] = f(xs[i]);
        }
        evaluations += n;
        int peaks = 0;
        int rising = 0;  // sign of the last nonzero difference
        for (int i = 1; i < n; ++i) {
            const double diff = fs[i] - fs[i - 1];
            if (diff == 0.0) continue;
            const int dir = diff > 0.0 ? 1 : -1;
            if (rising > 0 && dir < 0) ++peaks;
            rising = dir;
        }
        if (rising > 0) ++peaks;
        unimodal = peaks == 1;
        const auto best = static_cast<int>(std::max_element(fs.begin(), fs.end()) - fs.begin());
        a = xs[std::max(best - 1, 0)];
        b = xs[std::min(best + 1, n - 1)];
    }

    const GoldenResult g = golden_maximize(f, a, b, kCutBracket);
    return {u, g.x, g.fx, evaluations + g.evaluations, true, unimodal};
}

GlobalMaximum global_max(const UGrid& grid, double refine) {
    if (!(grid.step > 0.0) || !(grid.u_max > grid.u_min)) throw DomainError("global_max: bad u-grid");
    if (!(refine > 0.0)) throw DomainError("global_max: refine must be positive");
    std::vector<double> us;
    for (int i = 1;; ++i) {
        const double u = grid.u_min + i * grid.step;
        if (u >= grid.u_max - 1e-12 * grid.step) break;
        if (u > 0.0 && u < 1.0) us.push_back(u);
    }
    if (us.empty()) throw DomainError("global_max: u-grid has no interior point in (0, 1)");

    std::vector<ExtremalResult> coarse(us.size());
    detail::parallel_for(us.size(), [&](std::size_t i) { coarse[i] = max_on_cut(us[i]); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < coarse.size(); ++i) {
        if (coarse[i].value > coarse[best].value) best = i;
    }
    GlobalMaximum out;
    out.evaluations = static_cast<int>(us.size());
    if (coarse[best].u <= 0.5) {
        out.u_star = coarse[best].u;
        out.m_star = 1.0;
        out.sigma_star = 1.0;
        return out;
    }

    const CutMaxOptions fast{0};
    const double lo = std::max(coarse[best].u - grid.step, 0.5 + kEndpointOffset);
    const double hi = std::min(coarse[best].u + grid.step, 1.0 - kEndpointOffset);
    const GoldenResult g = golden_maximize([&](double u) { return max_on_cut(u, fast).value; }, lo, hi, refine);
    const ExtremalResult at = max_on_cut(g.x, fast);
    out.u_star = at.u;
    out.m_star = at.location;
    out.sigma_star = at.value;
    out.evaluations += g.evaluations + 1;
    return out;
}

std::vector<MaximaRow> maxima_table(double u_min, double u_max, double u_step) {
    if (!(u_step > 0.0) || !(u_min > 0.0) || !(u_max < 1.0) || !(u_max >= u_min)) {
        throw DomainError("maxima_table: need 0 < u_min <= u_max < 1 and a positive step");
    }
    const std::vector<double> us = samples(u_min, u_max, u_step);
    std::vector<MaximaRow> rows(us.size());
    detail::parallel_for(us.size(), [&](std::size_t i) {
        const double u = us[i];
        const ExtremalResult peak = max_on_cut(u);
        const double root = u > 0.5 ? m_tilde(u).location : std::numeric_limits<double>::quiet_NaN();
        rows[i] = {u, root, peak.location, peak.value};
    });
    return rows;
}

Profile profile(double u, double m_min, double m_max, double step) {
    check_open_unit(u, "profile: u must lie in (0, 1)");
    if (!(step > 0.0) || !(m_max > m_min)) throw DomainError("profile: need m_min < m_max and a positive step");
    Profile out;
    out.u = u;
    out.m = samples(m_min, m_max, step);
    out.sigma.resize(out.m.size());
    for (std::size_t i = 0; i < out.m.size(); ++i) out.sigma[i] = sigma(u, Parameter(out.m[i])).sigma;

    bool convex = true;
    bool concave = true;
    int checked = 0;
    for (std::size_t i = 1; i + 1 < out.m.size(); ++i) {
        if (!(out.m[i - 1] > 1.0)) continue;
        const double second = out.sigma[i - 1] - 2.0 * out.sigma[i] + out.sigma[i + 1];
        if (second < -1e-12) convex = false;
        if (second > 1e-12) concave = false;
        ++checked;
    }
    if (checked == 0) {
        out.shape = "mixed";
    } else {
        out.shape = convex ? "convex" : concave ? "concave" : "mixed";
    }
    return out;
}

}  // namespace ellipt
