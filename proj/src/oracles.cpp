#include "ellipt/oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ellipt/elliptic_core.hpp"
#include "ellipt/errors.hpp"
#include "ellipt/jacobi.hpp"

namespace ellipt {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

void check_angle(double theta) {
    if (!(theta > 0.0 && theta <= 0.25 * kPi)) throw DomainError("oracle: theta must lie in (0, pi/4]");
}

double real_parameter(cplx p, double lo, double hi, const char* what) {
    if (p.imag() != 0.0 || !(p.real() > lo && p.real() < hi)) throw DomainError(what);
    return p.real();
}

RealTriple landen_at(double u, double m) { return landen_sncndn(complete_k(m).real() * u, m); }

struct FourierSetup {
    cplx log_q;
    cplx K;
    cplx sqrt_m1;
};

FourierSetup fourier_setup(cplx m) {
    const EllipticContext ctx = build_context(Parameter(m));
    if (ctx.is_limit() || ctx.param.on_cut()) throw DomainError("fourier oracle: m must be off [1, inf)");
    if (!(std::abs(ctx.q) < 0.9)) throw DomainError("fourier oracle: |q| must be below 0.9");
    if (m == 0.0) throw DomainError("fourier oracle: tau is infinite at m = 0");
    return {ctx.log_q, ctx.K, std::sqrt(1.0 - m)};
}

}  // namespace

std::string_view to_string(OracleId id) {
    switch (id) {
        case OracleId::unit_circle_sn2: return "unit_circle_sn2";
        case OracleId::d1_boundary_sn4: return "d1_boundary_sn4";
        case OracleId::landen_recursion: return "landen_recursion";
        case OracleId::fourier_ratio_sc: return "fourier_ratio_sc";
        case OracleId::fourier_ratio_nc: return "fourier_ratio_nc";
        case OracleId::fourier_ratio_dc: return "fourier_ratio_dc";
        case OracleId::cut_continuation: return "cut_continuation";
    }
    return "?";
}

RealTriple landen_sncndn(double w, double m) {
    if (!(m >= 0.0 && m < 1.0)) throw DomainError("landen_sncndn: m must lie in [0, 1)");
    if (m == 0.0) return {std::sin(w), std::cos(w), 1.0};
    constexpr int kCap = 32;
    double a[kCap + 1];
    double c[kCap + 1];
    a[0] = 1.0;
    c[0] = std::sqrt(m);
    double b = std::sqrt(1.0 - m);
    int n = 0;
    while (std::abs(c[n]) > std::numeric_limits<double>::epsilon() * a[n]) {
        if (n == kCap) throw ConvergenceError("landen_sncndn: AGM did not converge");
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }
    double phi = std::ldexp(a[n] * w, n);
    for (int k = n; k >= 1; --k) phi = 0.5 * (phi + std::asin(c[k] * std::sin(phi) / a[k]));
    const double s = std::sin(phi);
    return {s, std::cos(phi), std::sqrt(1.0 - m * s * s)};
}

cplx cut_sn_addition(double u, const Parameter& p) {
    if (!p.on_cut()) throw DomainError("cut_sn_addition: m must be real and > 1");
    const double m = p.m().real();
    const double mu = 1.0 / m;
    const JacobiTriple a = jacobi_triple(u, build_context(Parameter(mu)));
    const JacobiTriple b = jacobi_triple(u, build_context(Parameter((m - 1.0) / m)));
    const double s = a.s.real(), c = a.c.real(), d = a.d.real();
    const double s1 = b.s.real(), c1 = b.c.real(), d1 = b.d.real();
    const double sign = p.side() == Side::below ? -1.0 : 1.0;
    return std::sqrt(mu) * cplx(s * d1, sign * c * d * s1 * c1) / (1.0 - d * d * s1 * s1);
}

cplx fourier_sc_at_tau(double u, cplx m, int terms) {
    const FourierSetup f = fourier_setup(m);
    auto qp = [&](double a) { return std::exp(f.log_q * a); };
    const cplx scale = kI * kPi / (f.sqrt_m1 * f.K);
    cplx sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        sum += sign * qp((2.0 - u) * n) / (1.0 + qp(2.0 * n)) * (1.0 - qp(2.0 * n * u));
    }
    return 0.5 * scale * (1.0 - qp(u)) / (1.0 + qp(u)) + scale * sum;
}

cplx fourier_nc_at_tau(double u, cplx m, int terms) {
    const FourierSetup f = fourier_setup(m);
    auto qp = [&](double a) { return std::exp(f.log_q * a); };
    const cplx scale = kPi / (f.sqrt_m1 * f.K);
    cplx sum = 0.0;
    for (int n = 0; n < terms; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const double odd = 2.0 * n + 1.0;
        sum += sign * qp((n + 0.5) * (2.0 - u)) / (1.0 + qp(odd)) * (1.0 + qp(odd * u));
    }
    return scale * qp(0.5 * u) / (1.0 + qp(u)) - scale * sum;
}

cplx fourier_dc_at_tau(double u, cplx m, int terms) {
    const FourierSetup f = fourier_setup(m);
    auto qp = [&](double a) { return std::exp(f.log_q * a); };
    const cplx scale = kPi / f.K;
    cplx sum = 0.0;
    for (int n = 0; n < terms; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const double odd = 2.0 * n + 1.0;
        sum += sign * qp((n + 0.5) * (2.0 - u)) / (1.0 - qp(odd)) * (1.0 + qp(odd * u));
    }
    return scale * qp(0.5 * u) / (1.0 + qp(u)) + scale * sum;
}

OraclePair oracle_eval(OracleId id, double u, cplx p, Side side) {
    switch (id) {
        case OracleId::unit_circle_sn2: {
            const double theta = p.real();
            check_angle(theta);
            const cplx m = std::polar(1.0, 4.0 * theta);
            const cplx sn = jacobi_triple(u, build_context(Parameter(m))).s;
            const double cos2 = std::cos(theta) * std::cos(theta);
            const double sin2 = std::sin(theta) * std::sin(theta);
            const RealTriple a = landen_at(u, cos2);
            const RealTriple b = landen_at(u, sin2);
            const cplx cn = cplx(a.c * b.c, -a.s * b.s * a.d * b.d) / (b.c * b.c + cos2 * a.s * a.s * b.s * b.s);
            return {sn * sn, std::polar(1.0, -2.0 * theta) * (1.0 - cn) / (1.0 + cn)};
        }
        case OracleId::d1_boundary_sn4: {
            const double theta = p.real();
            check_angle(theta);
            const cplx m = 1.0 - std::polar(1.0, -4.0 * theta);
            const double value = sigma(u, Parameter(m)).sigma;
            const double s2 = std::sin(theta) * std::sin(theta);
            const RealTriple t = landen_at(2.0 * u, s2);
            return {value * value * value * value, t.s * t.s / (4.0 * t.d * t.d) * (1.0 - t.c) / (1.0 + t.c)};
        }
        case OracleId::landen_recursion: {
            const double m = real_parameter(p, 0.0, 1.0, "landen oracle: m must be real in (0, 1)");
            const cplx sn = jacobi_triple(u, build_context(Parameter(m))).s;
            return {sn, landen_at(u, m).s};
        }
        case OracleId::fourier_ratio_sc:
            return {ratio_at_tau(RatioKind::sc, u, build_context(Parameter(p))), fourier_sc_at_tau(u, p)};
        case OracleId::fourier_ratio_nc:
            return {ratio_at_tau(RatioKind::nc, u, build_context(Parameter(p))), fourier_nc_at_tau(u, p)};
        case OracleId::fourier_ratio_dc:
            return {ratio_at_tau(RatioKind::dc, u, build_context(Parameter(p))), fourier_dc_at_tau(u, p)};
        case OracleId::cut_continuation: {
            real_parameter(p, 1.0, std::numeric_limits<double>::infinity(), "cut oracle: m must be real and > 1");
            const Parameter param(p, side);
            return {cut_sn_addition(u, param), cut_triple(u, build_context(param)).s};
        }
    }
    throw DomainError("oracle_eval: unknown oracle");
}

}  // namespace ellipt
