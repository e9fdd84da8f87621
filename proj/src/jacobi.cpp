#include "ellipt/jacobi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ellipt/errors.hpp"

namespace ellipt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleThreshold = 1e-13;
constexpr double kVanishingTheta = 1e-300;
const cplx kI(0.0, 1.0);

struct ThetaZero {
    cplx t2, t3, t4;
};

ThetaZero theta_zero(cplx log_nome) {
    return {detail::theta_reduced(2, 0.0, log_nome), detail::theta_reduced(3, 0.0, log_nome),
            detail::theta_reduced(4, 0.0, log_nome)};
}

// sn, cn, dn of the parameter whose nome is exp(log_nome), at theta argument x.
ComplexTriple direct_quotients(cplx log_nome, const ThetaZero& zero, cplx x) {
    const cplx t1 = detail::theta_reduced(1, x, log_nome);
    const cplx t2 = detail::theta_reduced(2, x, log_nome);
    const cplx t3 = detail::theta_reduced(3, x, log_nome);
    const cplx t4 = detail::theta_reduced(4, x, log_nome);
    if (std::abs(t4) < kVanishingTheta) throw std::logic_error("theta_4 vanished at a real argument off the cut");
    return {zero.t3 / zero.t2 * (t1 / t4), zero.t4 / zero.t2 * (t2 / t4), zero.t4 / zero.t3 * (t3 / t4)};
}

// sn, cn, dn of m from the complementary nome: with (s1, c1, d1) taken at
// 1 - m and argument i K(m) u, sn = -i s1/c1, cn = 1/c1, dn = d1/c1.
ComplexTriple complementary_quotients(cplx log_nome1, const ThetaZero& zero1, cplx x) {
    const cplx t1 = detail::theta_reduced(1, x, log_nome1);
    const cplx t2 = detail::theta_reduced(2, x, log_nome1);
    const cplx t3 = detail::theta_reduced(3, x, log_nome1);
    const cplx t4 = detail::theta_reduced(4, x, log_nome1);
    if (std::abs(t2) < kVanishingTheta) throw std::logic_error("theta_2 vanished on the complementary route");
    return {-kI * (zero1.t3 / zero1.t4) * (t1 / t2), (zero1.t2 / zero1.t4) * (t4 / t2),
            (zero1.t2 / zero1.t3) * (t3 / t2)};
}

// Principal power with 0^a = 0 for a > 0.
cplx principal_pow(cplx z, double a) { return z == 0.0 ? cplx(0.0) : std::pow(z, a); }

void check_u(double u) {
    if (!(u >= 0.0 && u <= 2.0)) throw DomainError("u must lie in [0, 2]");
}

}  // namespace

JacobiEvaluator::JacobiEvaluator(const EllipticContext& ctx) : ctx_(ctx) {
    if (ctx.is_limit()) throw DomainError("jacobi_triple: m = 1 has only limit values");
    if (ctx.param.on_cut()) throw DomainError("jacobi_triple: m on the cut, use cut_triple or sigma");
    log_nome_ = ctx.use_complementary ? ctx.log_q1 : ctx.log_q;
    tau_ = ctx.use_complementary ? ctx.tau1 : ctx.tau;
    const ThetaZero zero = theta_zero(log_nome_);
    t2_ = zero.t2;
    t3_ = zero.t3;
    t4_ = zero.t4;
}

JacobiTriple JacobiEvaluator::operator()(double u) const {
    check_u(u);
    const ThetaZero zero{t2_, t3_, t4_};
    ComplexTriple t;
    if (ctx_.use_complementary) {
        t = complementary_quotients(log_nome_, zero, 0.5 * kPi * tau_ * u);
    } else {
        t = direct_quotients(log_nome_, zero, 0.5 * kPi * u);
    }
    return {t.s, t.c, t.d, u, ctx_.param.m()};
}

JacobiTriple jacobi_triple(double u, const EllipticContext& ctx) { return JacobiEvaluator(ctx)(u); }

ComplexTriple theta_argument_triple(const EllipticContext& ctx, cplx x) {
    if (ctx.is_limit()) throw DomainError("theta_argument_triple: m = 1 has no nome series");
    return direct_quotients(ctx.log_q, theta_zero(ctx.log_q), x);
}

JacobiTriple cut_triple(double u, const EllipticContext& ctx) {
    check_u(u);
    if (!ctx.param.on_cut()) throw DomainError("cut_triple: m must be real and > 1");
    const double m = ctx.param.m().real();
    const EllipticContext inner = build_context(Parameter(1.0 / m));
    const double sign = ctx.param.side() == Side::below ? -1.0 : 1.0;
    const cplx x = 0.5 * kPi * u * (1.0 + sign * inner.tau);
    const ComplexTriple t = theta_argument_triple(inner, x);
    return {std::sqrt(1.0 / m) * t.s, t.d, t.c, u, ctx.param.m()};
}

cplx ratio_of(RatioKind kind, const ComplexTriple& t) {
    cplx num;
    cplx den;
    switch (kind) {
        case RatioKind::sc: num = t.s; den = t.c; break;
        case RatioKind::nc: num = 1.0; den = t.c; break;
        case RatioKind::dc: num = t.d; den = t.c; break;
        case RatioKind::sd: num = t.s; den = t.d; break;
        case RatioKind::cd: num = t.c; den = t.d; break;
        case RatioKind::ns: num = 1.0; den = t.s; break;
    }
    if (std::abs(den) < kPoleThreshold) throw PoleError("ratio denominator vanishes (pole)");
    return num / den;
}

cplx jacobi_ratio(RatioKind kind, double u, const EllipticContext& ctx) {
    const JacobiTriple t = jacobi_triple(u, ctx);
    return ratio_of(kind, {t.s, t.c, t.d});
}

cplx ratio_at_tau(RatioKind kind, double u, const EllipticContext& ctx) {
    if (ctx.param.m() == 0.0) throw DomainError("ratio_at_tau: tau is infinite at m = 0");
    return ratio_of(kind, theta_argument_triple(ctx, 0.5 * kPi * ctx.tau * u));
}

double jacobi_zeta(double u, const EllipticContext& ctx) {
    check_u(u);
    const cplx m = ctx.param.m();
    if (m.imag() != 0.0 || !(m.real() > 0.0 && m.real() < 1.0)) {
        throw DomainError("jacobi_zeta: m must be real in (0, 1)");
    }
    const double x = 0.5 * kPi * u;
    const double q = ctx.q.real();
    const double t4 = detail::theta_reduced(4, x, ctx.log_q).real();
    return kPi / (2.0 * ctx.K.real()) * detail::theta4_prime_real(x, q) / t4;
}

double cut_sigma_squared(double u, double m) {
    if (!(m > 1.0)) throw DomainError("cut_sigma_squared: m must exceed 1");
    const double mu = 1.0 / m;
    const JacobiTriple a = jacobi_triple(u, build_context(Parameter(mu)));
    const JacobiTriple b = jacobi_triple(u, build_context(Parameter((m - 1.0) / m)));
    const double s = a.s.real(), c = a.c.real(), d = a.d.real();
    const double s1 = b.s.real(), c1 = b.c.real(), d1 = b.d.real();
    const double den = 1.0 - d * d * s1 * s1;
    return mu * (s * s * d1 * d1 + c * c * d * d * s1 * s1 * c1 * c1) / (den * den);
}

SigmaValue sigma(double u, const Parameter& m) {
    check_u(u);
    if (u > 1.0) u = 2.0 - u;
    SigmaValue out;
    out.u = u;
    out.m = m.m();
    if (m.is_one()) {
        out.route = SigmaRoute::limit_at_one;
        out.sigma = u == 0.0 ? 0.0 : 1.0;
    } else if (m.on_cut()) {
        out.route = SigmaRoute::cut_formula;
        out.sigma = std::sqrt(cut_sigma_squared(u, m.m().real()));
    } else {
        out.route = SigmaRoute::theta_quotient;
        out.sigma = std::abs(jacobi_triple(u, build_context(m)).s);
    }
    return out;
}

cplx asym_ref(AsymKind which, double u, cplx m) {
    const cplx m1 = 1.0 - m;
    switch (which) {
        case AsymKind::sn0: return std::sin(0.5 * kPi * u);
        case AsymKind::cn0: return std::cos(0.5 * kPi * u);
        case AsymKind::dn0: return 1.0;
        case AsymKind::sn1: return 1.0 - std::pow(2.0, 1.0 - 4.0 * u) * principal_pow(m1, u);
        case AsymKind::cn1:
        case AsymKind::dn1: return std::pow(2.0, 1.0 - 2.0 * u) * principal_pow(m1, 0.5 * u);
        case AsymKind::sc0: return kI - kI * std::pow(2.0, 1.0 - 4.0 * u) * principal_pow(m, u);
        case AsymKind::nc0:
        case AsymKind::dc0: return std::pow(2.0, 1.0 - 2.0 * u) * principal_pow(m, 0.5 * u);
    }
    return 0.0;
}

}  // namespace ellipt
