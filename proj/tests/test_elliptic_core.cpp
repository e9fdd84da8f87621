#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ellipt/detail/r2.hpp"
#include "ellipt/elliptic_core.hpp"
#include "ellipt/errors.hpp"
#include "support/oracles.hpp"

using namespace ellipt;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);
}  // namespace

TEST_CASE("parameter regimes and side tags") {
    CHECK(Parameter(0.3).regime() == Regime::unit_disk_interior);
    CHECK(Parameter(cplx(0.0, 1.0)).regime() == Regime::unit_circle);
    CHECK(Parameter(cplx(1.2, 0.3)).regime() == Regime::lens);
    CHECK(Parameter(1.5).regime() == Regime::cut);
    CHECK(Parameter(1.0).regime() == Regime::one);
    CHECK(Parameter(cplx(-3.0, 1.0)).regime() == Regime::exterior);

    CHECK(Parameter(1.5).side() == Side::above);
    CHECK(Parameter(1.5, Side::below).side() == Side::below);
    CHECK(Parameter(0.5).side() == Side::none);
    CHECK_THROWS_AS(Parameter(0.5, Side::above), DomainError);
    CHECK_THROWS_AS(Parameter(cplx(1.5, 0.1), Side::below), DomainError);
    CHECK_THROWS_AS(Parameter(cplx(NAN, 0.0)), DomainError);

    CHECK(Parameter(1.5, Side::above).conjugate().side() == Side::below);
    CHECK(Parameter(cplx(0.2, 0.3)).conjugate().m() == cplx(0.2, -0.3));
    CHECK(Parameter(cplx(2.0, 0.0)).reciprocal_complement() == cplx(0.5, 0.0));
}

TEST_CASE("regime is reproduced by reclassification on samples") {
    detail::R2Sequence seq;
    for (int i = 0; i < 2000; ++i) {
        double a, b;
        seq.next(a, b);
        const cplx m(6.0 * a - 3.0, 6.0 * b - 3.0);
        const Parameter p(m);
        CHECK(classify(p.m()) == p.regime());
        const double r = std::abs(m), r1 = std::abs(m - 1.0);
        if (p.regime() == Regime::lens) CHECK((r > 1.0 && r1 < 1.0));
        if (p.regime() == Regime::exterior) CHECK((r > 1.0 && r1 >= 1.0));
        if (p.regime() == Regime::unit_disk_interior) CHECK(r < 1.0);
    }
}

TEST_CASE("agm") {
    CHECK(agm(1.0, 1.0) == cplx(1.0));
    CHECK(agm(1.0, 0.0) == cplx(0.0));
    const cplx ref = kPi / (2.0 * oracle::complete_k(0.5));
    CHECK(std::abs(agm(1.0, std::sqrt(0.5)) - ref) < 1e-12);
    CHECK_THROWS_AS(agm(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(agm(1.0, -1.0), ConvergenceError);
}

TEST_CASE("complete K and K'") {
    CHECK(std::abs(complete_k(0.0) - kPi / 2) < 1e-15);
    CHECK(std::abs(complete_k(0.5) - oracle::complete_k(0.5)) < 1e-12);
    CHECK(std::abs(complete_k(0.5).real() - 1.8540746773013719) < 1e-13);
    CHECK_THROWS_AS(complete_k(1.0), DomainError);
    CHECK_THROWS_AS(complete_k(3.0), DomainError);

    const double theta = kPi / 8;
    const double c2 = std::cos(theta) * std::cos(theta), s2 = std::sin(theta) * std::sin(theta);
    const cplx m = std::polar(1.0, 4 * theta);
    const cplx k_rhs = 0.5 * std::polar(1.0, -theta) * (complete_k(c2) + kI * complete_k(s2));
    CHECK(std::abs(complete_k(m) - k_rhs) < 1e-12);
    CHECK(std::abs(complete_kprime(m) - std::polar(1.0, -theta) * complete_k(s2)) < 1e-12);

    CHECK(std::abs(complete_kprime(0.5) - complete_k(0.5)) < 1e-15);
    CHECK_THROWS_AS(complete_kprime(0.0), DomainError);
    CHECK_THROWS_AS(complete_kprime(-2.0), DomainError);
}

TEST_CASE("K matches quadrature and |q| < 1 on quasi-random samples") {
    detail::R2Sequence seq(0.3);
    int taken = 0;
    double worst = 0.0;
    while (taken < 10000) {
        double a, b;
        seq.next(a, b);
        const cplx m(20.0 * a - 10.0, 20.0 * b - 10.0);
        if (std::abs(m) > 10.0) continue;
        ++taken;
        const EllipticContext ctx = build_context(Parameter(m));
        REQUIRE(std::abs(ctx.q) < 1.0);
        const cplx ref = oracle::complete_k(m);
        worst = std::max(worst, std::abs(ctx.K - ref) / std::abs(ref));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("context at m = 1/2 and near 0") {
    const EllipticContext ctx = build_context(Parameter(0.5));
    CHECK(std::abs(ctx.tau - kI) < 1e-15);
    CHECK(std::abs(ctx.q - std::exp(-kPi)) < 1e-16);
    CHECK(std::abs(ctx.q.real() - 0.0432139182637723) < 1e-15);

    const double m = 1e-4;
    const cplx q = build_context(Parameter(m)).q;
    CHECK(std::abs(q / (m / 16 + m * m / 32) - 1.0) < 1e-6);

    const EllipticContext zero = build_context(Parameter(0.0));
    CHECK(zero.q == cplx(0.0));
    CHECK(std::abs(zero.K - kPi / 2) < 1e-15);
}

TEST_CASE("route flag and conjugation") {
    detail::R2Sequence seq(0.8);
    for (int i = 0; i < 500; ++i) {
        double a, b;
        seq.next(a, b);
        const cplx m(6.0 * a - 3.0, 3.0 * b + 1e-3);
        const EllipticContext up = build_context(Parameter(m));
        const EllipticContext down = build_context(Parameter(std::conj(m)));
        if (up.use_complementary) CHECK(std::abs(up.q1) <= std::abs(up.q));
        CHECK(std::abs(down.q - std::conj(up.q)) < 1e-12);
        CHECK(std::abs(down.K - std::conj(up.K)) < 1e-12 * std::abs(up.K));
        CHECK(std::abs(down.tau + std::conj(up.tau)) < 1e-12 * std::abs(up.tau));
    }
    const EllipticContext c1 = build_context(Parameter(cplx(0.3, 0.4)));
    const EllipticContext c2 = build_context(Parameter(cplx(0.3, -0.4)));
    CHECK(std::abs(c1.q - std::conj(c2.q)) < 1e-14);
}

TEST_CASE("connection formula on the cut") {
    for (int j = 1; j < 50; ++j) {
        const double m = 1.0 + 9.0 * j / 50.0;
        const cplx k_mu = oracle::complete_k(1.0 / m);
        for (Side side : {Side::above, Side::below}) {
            const EllipticContext ctx = build_context(Parameter(m, side));
            const double sign = side == Side::above ? 1.0 : -1.0;
            CHECK(std::abs(k_mu - std::sqrt(m) * (ctx.K - sign * kI * ctx.Kprime)) < 1e-10);
        }
        const EllipticContext up = build_context(Parameter(m, Side::above));
        const EllipticContext down = build_context(Parameter(m, Side::below));
        CHECK(std::abs(up.K - std::conj(down.K)) < 1e-14);
    }
}

TEST_CASE("unit-circle formulas on a 100-point grid") {
    for (int k = 1; k <= 100; ++k) {
        const double theta = 0.25 * kPi * k / 100;
        const double c2 = std::cos(theta) * std::cos(theta), s2 = std::sin(theta) * std::sin(theta);
        const cplx m = std::polar(1.0, 4 * theta);
        const cplx rhs = 0.5 * std::polar(1.0, -theta) * (oracle::complete_k(c2) + kI * oracle::complete_k(s2));
        CHECK(std::abs(complete_k(m) - rhs) < 1e-10);
        if (k == 100) continue;  // K'(-1) sits on its own cut
        CHECK(std::abs(complete_kprime(m) - std::polar(1.0, -theta) * oracle::complete_k(s2)) < 1e-10);
    }
}

TEST_CASE("theta functions") {
    const cplx q = build_context(Parameter(0.5)).q;
    CHECK(std::abs(theta(1, 0.0, q)) == 0.0);
    CHECK(theta(3, 0.0, 0.0) == cplx(1.0));
    const cplx ratio = theta(2, 0.0, q) / theta(3, 0.0, q);
    CHECK(std::abs(ratio * ratio * ratio * ratio - 0.5) < 1e-12);
    CHECK_THROWS_AS(theta(3, 0.0, 0.99), DomainError);
    CHECK_THROWS_AS(theta(5, 0.0, 0.1), DomainError);

    detail::R2Sequence seq(0.1);
    for (int i = 0; i < 400; ++i) {
        double a, b;
        seq.next(a, b);
        const cplx nome = std::polar(0.9 * a, 2 * kPi * b);
        const cplx x(3.0 * b - 1.5, a - 0.5);
        for (int j = 1; j <= 4; ++j) {
            const cplx ref = oracle::theta(j, x, nome, 400);
            CHECK(std::abs(theta(j, x, nome) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("modular identity m = (theta2 / theta3)^4") {
    for (cplx m : {cplx(0.1), cplx(0.9), cplx(-0.5), cplx(0.3, 0.6), cplx(-0.2, -0.7)}) {
        const cplx q = build_context(Parameter(m)).q;
        const cplx r = theta(2, 0.0, q) / theta(3, 0.0, q);
        CHECK(std::abs(r * r * r * r - m) < 1e-12);
    }
}

TEST_CASE("m = 1 is a limit context") {
    const EllipticContext ctx = build_context(Parameter(1.0));
    CHECK(ctx.is_limit());
    CHECK(std::isinf(ctx.K.real()));
}
