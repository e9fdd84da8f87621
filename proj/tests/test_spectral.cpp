#include <doctest.h>

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "ellipt/elliptic_core.hpp"
#include "ellipt/errors.hpp"
#include "ellipt/spectral.hpp"
#include "support/oracles.hpp"

using namespace ellipt;

namespace {

const cplx kI(0.0, 1.0);

// C_l / D_l for real m in [0, 1) with Boost's Jacobi functions and adaptive
// Gauss-Kronrod.
cplx cd_boost(CDKind kind, int l, cplx z, double m) {
    const double k = std::sqrt(m);
    const double K = boost::math::ellint_1(k);
    auto f = [&](double t) {
        double c = 0.0, d = 0.0;
        const double s = boost::math::jacobi_elliptic(k, t, &c, &d);
        return std::exp(-z * t) * (kind == CDKind::C ? c : d) * std::pow(s, l);
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 2.0 * K, 20, 1e-14);
}

}  // namespace

TEST_CASE("Gauss-Legendre rule") {
    for (int order : {1, 4, 7, 16, 32}) {
        std::vector<double> x, w;
        gauss_legendre(order, x, w);
        REQUIRE(x.size() == static_cast<std::size_t>(order));
        CHECK(std::is_sorted(x.begin(), x.end()));
        double sum = 0.0;
        for (double v : w) sum += v;
        CHECK(std::abs(sum - 2.0) < 1e-13);
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(x[i] + x[x.size() - 1 - i]) < 1e-15);
        // exact for polynomials of degree 2 order - 1
        const int deg = 2 * order - 2;
        double moment = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) moment += w[i] * std::pow(x[i], deg);
        CHECK(std::abs(moment - 2.0 / (deg + 1)) < 1e-13);
    }
    std::vector<double> x, w;
    CHECK_THROWS_AS(gauss_legendre(0, x, w), DomainError);
}

TEST_CASE("composite rule on the segment") {
    for (cplx m : {cplx(0.0), cplx(0.5), cplx(0.3, 0.4), cplx(-0.9), std::polar(1.0, 2.0)}) {
        const QuadratureRule rule = make_rule(Parameter(m), 8, 3);
        CHECK(rule.s.size() == 24);
        CHECK(std::abs(rule.length - 2.0 * oracle::complete_k(m)) < 1e-12);
        double sum = 0.0;
        for (double v : rule.weight) sum += v;
        CHECK(std::abs(sum - 1.0) < 1e-14);
        CHECK(std::all_of(rule.s.begin(), rule.s.end(), [](double s) { return s > 0.0 && s < 1.0; }));
    }
    CHECK_THROWS_AS(make_rule(Parameter(1.0), 8, 2), DomainError);
    CHECK_THROWS_AS(make_rule(Parameter(cplx(0.9, 0.9)), 8, 2), DomainError);
    CHECK_THROWS_AS(make_rule(Parameter(0.5), 8, 0), DomainError);
}

TEST_CASE("elementary segment integrals") {
    for (cplx m : {cplx(0.5), cplx(-0.7), cplx(0.2, -0.6), std::polar(1.0, 1.0)}) {
        const Parameter p(m);
        const cplx K = build_context(p).K;
        CHECK(std::abs(integrate_segment([](cplx, const JacobiTriple&) { return cplx(1.0); }, p) - 2.0 * K) < 1e-12);
        // cn is odd about t = K; the amplitude advances by pi
        CHECK(std::abs(cd_integral(CDKind::C, 0, 0.0, p)) < 1e-11);
        CHECK(std::abs(cd_integral(CDKind::D, 0, 0.0, p) - oracle::pi) < 1e-11);
        // sn dn = -d cn / dt
        CHECK(std::abs(cd_integral(CDKind::D, 1, 0.0, p) - 2.0) < 1e-11);
    }
    CHECK_THROWS_AS(cd_integral(CDKind::C, -1, 0.0, Parameter(0.5)), DomainError);
}

TEST_CASE("C and D against an independent quadrature") {
    for (double m : {0.0, 0.36, 0.81}) {
        for (cplx z : {cplx(0.0), cplx(0.4), cplx(0.3, -0.8)}) {
            for (int l : {0, 1, 5, 12}) {
                const cplx c = cd_integral(CDKind::C, l, z, Parameter(m));
                const cplx d = cd_integral(CDKind::D, l, z, Parameter(m));
                CHECK(std::abs(c - cd_boost(CDKind::C, l, z, m)) < 1e-10);
                CHECK(std::abs(d - cd_boost(CDKind::D, l, z, m)) < 1e-10);
            }
        }
    }
}

TEST_CASE("leading-order behaviour in l") {
    const std::vector<AsymptoticRatio> d = cd_asymptotics(CDKind::D, cplx(0.3, 0.1), Parameter(0.5), {10, 40, 160});
    CHECK(std::abs(d[1].ratio - 1.0) < 0.1);
    CHECK(std::abs(d[2].ratio - 1.0) < std::abs(d[1].ratio - 1.0));
    CHECK(std::abs(d[1].ratio - 1.0) < std::abs(d[0].ratio - 1.0));
    const std::vector<AsymptoticRatio> c = cd_asymptotics(CDKind::C, cplx(0.4), Parameter(0.3), {20, 80, 320});
    CHECK(std::abs(c[2].ratio - 1.0) < std::abs(c[1].ratio - 1.0));
    CHECK(std::abs(c[2].ratio - 1.0) < 0.1);
    CHECK_THROWS_AS(cd_asymptotics(CDKind::C, 0.0, Parameter(0.5), {10}), DomainError);
    CHECK_THROWS_AS(cd_asymptotics(CDKind::D, 0.0, Parameter(0.5), {0}), DomainError);
}

TEST_CASE("saddle-point integrals") {
    // m = 0: int_0^pi sin^l = sqrt(pi) Gamma((l+1)/2) / Gamma(l/2 + 1)
    for (int l : {4, 17, 64}) {
        const AsymptoticRatio r = saddle_check(SaddleFunction::const_one, Parameter(0.0), {l})[0];
        const double exact = std::exp(0.5 * std::log(oracle::pi) + std::lgamma(0.5 * (l + 1)) - std::lgamma(0.5 * l + 1));
        CHECK(std::abs(r.value - exact) < 1e-12);
    }
    for (cplx m : {cplx(0.5), cplx(0.2, 0.3)}) {
        for (SaddleFunction f : {SaddleFunction::const_one, SaddleFunction::square_about_K}) {
            const std::vector<AsymptoticRatio> rs = saddle_check(f, Parameter(m), {16, 64, 256});
            CHECK(std::abs(rs[2].ratio - 1.0) < std::abs(rs[1].ratio - 1.0));
            CHECK(std::abs(rs[1].ratio - 1.0) < std::abs(rs[0].ratio - 1.0));
            CHECK(std::abs(rs[2].ratio - 1.0) < 0.05);
        }
    }
}

TEST_CASE("v-sequence") {
    const VSequence at0 = v_sequence(0.0, 0.5, 6);
    CHECK(std::abs(at0.entries[0]) < 1e-12);
    CHECK(std::abs(at0.entries[1] + 2.0) < 1e-12);
    CHECK(std::abs(at0.m - 0.25) < 1e-15);

    // |v_n| shrinks like |k|^(n/2)
    const VSequence seq = v_sequence(cplx(0.7, 0.2), cplx(0.8 * std::cos(0.4), 0.8 * std::sin(0.4)), 62);
    CHECK(std::abs(seq.entries[61]) < 1e-2 * std::abs(seq.entries[1]));

    // v_n(-conj z, conj k) = (-1)^n conj v_n(z, k)
    const cplx z(0.6, -0.3), k(0.4, 0.5);
    const VSequence a = v_sequence(z, k, 12);
    const VSequence b = v_sequence(-std::conj(z), std::conj(k), 12);
    for (int n = 1; n <= 12; ++n) {
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        CHECK(std::abs(b.entries[n - 1] - sign * std::conj(a.entries[n - 1])) < 1e-12);
    }
    CHECK_THROWS_AS(v_sequence(0.0, 1.0, 4), DomainError);
    CHECK_THROWS_AS(v_sequence(0.0, cplx(0.9, 0.9), 4), DomainError);
    CHECK_THROWS_AS(v_sequence(0.0, 0.5, 0), DomainError);
}

TEST_CASE("Jacobi matrix residuals") {
    CHECK(jacobi_offdiag(0.5, 3) == cplx(3.0));
    CHECK(jacobi_offdiag(0.5, 4) == cplx(2.0));

    const JacobiResidual at0 = jacobi_residual(0.5, 0.0, 10);
    CHECK(std::abs(at0.rows[0] + 2.0) < 1e-12);
    CHECK(std::abs(at0.rhs_check) < 1e-12);

    for (auto [k, z] : {std::pair<cplx, cplx>{0.6, 1.3}, {cplx(0.5, 0.3), cplx(0.4, -0.2)}, {-0.9, cplx(0.0, 0.5)}}) {
        const JacobiResidual r = jacobi_residual(k, z, 30);
        CHECK(r.rows.size() == 29);
        CHECK(r.max_interior() < 1e-10);
        CHECK(std::abs(r.rhs_check) < 1e-10);
    }

    // fixed panels: each doubling cuts the residual by at least 10
    double prev = 0.0;
    for (int panels : {1, 2, 4}) {
        const JacobiResidual r = jacobi_residual(0.6, cplx(0.8, 0.3), 12, {4, panels, false});
        const double res = r.max_interior();
        if (panels > 1) CHECK(res < prev / 10.0);
        prev = res;
    }
    CHECK_THROWS_AS(jacobi_residual(0.5, 0.0, 2), DomainError);
}

TEST_CASE("truncated spectrum") {
    const double K = boost::math::ellint_1(0.5);
    const double base = oracle::pi / (2.0 * K);
    const std::vector<cplx> ev = truncated_eigenvalues(0.5, 80);
    REQUIRE(ev.size() == 80);
    for (std::size_t i = 0; i < ev.size(); ++i) {
        CHECK(std::abs(ev[i].imag()) < 1e-10);
        CHECK(std::abs(ev[i] + ev[ev.size() - 1 - i]) < 1e-9);
    }
    for (double target : {base, 3.0 * base, 5.0 * base}) {
        double best = 1e9;
        for (cplx e : ev) best = std::min(best, std::abs(e - target));
        CHECK(best < 1e-6);
    }
    // at such z the v-sequence solves the homogeneous system
    const JacobiResidual r = jacobi_residual(0.5, base, 40);
    CHECK(std::abs(r.rows[0]) < 1e-10);
    CHECK(r.max_interior() < 1e-10);
    CHECK_THROWS_AS(truncated_eigenvalues(0.5, 0), DomainError);
}

TEST_CASE("largest |sn| on the segment sits at t = K") {
    for (cplx m : {cplx(0.5), cplx(-0.7), cplx(0.3, 0.6), std::polar(1.0, 2.5)}) {
        const SegmentMax best = segment_sn_max(Parameter(m), 2001);
        CHECK(best.u == 1.0);
        CHECK(std::abs(best.value - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(segment_sn_max(Parameter(0.5), 1), DomainError);
}
