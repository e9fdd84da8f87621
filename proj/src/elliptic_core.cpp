#include "ellipt/elliptic_core.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ellipt/errors.hpp"

namespace ellipt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr int kAgmCap = 64;
constexpr int kThetaCap = 64;
const double kMaxLogNome = std::log(0.99);
const cplx kI(0.0, 1.0);

bool real_at_least_one(cplx m) { return m.imag() == 0.0 && m.real() >= 1.0; }

}  // namespace

cplx agm(cplx a, cplx b) {
    if (a == 0.0 && b == 0.0) throw DomainError("agm: both arguments are zero");
    if (a == 0.0 || b == 0.0) return 0.0;
    const cplx ratio = b / a;
    if (ratio.imag() == 0.0 && ratio.real() < 0.0) {
        throw ConvergenceError("agm: branch pathology, b/a is real negative");
    }
    for (int n = 0; n < kAgmCap; ++n) {
        if (std::abs(a - b) <= 4.0 * kEps * std::abs(a)) return 0.5 * (a + b);
        const cplx next_a = 0.5 * (a + b);
        cplx next_b = std::sqrt(a * b);
        const double minus = std::abs(next_a - next_b);
        const double plus = std::abs(next_a + next_b);
        if (minus > plus || (minus == plus && (next_b / next_a).real() < 0.0)) next_b = -next_b;
        a = next_a;
        b = next_b;
    }
    throw ConvergenceError("agm: no convergence within 64 steps");
}

cplx complete_k(cplx m) {
    if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) throw DomainError("complete_k: m not finite");
    if (real_at_least_one(m)) throw DomainError("complete_k: m lies on [1, inf)");
    return kPi / (2.0 * agm(1.0, std::sqrt(1.0 - m)));
}

cplx complete_kprime(cplx m) {
    if (m.imag() == 0.0 && m.real() <= 0.0) throw DomainError("complete_kprime: m lies on (-inf, 0]");
    return complete_k(1.0 - m);
}

EllipticContext build_context(const Parameter& p) {
    EllipticContext ctx;
    ctx.param = p;
    const cplx m = p.m();
    constexpr double inf = std::numeric_limits<double>::infinity();

    if (p.is_one()) {
        ctx.K = inf;
        ctx.Kprime = kPi / 2.0;
        ctx.tau = 0.0;
        ctx.tau1 = cplx(0.0, inf);
        ctx.q = 1.0;
        ctx.q1 = 0.0;
        ctx.log_q = 0.0;
        ctx.log_q1 = cplx(-inf, 0.0);
        ctx.use_complementary = true;
        return ctx;
    }
    if (m == 0.0) {
        ctx.K = kPi / 2.0;
        ctx.Kprime = inf;
        ctx.tau = cplx(0.0, inf);
        ctx.tau1 = 0.0;
        ctx.q = 0.0;
        ctx.q1 = 1.0;
        ctx.log_q = cplx(-inf, 0.0);
        ctx.log_q1 = 0.0;
        ctx.use_complementary = false;
        return ctx;
    }

    if (p.on_cut()) {
        // K(m +- i0) = mu^{1/2} [K(mu) +- i K'(mu)], mu = 1/m.
        const double mu = 1.0 / m.real();
        const double mu1 = (m.real() - 1.0) / m.real();
        const double sign = p.side() == Side::below ? -1.0 : 1.0;
        ctx.K = std::sqrt(mu) * (complete_k(mu) + sign * kI * complete_k(mu1));
        ctx.Kprime = complete_k(1.0 - m);
    } else if (m.imag() == 0.0 && m.real() < 0.0) {
        // K(1 - m) sits on its own cut here; take the limit from Im m > 0.
        ctx.K = complete_k(m);
        ctx.Kprime = complete_k(1.0 / (1.0 - m)) / std::sqrt(1.0 - m) - kI * ctx.K;
    } else {
        ctx.K = complete_k(m);
        ctx.Kprime = complete_k(1.0 - m);
    }

    ctx.tau = kI * ctx.Kprime / ctx.K;
    ctx.tau1 = kI * ctx.K / ctx.Kprime;
    ctx.log_q = kI * kPi * ctx.tau;
    ctx.log_q1 = kI * kPi * ctx.tau1;
    ctx.q = std::exp(ctx.log_q);
    ctx.q1 = std::exp(ctx.log_q1);
    if (m.imag() == 0.0 && m.real() < 1.0) ctx.q = cplx(ctx.q.real(), 0.0);
    ctx.use_complementary = std::abs(ctx.q) > 0.5 && std::abs(ctx.q1) <= std::abs(ctx.q);
    return ctx;
}

namespace detail {

cplx theta_reduced(int j, cplx x, cplx log_nome) {
    if (j < 1 || j > 4) throw DomainError("theta: index must be 1..4");
    if (log_nome.real() == -std::numeric_limits<double>::infinity()) {
        switch (j) {
            case 1: return std::sin(x);
            case 2: return std::cos(x);
            default: return 1.0;
        }
    }
    if (!(log_nome.real() < kMaxLogNome)) throw DomainError("theta: |q| >= 0.99, use the complementary nome");

    const bool odd = j <= 2;
    cplx sum = 0.0;
    double envelope = 0.0;
    double previous = std::numeric_limits<double>::infinity();
    for (int n = 0; n < kThetaCap; ++n) {
        cplx term;
        double bound;
        if (odd) {
            // q^{n(n+1)} sin|cos((2n+1)x), written as exponentials so that a
            // large |Im x| is absorbed by the decaying power before overflow.
            const double power = double(n) * double(n + 1);
            const cplx kx = kI * double(2 * n + 1) * x;
            const cplx up = std::exp(log_nome * power + kx);
            const cplx down = std::exp(log_nome * power - kx);
            term = j == 1 ? (up - down) / (2.0 * kI) : 0.5 * (up + down);
            if (j == 1 && (n % 2 == 1)) term = -term;
            bound = 0.5 * (std::abs(up) + std::abs(down));
        } else if (n == 0) {
            term = 1.0;
            bound = 1.0;
        } else {
            const double power = double(n) * double(n);
            const cplx kx = kI * double(2 * n) * x;
            const cplx up = std::exp(log_nome * power + kx);
            const cplx down = std::exp(log_nome * power - kx);
            term = up + down;
            if (j == 4 && (n % 2 == 1)) term = -term;
            bound = std::abs(up) + std::abs(down);
        }
        sum += term;
        envelope += bound;
        if (n > 0 && bound <= kEps * envelope && bound <= previous) return sum;
        previous = bound;
    }
    throw ConvergenceError("theta: series did not converge within 64 terms");
}

double theta4_prime_real(double x, double q) {
    if (!(std::abs(q) < 0.99)) throw DomainError("theta4': |q| >= 0.99");
    double sum = 0.0;
    double envelope = 0.0;
    double qn2 = q;  // q^{n^2}
    for (int n = 1; n <= kThetaCap; ++n) {
        const double term = -4.0 * n * qn2 * std::sin(2.0 * n * x);
        const double bound = 4.0 * n * std::abs(qn2);
        sum += (n % 2 == 1) ? -term : term;
        envelope += bound;
        if (bound <= kEps * envelope || qn2 == 0.0) return sum;
        qn2 *= std::pow(q, 2 * n + 1);
    }
    throw ConvergenceError("theta4': series did not converge within 64 terms");
}

}  // namespace detail

cplx theta(int j, cplx x, cplx q) {
    if (j < 1 || j > 4) throw DomainError("theta: index must be 1..4");
    if (!(std::abs(q) < 0.99)) throw DomainError("theta: |q| >= 0.99, use the complementary nome");
    if (q == 0.0) {
        if (j <= 2) return 0.0;
        return 1.0;
    }
    const cplx log_nome = std::log(q);
    const cplx reduced = detail::theta_reduced(j, x, log_nome);
    if (j <= 2) return 2.0 * std::exp(0.25 * log_nome) * reduced;
    return reduced;
}

}  // namespace ellipt
