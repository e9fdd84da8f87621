#include "ellipt/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <numbers>

#include "ellipt/detail/parallel.hpp"
#include "ellipt/elliptic_core.hpp"
#include "ellipt/errors.hpp"

namespace ellipt {

namespace {

constexpr int kPanelCap = 1024;
constexpr double kRelativeTolerance = 1e-12;
const cplx kI(0.0, 1.0);
const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

void check_segment_parameter(const Parameter& m) {
    if (m.is_one() || std::abs(m.m()) > 1.0 + 1e-12) {
        throw DomainError("segment integrals need m in the closed unit disk, m != 1");
    }
}

void check_modulus(cplx k) {
    if (std::abs(k) > 1.0 + 1e-12 || k == 1.0 || k == -1.0) {
        throw DomainError("k must lie in the closed unit disk, k != +-1");
    }
}

cplx ipow(cplx base, int e) {
    cplx out = 1.0;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

struct PassResult {
    std::vector<cplx> value;
    std::vector<double> magnitude;  // integral of |f|
};

PassResult run_pass(const BatchIntegrand& f, std::size_t components, const JacobiEvaluator& ev,
                    const QuadratureRule& rule) {
    const auto per_panel = static_cast<std::size_t>(rule.order);
    const auto panels = static_cast<std::size_t>(rule.panels);
    std::vector<cplx> partial(panels * components);
    std::vector<double> partial_abs(panels * components);
    detail::parallel_for(panels, [&](std::size_t p) {
        std::vector<cplx> scratch(components);
        for (std::size_t i = p * per_panel; i < (p + 1) * per_panel; ++i) {
            const cplx t = rule.t(i);
            const JacobiTriple triple = ev(2.0 * rule.s[i]);
            f(t, triple, scratch);
            const cplx dt = rule.dt(i);
            for (std::size_t j = 0; j < components; ++j) {
                partial[p * components + j] += scratch[j] * dt;
                partial_abs[p * components + j] += std::abs(scratch[j] * dt);
            }
        }
    });
    PassResult out{std::vector<cplx>(components), std::vector<double>(components)};
    for (std::size_t p = 0; p < panels; ++p) {
        for (std::size_t j = 0; j < components; ++j) {
            out.value[j] += partial[p * components + j];
            out.magnitude[j] += partial_abs[p * components + j];
        }
    }
    return out;
}

}  // namespace

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    if (order < 1) throw DomainError("gauss_legendre: order must be positive");
    const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(order);
    nodes.clear();
    for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
        if (*it != 0.0) nodes.push_back(-*it);
    }
    for (double x : zeros) nodes.push_back(x);
    weights.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double x = nodes[i];
        const double dp = boost::math::legendre_p_prime(order, x);
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

QuadratureRule make_rule(const Parameter& m, int order, int panels) {
    check_segment_parameter(m);
    if (panels < 1) throw DomainError("make_rule: panels must be positive");
    std::vector<double> x;
    std::vector<double> w;
    gauss_legendre(order, x, w);
    QuadratureRule rule;
    rule.order = order;
    rule.panels = panels;
    rule.length = 2.0 * build_context(m).K;
    rule.s.reserve(static_cast<std::size_t>(order) * panels);
    rule.weight.reserve(rule.s.capacity());
    for (int p = 0; p < panels; ++p) {
        for (int i = 0; i < order; ++i) {
            rule.s.push_back((p + 0.5 * (x[i] + 1.0)) / panels);
            rule.weight.push_back(0.5 * w[i] / panels);
        }
    }
    return rule;
}

std::vector<cplx> integrate_segment_batch(const BatchIntegrand& f, std::size_t components, const Parameter& m,
                                          const QuadratureSpec& spec) {
    check_segment_parameter(m);
    if (spec.panels < 1 || spec.panels > kPanelCap) throw DomainError("integrate_segment: bad panel count");
    const JacobiEvaluator ev(build_context(m));
    int panels = spec.panels;
    PassResult prev = run_pass(f, components, ev, make_rule(m, spec.order, panels));
    if (!spec.adaptive) return prev.value;
    while (panels * 2 <= kPanelCap) {
        panels *= 2;
        PassResult cur = run_pass(f, components, ev, make_rule(m, spec.order, panels));
        bool done = true;
        for (std::size_t j = 0; j < components && done; ++j) {
            const double scale = std::max(std::abs(cur.value[j]), cur.magnitude[j]);
            done = std::abs(cur.value[j] - prev.value[j]) <= kRelativeTolerance * scale;
        }
        if (done) return cur.value;
        prev = std::move(cur);
    }
    throw ConvergenceError("integrate_segment: no convergence at 1024 panels");
}

cplx integrate_segment(const SegmentIntegrand& f, const Parameter& m, const QuadratureSpec& spec) {
    return integrate_segment_batch([&](cplx t, const JacobiTriple& tr, std::span<cplx> out) { out[0] = f(t, tr); },
                                   1, m, spec)[0];
}

cplx cd_integral(CDKind kind, int l, cplx z, const Parameter& m, const QuadratureSpec& spec) {
    if (l < 0) throw DomainError("cd_integral: l must be non-negative");
    return integrate_segment(
        [&](cplx t, const JacobiTriple& tr) {
            return std::exp(-z * t) * (kind == CDKind::C ? tr.c : tr.d) * ipow(tr.s, l);
        },
        m, spec);
}

VSequence v_sequence(cplx z, cplx k, int n_max, const QuadratureSpec& spec) {
    check_modulus(k);
    if (n_max < 1) throw DomainError("v_sequence: n_max must be positive");
    const cplx m = k * k;
    const Parameter param(m);
    const cplx K = build_context(param).K;
    const cplx iz = kI * z;
    const auto n = static_cast<std::size_t>(n_max);

    // Component j (entry v_{j+1}) integrates e^{-iz t} sn^j times cn for even j, dn for odd j.
    const std::vector<cplx> raw = integrate_segment_batch(
        [&](cplx t, const JacobiTriple& tr, std::span<cplx> out) {
            cplx power = std::exp(-iz * t);
            for (std::size_t j = 0; j < n; ++j) {
                out[j] = power * (j % 2 == 0 ? tr.c : tr.d);
                power *= tr.s;
            }
        },
        n, param, spec);

    VSequence seq{z, k, m, std::vector<cplx>(n)};
    const cplx phase = std::exp(kI * K * z);
    cplx k_power = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t l = j / 2;
        const double sign = l % 2 == 0 ? 1.0 : -1.0;
        if (j % 2 == 0) {
            seq.entries[j] = kI * sign * k_power * phase * raw[j];
        } else {
            seq.entries[j] = -sign * k_power * phase * raw[j];
            k_power *= k;
        }
    }
    return seq;
}

cplx jacobi_offdiag(cplx k, int n) { return n % 2 == 1 ? cplx(n) : static_cast<double>(n) * k; }

double JacobiResidual::max_interior() const {
    double out = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) out = std::max(out, std::abs(rows[i]));
    return out;
}

JacobiResidual jacobi_residual(cplx k, cplx z, int n_max, const QuadratureSpec& spec) {
    if (n_max < 3) throw DomainError("jacobi_residual: n_max must be at least 3");
    const VSequence seq = v_sequence(z, k, n_max, spec);
    const std::vector<cplx>& v = seq.entries;
    JacobiResidual out;
    for (int n = 1; n < n_max; ++n) {
        cplx row = jacobi_offdiag(k, n) * v[n] - z * v[n - 1];
        if (n >= 2) row += jacobi_offdiag(k, n - 1) * v[n - 2];
        out.rows.push_back(row);
    }
    const cplx K = build_context(Parameter(seq.m)).K;
    out.rhs_check = out.rows[0] + 2.0 * std::cos(K * z);
    return out;
}

std::vector<cplx> truncated_eigenvalues(cplx k, int n) {
    if (n < 1) throw DomainError("truncated_eigenvalues: n must be positive");
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        J(i, i + 1) = jacobi_offdiag(k, i + 1);
        J(i + 1, i) = jacobi_offdiag(k, i + 1);
    }
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(J, false);
    if (solver.info() != Eigen::Success) throw ConvergenceError("truncated_eigenvalues: eigen solver failed");
    std::vector<cplx> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

namespace {

std::vector<AsymptoticRatio> power_ratios(const std::function<cplx(cplx, const JacobiTriple&)>& weight,
                                          const std::function<cplx(int)>& prediction, const Parameter& m,
                                          const std::vector<int>& ls, const QuadratureSpec& spec) {
    for (int l : ls) {
        if (l < 1) throw DomainError("asymptotic checks need l >= 1");
    }
    const std::vector<cplx> values = integrate_segment_batch(
        [&](cplx t, const JacobiTriple& tr, std::span<cplx> out) {
            const cplx w = weight(t, tr);
            for (std::size_t j = 0; j < ls.size(); ++j) out[j] = w * ipow(tr.s, ls[j]);
        },
        ls.size(), m, spec);
    std::vector<AsymptoticRatio> out;
    for (std::size_t j = 0; j < ls.size(); ++j) {
        const cplx p = prediction(ls[j]);
        out.push_back({ls[j], values[j], p, values[j] / p});
    }
    return out;
}

}  // namespace

std::vector<AsymptoticRatio> saddle_check(SaddleFunction f, const Parameter& m, const std::vector<int>& ls,
                                          const QuadratureSpec& spec) {
    check_segment_parameter(m);
    const cplx K = build_context(m).K;
    const cplx m1 = 1.0 - m.m();
    if (f == SaddleFunction::const_one) {
        return power_ratios([](cplx, const JacobiTriple&) { return cplx(1.0); },
                            [&](int l) { return kSqrt2Pi / std::sqrt(m1) / std::sqrt(static_cast<double>(l)); },
                            m, ls, spec);
    }
    return power_ratios([&](cplx t, const JacobiTriple&) { return (t - K) * (t - K); },
                        [&](int l) {
                            return kSqrt2Pi / 2.0 * 2.0 / (m1 * std::sqrt(m1)) / std::pow(l, 1.5);
                        },
                        m, ls, spec);
}

std::vector<AsymptoticRatio> cd_asymptotics(CDKind kind, cplx z, const Parameter& m, const std::vector<int>& ls,
                                            const QuadratureSpec& spec) {
    check_segment_parameter(m);
    const cplx K = build_context(m).K;
    const cplx decay = std::exp(-K * z);
    if (kind == CDKind::C) {
        if (z == 0.0) throw DomainError("cd_asymptotics: the C leading term vanishes at z = 0");
        return power_ratios([&](cplx t, const JacobiTriple& tr) { return std::exp(-z * t) * tr.c; },
                            [&](int l) { return kSqrt2Pi * z * decay / (1.0 - m.m()) / std::pow(l, 1.5); }, m,
                            ls, spec);
    }
    return power_ratios([&](cplx t, const JacobiTriple& tr) { return std::exp(-z * t) * tr.d; },
                        [&](int l) { return kSqrt2Pi * decay / std::sqrt(static_cast<double>(l)); }, m, ls, spec);
}

SegmentMax segment_sn_max(const Parameter& m, int samples) {
    check_segment_parameter(m);
    if (samples < 2) throw DomainError("segment_sn_max: need at least two samples");
    const JacobiEvaluator ev(build_context(m));
    SegmentMax best;
    for (int i = 0; i < samples; ++i) {
        const double u = 2.0 * i / (samples - 1);
        const double v = std::abs(ev(u).s);
        if (v > best.value) best = {u, v};
    }
    return best;
}

}  // namespace ellipt
