#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "ellipt/jacobi.hpp"
#include "ellipt/parameter.hpp"

namespace ellipt {

/// Composite Gauss-Legendre rule on the segment t = 2 K(m) s, s in [0, 1].
struct QuadratureRule {
    int order = 0;
    int panels = 0;
    cplx length;                 ///< 2 K(m)
    std::vector<double> s;       ///< nodes in [0, 1]
    std::vector<double> weight;  ///< weights on [0, 1], summing to 1

    cplx t(std::size_t i) const { return length * s[i]; }
    cplx dt(std::size_t i) const { return length * weight[i]; }
};

/// Gauss-Legendre nodes and weights on [-1, 1] for `order` points.
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

QuadratureRule make_rule(const Parameter& m, int order, int panels);

struct QuadratureSpec {
    int order = 16;
    int panels = 4;
    /// Double the panels until successive values agree to 1e-12 relative
    /// (cap 1024 panels); otherwise a single pass at `panels`.
    bool adaptive = true;
};

/// Integrand over the segment: receives t and the triple sn, cn, dn(t | m)
/// (with u = t / K) and writes one value per component into `out`.
using BatchIntegrand = std::function<void(cplx t, const JacobiTriple& f, std::span<cplx> out)>;
using SegmentIntegrand = std::function<cplx(cplx t, const JacobiTriple& f)>;

/// Integral over [0, 2K(m)] of every component. m must lie in the closed
/// unit disk with m != 1. Throws ConvergenceError at the panel cap.
std::vector<cplx> integrate_segment_batch(const BatchIntegrand& f, std::size_t components, const Parameter& m,
                                          const QuadratureSpec& spec = {});
cplx integrate_segment(const SegmentIntegrand& f, const Parameter& m, const QuadratureSpec& spec = {});

enum class CDKind { C, D };

/// C_l(z; m) = int e^{-zt} cn sn^l dt, D_l(z; m) = int e^{-zt} dn sn^l dt.
cplx cd_integral(CDKind kind, int l, cplx z, const Parameter& m, const QuadratureSpec& spec = {});

struct VSequence {
    cplx z;
    cplx k;
    cplx m;
    std::vector<cplx> entries;  ///< v_1 .. v_{n_max}
};

/// v_{2l+1} = i (-1)^l k^l e^{iKz} C_{2l}(iz), v_{2l+2} = (-1)^{l+1} k^l e^{iKz} D_{2l+1}(iz).
VSequence v_sequence(cplx z, cplx k, int n_max, const QuadratureSpec& spec = {});

/// Off-diagonal a_n of J(k): n for odd n, n k for even n (n >= 1).
cplx jacobi_offdiag(cplx k, int n);

struct JacobiResidual {
    /// ((J - z) v)_n for n = 1 .. n_max - 1; row n_max needs v_{n_max + 1}.
    std::vector<cplx> rows;
    /// rows[0] + 2 cos(K z), zero when the first row matches its right-hand side.
    cplx rhs_check;
    double max_interior() const;
};

JacobiResidual jacobi_residual(cplx k, cplx z, int n_max, const QuadratureSpec& spec = {});

/// Eigenvalues of the leading n x n block of J(k), sorted by real part then
/// imaginary part.
std::vector<cplx> truncated_eigenvalues(cplx k, int n);

enum class SaddleFunction { const_one, square_about_K };

struct AsymptoticRatio {
    int l = 0;
    cplx value;
    cplx prediction;
    cplx ratio;
};

/// I_l(f) = int f(t) sn^l(t) dt against the leading saddle-point term.
std::vector<AsymptoticRatio> saddle_check(SaddleFunction f, const Parameter& m, const std::vector<int>& ls,
                                          const QuadratureSpec& spec = {});

/// C_l or D_l against its leading term, sqrt(2 pi) z e^{-Kz} / (1 - m) l^{-3/2}
/// resp. sqrt(2 pi) e^{-Kz} l^{-1/2}.
std::vector<AsymptoticRatio> cd_asymptotics(CDKind kind, cplx z, const Parameter& m, const std::vector<int>& ls,
                                            const QuadratureSpec& spec = {});

/// Largest |sn(t | m)| over `samples` equispaced points of [0, 2K(m)] and the
/// u = t / K where it occurs.
struct SegmentMax {
    double u = 0.0;
    double value = 0.0;
};
SegmentMax segment_sn_max(const Parameter& m, int samples);

}  // namespace ellipt
