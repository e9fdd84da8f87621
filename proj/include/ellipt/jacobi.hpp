#pragma once

#include <complex>

#include "ellipt/elliptic_core.hpp"
#include "ellipt/parameter.hpp"

namespace ellipt {

/// sn, cn, dn at the argument K(m) u.
struct JacobiTriple {
    cplx s;
    cplx c;
    cplx d;
    double u = 0.0;
    cplx m;
};

/// Evaluates the triple at K(m) u for many u on one context, caching the
/// theta constants. Off the cut the theta quotient is used directly; when the
/// context prefers the complementary nome the imaginary transformation
/// sn(Ku|m) = -i sc(i K u | 1 - m) is applied instead.
class JacobiEvaluator {
public:
    /// Throws DomainError for m = 1 and for cut parameters.
    explicit JacobiEvaluator(const EllipticContext& ctx);

    /// u in [0, 2].
    JacobiTriple operator()(double u) const;

    const EllipticContext& context() const { return ctx_; }

private:
    EllipticContext ctx_;
    cplx log_nome_;
    cplx tau_;
    cplx t2_, t3_, t4_;  // reduced theta_j(0) for the active nome
};

JacobiTriple jacobi_triple(double u, const EllipticContext& ctx);

/// Triple on the branch cut, m real > 1, via the real transformation
/// sn(w|m) = mu^{1/2} sn(w m^{1/2} | mu), cn(w|m) = dn(w m^{1/2} | mu),
/// dn(w|m) = cn(w m^{1/2} | mu), with K(m) m^{1/2} = K(mu) +- i K'(mu).
JacobiTriple cut_triple(double u, const EllipticContext& ctx);

/// sn, cn, dn at the complex argument 2 K x / pi, read straight off the nome
/// series of `ctx` (no complementary switch). Needs |q| < 0.99.
struct ComplexTriple {
    cplx s;
    cplx c;
    cplx d;
};
ComplexTriple theta_argument_triple(const EllipticContext& ctx, cplx x);

enum class RatioKind { sc, nc, dc, sd, cd, ns };

/// Ratio of triple entries at K(m) u. Throws PoleError when the denominator
/// has modulus below 1e-13.
cplx jacobi_ratio(RatioKind kind, double u, const EllipticContext& ctx);
cplx ratio_of(RatioKind kind, const ComplexTriple& t);

/// Same ratio at the complex argument tau K(m) u.
cplx ratio_at_tau(RatioKind kind, double u, const EllipticContext& ctx);

/// Jacobi zeta Z(K(m) u | m) for real m in (0, 1), from the logarithmic
/// derivative of theta_4.
double jacobi_zeta(double u, const EllipticContext& ctx);

enum class SigmaRoute { theta_quotient, cut_formula, limit_at_one };

struct SigmaValue {
    double u = 0.0;
    cplx m;
    double sigma = 0.0;
    SigmaRoute route = SigmaRoute::theta_quotient;
};

/// sigma(u, m) = |sn(K(m) u | m)|, continued to the whole plane: the theta
/// quotient off the cut, the cut formula
///   sigma^2 = mu (s^2 d1^2 + c^2 d^2 s1^2 c1^2) / (1 - d^2 s1^2)^2
/// on it (s, c, d at mu = 1/m and s1, c1, d1 at mu1 = 1 - mu), and exactly 1
/// at m = 1. Accepts u in [0, 2]; u > 1 is folded onto 2 - u.
SigmaValue sigma(double u, const Parameter& m);

/// Squared sigma on the cut from real-parameter triples.
double cut_sigma_squared(double u, double m);

/// Leading-order predictions as m -> 0 (suffix 0) or m -> 1 (suffix 1).
/// The sc0/nc0/dc0 entries refer to the argument tau K(m) u.
enum class AsymKind { sn0, cn0, dn0, sn1, cn1, dn1, sc0, nc0, dc0 };
cplx asym_ref(AsymKind which, double u, cplx m);

}  // namespace ellipt
