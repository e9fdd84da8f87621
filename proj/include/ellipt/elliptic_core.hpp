#pragma once

#include <complex>

#include "ellipt/parameter.hpp"

namespace ellipt {

/// Arithmetic-geometric mean with the optimal branch choice at every step:
/// the sign of sqrt(a_n b_n) is picked so that |a_{n+1} - b_{n+1}| <= |a_{n+1} + b_{n+1}|,
/// ties going to Re(b_{n+1}/a_{n+1}) >= 0. Capped at 64 steps.
cplx agm(cplx a, cplx b);

/// Complete elliptic integral of the first kind, K(m) = pi / (2 agm(1, sqrt(1 - m))).
/// Throws DomainError for real m >= 1.
cplx complete_k(cplx m);

/// K'(m) = K(1 - m). Throws DomainError for real m <= 0.
cplx complete_kprime(cplx m);

/// Cached quantities for one parameter. Immutable once built.
///
/// For a cut parameter K is the one-sided limit selected by the side tag.
/// For m = 1 the context is a limit marker: K is infinite and only
/// limit-aware callers (sigma) accept it.
struct EllipticContext {
    Parameter param{0.0};
    cplx K;
    cplx Kprime;
    cplx tau;     ///< i K'/K
    cplx tau1;    ///< -1/tau
    cplx q;       ///< exp(i pi tau)
    cplx q1;      ///< exp(i pi tau1), the nome of 1 - m
    cplx log_q;   ///< i pi tau; (-inf, 0) when q = 0
    cplx log_q1;  ///< i pi tau1
    bool use_complementary = false;

    bool is_limit() const { return param.is_one(); }
};

EllipticContext build_context(const Parameter& p);

/// Jacobi theta function theta_j(x, q), j = 1..4, from its q-series.
/// Throws DomainError for |q| >= 0.99.
cplx theta(int j, cplx x, cplx q);

namespace detail {

/// Theta series from the log-nome L = i pi tau. For j = 1, 2 the common
/// prefactor 2 q^{1/4} is dropped, so quotients stay finite as q -> 0 and no
/// branch of q^{1/4} has to be chosen.
cplx theta_reduced(int j, cplx x, cplx log_nome);

/// Derivative in x of theta_4(x, q), real nome.
double theta4_prime_real(double x, double q);

}  // namespace detail

}  // namespace ellipt
