#pragma once

#include <complex>
#include <string_view>

#include "ellipt/parameter.hpp"

namespace ellipt {

/// Closed-form identities used to cross-check the theta pipeline. Each one
/// is evaluated twice: `lhs` through the main pipeline, `rhs` through the
/// identity's explicit right-hand side built from real-parameter values.
enum class OracleId {
    unit_circle_sn2,   ///< sn^2 on |m| = 1 via cn at real parameter cos^2(theta)
    d1_boundary_sn4,   ///< |sn|^4 on |m - 1| = 1 via the double argument at sin^2(theta)
    landen_recursion,  ///< theta quotient vs. descending Landen (AGM) recursion, m in (0, 1)
    fourier_ratio_sc,  ///< sc(tau K u) vs. its exponential Fourier series
    fourier_ratio_nc,
    fourier_ratio_dc,
    cut_continuation,  ///< addition-formula value on the cut vs. the real transformation
};

std::string_view to_string(OracleId id);

struct OraclePair {
    cplx lhs;
    cplx rhs;
    double error() const { return std::abs(lhs - rhs); }
};

/// `p` is the angle theta in (0, pi/4] for the two circle identities (the
/// point is m = e^{4i theta}, resp. m = 1 - e^{-4i theta}); otherwise it is
/// the parameter m. `side` only matters for cut_continuation.
OraclePair oracle_eval(OracleId id, double u, cplx p, Side side = Side::none);

/// sn, cn, dn(w | m) for real w and m in [0, 1), by the descending Landen
/// transformation driven by the AGM. Independent of the theta series.
struct RealTriple {
    double s, c, d;
};
RealTriple landen_sncndn(double w, double m);

/// sn(K(m) u | m) on the cut from the addition formula
///   mu^{1/2} (s d1 +- i c d s1 c1) / (1 - d^2 s1^2),
/// s, c, d at mu = 1/m and s1, c1, d1 at 1 - mu; the sign follows the side.
cplx cut_sn_addition(double u, const Parameter& p);

/// Exponential-form Fourier series of sc, nc, dc at tau K(m) u, truncated at
/// `terms` terms. Requires |q| < 0.9.
cplx fourier_sc_at_tau(double u, cplx m, int terms = 20);
cplx fourier_nc_at_tau(double u, cplx m, int terms = 20);
cplx fourier_dc_at_tau(double u, cplx m, int terms = 20);

}  // namespace ellipt
