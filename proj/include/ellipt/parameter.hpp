#pragma once

#include <complex>
#include <string_view>

namespace ellipt {

using cplx = std::complex<double>;

/// Half-plane from which a point of the branch cut (1, inf) is approached.
enum class Side { none, above, below };

/// Region of the m-plane a parameter belongs to.
///
/// The lens is D1 \ closure(D), i.e. |m - 1| < 1 and |m| > 1, excluding the
/// real points, which are classified as `cut`.
enum class Regime { unit_disk_interior, unit_circle, lens, cut, exterior, one };

std::string_view to_string(Side side);
std::string_view to_string(Regime regime);

/// Regime of `m`, ignoring any side tag.
Regime classify(cplx m);

/// Elliptic parameter m = k^2 together with its cut-side tag.
///
/// Invariant: side() != Side::none exactly when m is real and greater than 1.
/// A real m > 1 constructed without a side is placed on the upper edge.
class Parameter {
public:
    explicit Parameter(cplx m, Side side = Side::none);
    Parameter(double m) : Parameter(cplx(m, 0.0)) {}  // NOLINT(google-explicit-constructor)

    cplx m() const { return m_; }
    Side side() const { return side_; }
    Regime regime() const { return regime_; }

    /// m1 = 1 - m
    cplx complement() const { return 1.0 - m_; }
    /// mu = 1 / m
    cplx reciprocal() const { return 1.0 / m_; }
    /// mu1 = 1 - 1/m, computed as (m - 1)/m
    cplx reciprocal_complement() const { return (m_ - 1.0) / m_; }

    bool on_cut() const { return regime_ == Regime::cut; }
    bool is_one() const { return regime_ == Regime::one; }

    /// Parameter at conj(m); a cut point keeps its value and switches side.
    Parameter conjugate() const;

private:
    cplx m_;
    Side side_;
    Regime regime_;
};

}  // namespace ellipt
