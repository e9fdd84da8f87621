#include "ellipt/parameter.hpp"

#include <cmath>
#include <limits>

#include "ellipt/errors.hpp"

namespace ellipt {

namespace {
// |m| within a few ulps of 1 counts as the unit circle; e^{4i theta} is
// never exactly unimodular in floating point.
constexpr double kCircleTolerance = 8.0 * std::numeric_limits<double>::epsilon();
}  // namespace

std::string_view to_string(Side side) {
    switch (side) {
        case Side::none: return "none";
        case Side::above: return "above";
        case Side::below: return "below";
    }
    return "?";
}

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::unit_disk_interior: return "unit_disk_interior";
        case Regime::unit_circle: return "unit_circle";
        case Regime::lens: return "lens";
        case Regime::cut: return "cut";
        case Regime::exterior: return "exterior";
        case Regime::one: return "one";
    }
    return "?";
}

Regime classify(cplx m) {
    if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
        throw DomainError("parameter must be finite");
    }
    if (m == cplx(1.0, 0.0)) return Regime::one;
    if (m.imag() == 0.0 && m.real() > 1.0) return Regime::cut;
    const double r = std::abs(m);
    if (std::abs(r - 1.0) <= kCircleTolerance) return Regime::unit_circle;
    if (r < 1.0) return Regime::unit_disk_interior;
    if (std::abs(m - 1.0) < 1.0) return Regime::lens;
    return Regime::exterior;
}

Parameter::Parameter(cplx m, Side side) : m_(m), side_(side), regime_(classify(m)) {
    if (regime_ == Regime::cut) {
        if (side_ == Side::none) side_ = Side::above;
    } else if (side_ != Side::none) {
        throw DomainError("a cut side only applies to real m > 1");
    }
    // Normalise -0.0 so that the signed zero never selects a branch.
    if (m_.imag() == 0.0) m_ = cplx(m_.real(), 0.0);
}

Parameter Parameter::conjugate() const {
    if (regime_ == Regime::cut) {
        return Parameter(m_, side_ == Side::above ? Side::below : Side::above);
    }
    return Parameter(std::conj(m_));
}

}  // namespace ellipt
