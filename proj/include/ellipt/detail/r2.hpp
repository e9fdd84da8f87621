#pragma once

#include <cmath>

namespace ellipt::detail {

// Additive-recurrence (R2) low-discrepancy points in the unit square.
class R2Sequence {
public:
    explicit R2Sequence(double seed = 0.5) : x_(seed), y_(seed) {}

    void next(double& a, double& b) {
        x_ = frac(x_ + kA1);
        y_ = frac(y_ + kA2);
        a = x_;
        b = y_;
    }

private:
    static double frac(double v) { return v - std::floor(v); }
    // 1/g and 1/g^2 for the plastic number g.
    static constexpr double kA1 = 0.7548776662466927;
    static constexpr double kA2 = 0.5698402909980532;
    double x_, y_;
};

}  // namespace ellipt::detail
