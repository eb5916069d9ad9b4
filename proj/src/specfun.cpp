#include "gsf/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gsf/error.hpp"

namespace gsf {

namespace {

// Relative truncation target of the duplication iteration.
constexpr double kTolerance = 1e-15;
constexpr int kMaxIterations = 100;

double max_abs(ComplexValue a, ComplexValue b, ComplexValue c) {
    return std::max({std::abs(a), std::abs(b), std::abs(c)});
}

// Arguments on the negative real axis are read as the limit from above.
ComplexValue on_upper_lip(double v) { return ComplexValue(v, +0.0); }

}  // namespace

ComplexValue carlson_rf(ComplexValue x, ComplexValue y, ComplexValue z) {
    const ComplexValue a0 = (x + y + z) / 3.0;
    const double q = std::pow(3.0 * kTolerance, -1.0 / 6.0) * max_abs(a0 - x, a0 - y, a0 - z);
    const ComplexValue x0 = x;
    const ComplexValue y0 = y;
    ComplexValue a = a0;
    double scale = 1.0;
    int n = 0;
    while (scale * q >= std::abs(a)) {
        if (++n > kMaxIterations) {
            throw ConvergenceError("carlson_rf: duplication did not converge in " +
                                   std::to_string(kMaxIterations) + " steps");
        }
        const ComplexValue sx = std::sqrt(x);
        const ComplexValue sy = std::sqrt(y);
        const ComplexValue sz = std::sqrt(z);
        const ComplexValue lambda = sx * sy + sx * sz + sy * sz;
        x = (x + lambda) * 0.25;
        y = (y + lambda) * 0.25;
        z = (z + lambda) * 0.25;
        a = (a + lambda) * 0.25;
        scale *= 0.25;
    }
    const ComplexValue xx = (a0 - x0) * scale / a;
    const ComplexValue yy = (a0 - y0) * scale / a;
    const ComplexValue zz = -xx - yy;
    const ComplexValue e2 = xx * yy - zz * zz;
    const ComplexValue e3 = xx * yy * zz;
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(a);
}

ComplexValue carlson_rd(ComplexValue x, ComplexValue y, ComplexValue z) {
    const ComplexValue a0 = (x + y + 3.0 * z) / 5.0;
    const double q = std::pow(0.25 * kTolerance, -1.0 / 6.0) * max_abs(a0 - x, a0 - y, a0 - z);
    const ComplexValue x0 = x;
    const ComplexValue y0 = y;
    ComplexValue a = a0;
    ComplexValue tail(0.0, 0.0);
    double scale = 1.0;
    int n = 0;
    while (scale * q >= std::abs(a)) {
        if (++n > kMaxIterations) {
            throw ConvergenceError("carlson_rd: duplication did not converge in " +
                                   std::to_string(kMaxIterations) + " steps");
        }
        const ComplexValue sx = std::sqrt(x);
        const ComplexValue sy = std::sqrt(y);
        const ComplexValue sz = std::sqrt(z);
        const ComplexValue lambda = sx * sy + sx * sz + sy * sz;
        tail += scale / (sz * (z + lambda));
        x = (x + lambda) * 0.25;
        y = (y + lambda) * 0.25;
        z = (z + lambda) * 0.25;
        a = (a + lambda) * 0.25;
        scale *= 0.25;
    }
    const ComplexValue xx = (a0 - x0) * scale / a;
    const ComplexValue yy = (a0 - y0) * scale / a;
    const ComplexValue zz = -(xx + yy) / 3.0;
    const ComplexValue xy = xx * yy;
    const ComplexValue z2 = zz * zz;
    const ComplexValue e2 = xy - 6.0 * z2;
    const ComplexValue e3 = (3.0 * xy - 8.0 * z2) * zz;
    const ComplexValue e4 = 3.0 * (xy - z2) * z2;
    const ComplexValue e5 = xy * z2 * zz;
    const ComplexValue series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 -
                                3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
    return scale * series / (a * std::sqrt(a)) + 3.0 * tail;
}

ComplexValue elliptic_K(double m) {
    if (!std::isfinite(m)) throw DomainError("elliptic_K: non-finite parameter");
    if (m == 1.0) throw PoleError("elliptic_K: logarithmic pole at m = 1");
    if (m > 1.0) throw DomainError("elliptic_K: m > 1 is not supported");
    return {carlson_rf(0.0, 1.0 - m, 1.0).real(), 0.0};
}

ComplexValue elliptic_E(double m) {
    if (!std::isfinite(m)) throw DomainError("elliptic_E: non-finite parameter");
    if (m == 1.0) return {1.0, 0.0};
    const ComplexValue y = on_upper_lip(1.0 - m);
    const ComplexValue e = carlson_rf(0.0, y, 1.0) - (m / 3.0) * carlson_rd(0.0, y, 1.0);
    if (m < 1.0) return {e.real(), 0.0};
    return e;
}

}  // namespace gsf
