#pragma once

#include <complex>

namespace gsf {

using ComplexValue = std::complex<double>;

/// Carlson's symmetric integral R_F(x, y, z). Arguments may be complex but
/// must lie in the plane cut along the negative real axis (a value on the cut
/// is taken as the limit from above, i.e. sqrt(-a) = +i sqrt(a)). At most one
/// argument may be zero.
ComplexValue carlson_rf(ComplexValue x, ComplexValue y, ComplexValue z);

/// Carlson's symmetric integral R_D(x, y, z); z must be nonzero.
ComplexValue carlson_rd(ComplexValue x, ComplexValue y, ComplexValue z);

/// Complete elliptic integral of the first kind K(m) = int_0^{pi/2} (1 - m sin^2)^(-1/2).
/// Defined for m < 1 (real result). Throws PoleError at m = 1 and DomainError for m > 1.
ComplexValue elliptic_K(double m);

/// Complete elliptic integral of the second kind E(m) = int_0^{pi/2} (1 - m sin^2)^(1/2).
/// Real for m <= 1. For m > 1 the integrand is continued with sqrt(-a) = +i sqrt(a),
/// so Im E(m) = int over {m sin^2 > 1} of sqrt(m sin^2 - 1) > 0.
ComplexValue elliptic_E(double m);

}  // namespace gsf
