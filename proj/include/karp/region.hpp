#ifndef KARP_REGION_HPP
#define KARP_REGION_HPP

#include "karp/poly.hpp"

#include <stdexcept>

namespace karp {

struct MembershipVerdict {
    bool inside = false;
    double boundary_modulus = 0.0;
    double margin = 0.0;  // boundary_modulus - |z|
};

struct NotFoundBelowCap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Radial membership test for Theta_n.  Theta_n is star-shaped with respect
/// to the origin, so z is inside iff |z| does not exceed the boundary modulus
/// at arg z (up to tol_member).  Points with |z| > 1 + 1e-6 are rejected
/// immediately.
MembershipVerdict contains(int n, Complex z, double tol_member = 1e-9);

/// Smallest n <= cap with z in Theta_n.  Points on the unit circle are
/// resolved exactly: they belong to some Theta_n iff their argument is a
/// rational multiple of 2*pi, and then the minimal order is the denominator.
/// Throws NotFoundBelowCap if no order up to cap admits z.
int min_order(Complex z, int cap = 1000);

/// Largest c in [0, 1] with c*z in Theta_n, i.e. min(1, boundary_modulus/|z|).
double scale_into(int n, Complex z);

}  // namespace karp

#endif
