#include "karp/region.hpp"

#include "karp/boundary.hpp"

#include <cmath>
#include <numbers>

namespace karp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double arg_in_turns(Complex z) {
    double t = std::arg(z) / kTwoPi;
    if (t < 0) t += 1.0;
    return t;
}

// best rational approximation p/q of x in [0, 1) with q <= max_den, by
// continued fractions; returns false if the approximation error exceeds tol
bool rational_angle(double x, int max_den, double tol, std::int64_t& p_out,
                    std::int64_t& q_out) {
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double a_f = std::floor(frac);
        const auto a = static_cast<std::int64_t>(a_f);
        const std::int64_t p2 = a * p1 + p0;
        const std::int64_t q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double rem = frac - a_f;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return false;
    if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) > tol) return false;
    p_out = p1;
    q_out = q1;
    return true;
}

}  // namespace

MembershipVerdict contains(int n, Complex z, double tol_member) {
    if (n < 1) throw std::invalid_argument("contains: n must be >= 1");
    const double mod = std::abs(z);
    if (mod > 1.0 + 1e-6) return MembershipVerdict{false, 1.0, 1.0 - mod};

    if (n == 1) {
        // Theta_1 = {1}
        const double dist = std::abs(z - Complex(1.0));
        return MembershipVerdict{dist <= tol_member, 1.0, -dist};
    }
    if (mod == 0.0) return MembershipVerdict{true, 1.0, 1.0};

    double theta = std::arg(z);
    if (theta < 0) theta += kTwoPi;
    const BoundaryPoint bp = boundary_point(n, theta);
    const double margin = bp.rho - mod;
    return MembershipVerdict{margin >= -tol_member, bp.rho, margin};
}

int min_order(Complex z, int cap) {
    const double mod = std::abs(z);
    if (mod > 1.0 + 1e-6) throw std::invalid_argument("min_order: |z| exceeds 1");

    if (std::abs(mod - 1.0) <= 1e-9) {
        // unit-circle points are exactly the Farey angles
        std::int64_t p = 0, q = 1;
        if (rational_angle(arg_in_turns(z), cap, 1e-9, p, q))
            return static_cast<int>(q);
        throw NotFoundBelowCap("min_order: unit-circle argument is not p/q with q <= cap");
    }
    for (int n = 1; n <= cap; ++n)
        if (contains(n, z).inside) return n;
    throw NotFoundBelowCap("min_order: no order <= cap admits z");
}

double scale_into(int n, Complex z) {
    const double mod = std::abs(z);
    if (mod == 0.0) throw std::invalid_argument("scale_into: z must be nonzero");
    if (n == 1) return std::abs(z - Complex(1.0)) <= 1e-9 ? 1.0 : 0.0;
    double theta = std::arg(z);
    if (theta < 0) theta += kTwoPi;
    const BoundaryPoint bp = boundary_point(n, theta);
    return std::min(1.0, bp.rho / mod);
}

}  // namespace karp
