#ifndef KARP_BOUNDARY_HPP
#define KARP_BOUNDARY_HPP

#include "karp/arcs.hpp"
#include "karp/poly.hpp"

#include <stdexcept>
#include <vector>

namespace karp {

/// One point of the boundary of Theta_n.
struct BoundaryPoint {
    double theta = 0.0;      // argument, radians in [0, 2*pi)
    double rho = 0.0;        // modulus; equals rho_hat^{d1}
    double rho_hat = 0.0;    // solved modulus of the ghat root
    double theta_hat = 0.0;  // (theta + 2*pi*l0)/d1
    double alpha = 0.0;      // arc parameter of the carrying Ito polynomial
    Complex value;           // rho * e^{i theta}
    ArcParams params;
};

struct NoSignChange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The scalar boundary function
///   F(rho) = rho^{s1} sin(q d1 tau) - rho^{q d1} sin(s1 tau - 2 pi j/(delta d1))
///            - sin((q d1 - s1) tau + 2 pi j/(delta d1)).
double F_value(const ArcParams& params, std::int64_t j, double rho, double tau);

/// Solve for the boundary point at argument theta strictly inside the pair's
/// sector (arc types I/II/III): bracketed bisection of F on (0, 1] at
/// tau = (theta + 2*pi*l0)/d1 and j = j0, then alpha recovery.
BoundaryPoint solve_rho(const ArcParams& params, double theta, double tol_rho = 1e-13);

/// The unique point of the boundary of Theta_n with argument theta.
/// Dispatches between exact Farey angles (modulus 1), Type 0 chord-ray
/// intersection, and the scalar-equation solver.
BoundaryPoint boundary_point(int n, double theta);

/// boundary_point at m arguments uniform in [0, 2*pi), plus every Farey
/// angle of order n inserted exactly; sorted by theta.
std::vector<BoundaryPoint> sample_boundary(int n, int m);

}  // namespace karp

#endif
