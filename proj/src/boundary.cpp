#include "karp/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace karp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double theta) {
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0) theta += kTwoPi;
    return theta;
}

// Chord from 1 to e^{i omega}: its intersection with the ray at argument
// theta is (1 - alpha) + alpha e^{i omega} with
// alpha = sin(theta) / (sin(theta) + sin(omega - theta)).
BoundaryPoint type0_chord(int n, double theta, const ArcParams& params) {
    const double omega = kTwoPi / n;
    const double s0 = std::sin(theta);
    const double s1 = std::sin(omega - theta);
    const double alpha = s0 / (s0 + s1);
    const Complex z = (1.0 - alpha) + alpha * std::polar(1.0, omega);
    BoundaryPoint bp;
    bp.theta = theta;
    bp.rho = std::abs(z);
    bp.rho_hat = bp.rho;
    bp.theta_hat = theta;
    bp.alpha = alpha;
    bp.value = std::polar(bp.rho, theta);
    bp.params = params;
    return bp;
}

}  // namespace

double F_value(const ArcParams& params, std::int64_t j, double rho, double tau) {
    const double phase = kTwoPi * static_cast<double>(j) /
                         static_cast<double>(params.delta * params.d1);
    const double qd1 = static_cast<double>(params.q * params.d1);
    const double s1 = static_cast<double>(params.s1);
    return std::pow(rho, s1) * std::sin(qd1 * tau) -
           std::pow(rho, qd1) * std::sin(s1 * tau - phase) -
           std::sin((qd1 - s1) * tau + phase);
}

BoundaryPoint solve_rho(const ArcParams& params, double theta, double tol_rho) {
    if (params.type == ArcType::Type0)
        throw std::invalid_argument("solve_rho: Type 0 arcs use the chord construction");
    theta = reduce_angle(theta);
    const double theta_hat =
        (theta + kTwoPi * static_cast<double>(params.l0)) / static_cast<double>(params.d1);

    auto f = [&](double rho) { return F_value(params, params.j0, rho, theta_hat); };
    double a = 1e-15, b = 1.0;
    double fa = f(a), fb = f(b);
    double rho_hat;
    if (fa == 0.0) {
        rho_hat = a;
    } else if (fb == 0.0) {
        rho_hat = b;
    } else if (std::signbit(fa) == std::signbit(fb)) {
        throw NoSignChange("solve_rho: F has no sign change on (0, 1] at theta=" +
                           std::to_string(theta));
    } else {
        while (b - a > tol_rho) {
            const double mid = 0.5 * (a + b);
            const double fm = f(mid);
            if (fm == 0.0) {
                a = b = mid;
                break;
            }
            if (std::signbit(fm) == std::signbit(fa)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        rho_hat = 0.5 * (a + b);
    }

    const double phase = kTwoPi * static_cast<double>(params.j0) /
                         static_cast<double>(params.delta * params.d1);
    const double qd1 = static_cast<double>(params.q * params.d1);
    const double s1 = static_cast<double>(params.s1);
    double alpha = std::pow(rho_hat, s1) * std::sin(qd1 * theta_hat) /
                   std::sin((qd1 - s1) * theta_hat + phase);
    alpha = std::clamp(alpha, 0.0, 1.0);

    BoundaryPoint bp;
    bp.theta = theta;
    bp.rho_hat = rho_hat;
    bp.theta_hat = theta_hat;
    bp.rho = std::pow(rho_hat, static_cast<double>(params.d1));
    bp.alpha = alpha;
    bp.value = std::polar(bp.rho, theta);
    bp.params = params;
    return bp;
}

BoundaryPoint boundary_point(int n, double theta) {
    if (n < 2) throw std::invalid_argument("boundary_point: n must be >= 2");
    theta = reduce_angle(theta);
    const SectorLocation loc = bracketing_pair(n, theta);

    if (const Fraction* f = std::get_if<Fraction>(&loc)) {
        // unit-circle contact point; attach the arc to its right
        const std::vector<Fraction> seq = farey_sequence(n);
        const auto it = std::find(seq.begin(), seq.end(), *f);
        const Fraction next = (it + 1 == seq.end()) ? Fraction(1, 1) : *(it + 1);
        const FareyPair arc{*f, next, n};
        BoundaryPoint bp;
        bp.theta = theta;
        bp.rho = 1.0;
        bp.rho_hat = 1.0;
        bp.value = std::polar(1.0, theta);
        bp.params = arc_params(arc, n);
        // alpha = 0 at the smaller-denominator endpoint of its arc, 1 at the other
        bp.alpha = (f->q == bp.params.q && f->p == bp.params.p) ? 0.0 : 1.0;
        bp.theta_hat = (theta + kTwoPi * static_cast<double>(bp.params.l0)) /
                       static_cast<double>(bp.params.d1);
        return bp;
    }

    const FareyPair pair = std::get<FareyPair>(loc);
    const ArcParams params = arc_params(pair, n);
    if (params.type == ArcType::Type0) {
        if (pair.left == Fraction(0, 1)) return type0_chord(n, theta, params);
        // reflected sector ((n-1)/n, 1/1): conjugate of the direct chord
        BoundaryPoint bp = type0_chord(n, kTwoPi - theta, params);
        bp.theta = theta;
        bp.theta_hat = theta;
        bp.value = std::polar(bp.rho, theta);
        return bp;
    }
    return solve_rho(params, theta);
}

std::vector<BoundaryPoint> sample_boundary(int n, int m) {
    if (m < 3) throw std::invalid_argument("sample_boundary: m must be >= 3");
    std::vector<double> thetas;
    thetas.reserve(static_cast<std::size_t>(m) + 64);
    for (int k = 0; k < m; ++k) thetas.push_back(kTwoPi * k / m);
    for (const Fraction& f : farey_sequence(n))
        if (!(f == Fraction(1, 1))) thetas.push_back(f.angle());
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());

    std::vector<BoundaryPoint> out;
    out.reserve(thetas.size());
    for (double t : thetas) out.push_back(boundary_point(n, t));
    return out;
}

}  // namespace karp
