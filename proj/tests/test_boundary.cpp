#include "karp/boundary.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace karp;

namespace {

constexpr double kPi = std::numbers::pi;

ArcParams params_at(int n, double theta) {
    const auto loc = bracketing_pair(n, theta);
    return arc_params(std::get<FareyPair>(loc), n);
}

}  // namespace

TEST_CASE("F_value reproduces the worked scalar equations") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ur(0.05, 1.0);
    std::uniform_real_distribution<double> ut(0.2, 2.8);

    // n = 5, sector (pi/2, 2 pi/3): rho^4 sin 3t - rho^3 sin 4t + sin t
    const ArcParams ap5 = params_at(5, 7 * kPi / 12);
    // n = 6, same sector: rho^2 sin 3t + rho^3 sin 2t + sin t
    const ArcParams ap6 = params_at(6, 7 * kPi / 12);
    for (int k = 0; k < 20; ++k) {
        const double rho = ur(rng), t = ut(rng);
        const double w5 = std::pow(rho, 4) * std::sin(3 * t) - std::pow(rho, 3) * std::sin(4 * t) +
                          std::sin(t);
        CHECK(F_value(ap5, ap5.j0, rho, t) == doctest::Approx(w5).epsilon(1e-12));
        const double w6 = rho * rho * std::sin(3 * t) + std::pow(rho, 3) * std::sin(2 * t) +
                          std::sin(t);
        CHECK(F_value(ap6, ap6.j0, rho, t) == doctest::Approx(w6).epsilon(1e-12));
    }
}

TEST_CASE("solved moduli match independently computed references") {
    const BoundaryPoint b5 = boundary_point(5, 7 * kPi / 12);
    CHECK(b5.rho == doctest::Approx(0.8675221204970268).epsilon(1e-11));
    CHECK(b5.alpha == doctest::Approx(0.4146326084865226).epsilon(1e-9));
    CHECK(b5.rho < 0.9);

    const BoundaryPoint b6 = boundary_point(6, 7 * kPi / 12);
    CHECK(b6.rho == doctest::Approx(0.9114159452656426).epsilon(1e-11));
    CHECK(b6.alpha == doctest::Approx(0.6080992512900204).epsilon(1e-9));
    CHECK(b6.rho > 0.9);

    const BoundaryPoint b12 = boundary_point(12, 0.63 * kPi);
    CHECK(b12.rho == doctest::Approx(0.9848327361340400).epsilon(1e-11));
    CHECK(b12.alpha == doctest::Approx(0.5938538997610340).epsilon(1e-9));
    CHECK(b12.params.q == 3);
    CHECK(b12.params.s == 10);
}

TEST_CASE("chord points and unit-circle contacts") {
    const BoundaryPoint b4 = boundary_point(4, kPi / 4);
    CHECK(std::abs(b4.value - Complex(0.5, 0.5)) < 1e-12);
    CHECK(b4.alpha == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(b4.params.type == ArcType::Type0);

    const BoundaryPoint b6 = boundary_point(6, 2 * kPi / 3);
    CHECK(b6.rho == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(b6.value - std::polar(1.0, 2 * kPi / 3)) < 1e-12);

    // the reflected chord sector, below the real axis
    const BoundaryPoint br = boundary_point(4, 2 * kPi - kPi / 4);
    CHECK(std::abs(br.value - Complex(0.5, -0.5)) < 1e-12);

    // n = 2: nothing off the real axis
    CHECK(boundary_point(2, 1.0).rho == doctest::Approx(0.0));
    CHECK(boundary_point(2, kPi).rho == doctest::Approx(1.0));
}

TEST_CASE("boundary value is a root of its reduced Ito polynomial") {
    for (int n : {5, 6, 8, 11, 12}) {
        for (int k = 1; k < 40; ++k) {
            const double theta = 2 * kPi * k / 40.0 + 0.003;
            const BoundaryPoint b = boundary_point(n, theta);
            if (b.params.type == ArcType::Type0 || b.rho < 1e-12) continue;
            const Poly f = reduced_ito_poly(b.params, b.alpha);
            double scale = 0.0;
            for (const Complex& c : f.coeffs) scale = std::max(scale, std::abs(c));
            CHECK(std::abs(eval(f, b.value)) < 1e-8 * scale);
        }
    }
}

TEST_CASE("the boundary root maximises modulus among the non-Perron roots") {
    for (int n : {5, 7, 12}) {
        for (int k = 1; k < 24; ++k) {
            const double theta = 2 * kPi * k / 24.0 + 0.0071;
            const BoundaryPoint b = boundary_point(n, theta);
            if (b.params.type == ArcType::Type0 || b.rho < 1e-12) continue;
            const RootSet rs = all_roots(reduced_ito_poly(b.params, b.alpha));
            for (const Complex& z : rs.roots) {
                if (std::abs(z - Complex(1.0)) < 1e-7) continue;  // Perron root
                CHECK(std::abs(z) <= b.rho + 1e-7);
                if (std::abs(std::abs(z) - b.rho) < 1e-7) {
                    const bool near = std::abs(z - b.value) < 1e-5 ||
                                      std::abs(z - std::conj(b.value)) < 1e-5;
                    CHECK(near);
                }
            }
        }
    }
}

TEST_CASE("conjugate symmetry and determinism") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ut(1e-3, kPi - 1e-3);
    for (int trial = 0; trial < 60; ++trial) {
        const double theta = ut(rng);
        for (int n : {3, 5, 8, 13}) {
            const BoundaryPoint a = boundary_point(n, theta);
            const BoundaryPoint b = boundary_point(n, 2 * kPi - theta);
            CHECK(std::abs(a.value - std::conj(b.value)) < 1e-10);
            const BoundaryPoint a2 = boundary_point(n, theta);
            CHECK(a.rho == a2.rho);
            CHECK(a.alpha == a2.alpha);
            CHECK(a.value == a2.value);
        }
    }
}

TEST_CASE("regions are nested in the order") {
    for (int n = 3; n <= 10; ++n) {
        for (int k = 0; k < 64; ++k) {
            const double theta = 2 * kPi * (k + 0.37) / 64.0;
            CHECK(boundary_point(n, theta).rho <= boundary_point(n + 1, theta).rho + 1e-9);
        }
    }
}

TEST_CASE("modulus approaches 1 at the Farey angles") {
    for (int n : {5, 9}) {
        for (const Fraction& f : farey_sequence(n)) {
            if (f.p == 0 || f.q == f.p) continue;
            const double a = f.angle();
            CHECK(boundary_point(n, a - 1e-7).rho > 1.0 - 1e-4);
            CHECK(boundary_point(n, a + 1e-7).rho > 1.0 - 1e-4);
        }
    }
}

TEST_CASE("sample_boundary covers the Farey angles exactly") {
    const auto pts = sample_boundary(3, 50);
    REQUIRE(!pts.empty());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) CHECK(pts[i].theta <= pts[i + 1].theta);
    double max_rho = 0.0;
    for (const auto& b : pts) max_rho = std::max(max_rho, b.rho);
    CHECK(max_rho == doctest::Approx(1.0));
    for (const Fraction& f : farey_sequence(3)) {
        if (f == Fraction(1, 1)) continue;
        bool found = false;
        for (const auto& b : pts)
            if (b.theta == f.angle() && std::abs(b.rho - 1.0) < 1e-12) found = true;
        CHECK(found);
    }

    const auto real_only = sample_boundary(2, 24);
    for (const auto& b : real_only)
        CHECK((b.rho < 1e-12 || std::abs(std::sin(b.theta)) < 1e-12));
}
