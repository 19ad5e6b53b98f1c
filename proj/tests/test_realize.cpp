#include "karp/realize.hpp"

#include "karp/region.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace karp;
using karp::test::match_distance;

namespace {
constexpr double kPi = std::numbers::pi;

Complex closest(const std::vector<Complex>& v, Complex z) {
    Complex best = v.front();
    for (const Complex& x : v)
        if (std::abs(x - z) < std::abs(best - z)) best = x;
    return best;
}
}  // namespace

TEST_CASE("cyclic_combo spectrum is the shrunk n-gon") {
    const int n = 5;
    const double alpha = 0.6;
    const StochasticMatrix m = cyclic_combo(n, alpha);
    std::vector<Complex> want;
    for (int k = 0; k < n; ++k)
        want.push_back((1 - alpha) + alpha * std::polar(1.0, 2 * kPi * k / n));
    CHECK(match_distance(eigenvalues(m).roots, want) < 1e-9);
}

TEST_CASE("companion_typeI has the reduced Ito characteristic polynomial") {
    const ArcParams ap = arc_params(FareyPair{Fraction(1, 4), Fraction(1, 3), 5}, 5);
    for (double alpha : {0.2, 0.41463260848652264, 0.9}) {
        const StochasticMatrix m = companion_typeI(ap, alpha);
        REQUIRE(m.order == 4);
        const Poly cp = char_poly(m);
        const Poly f = reduced_ito_poly(ap, alpha);
        REQUIRE(cp.coeffs.size() == f.coeffs.size());
        for (std::size_t i = 0; i < cp.coeffs.size(); ++i)
            CHECK(std::abs(cp.coeffs[i] - f.coeffs[i]) < 1e-12);
    }
    const ArcParams ap12 = arc_params(FareyPair{Fraction(3, 10), Fraction(1, 3), 12}, 12);
    CHECK_THROWS(companion_typeI(ap12, 0.5));
}

TEST_CASE("inflate keeps the spectrum and pads with zeros") {
    const ArcParams ap = arc_params(FareyPair{Fraction(1, 4), Fraction(1, 3), 5}, 5);
    const StochasticMatrix t = companion_typeI(ap, 0.37);
    const StochasticMatrix big = inflate(t, 7);
    REQUIRE(big.order == 7);
    auto small_ev = eigenvalues(t).roots;
    small_ev.push_back(Complex(0.0));
    small_ev.push_back(Complex(0.0));
    small_ev.push_back(Complex(0.0));
    CHECK(match_distance(eigenvalues(big).roots, small_ev) < 1e-8);

    const StochasticMatrix same = inflate(t, 4);
    CHECK(match_distance(eigenvalues(same).roots, eigenvalues(t).roots) < 1e-9);
}

TEST_CASE("brauer_scale shrinks every eigenvalue except 1") {
    const StochasticMatrix m = cyclic_combo(6, 0.8);
    const double c = 0.55;
    const StochasticMatrix scaled = brauer_scale(m, c);
    std::vector<Complex> want = {Complex(1.0)};
    for (int k = 1; k < 6; ++k)
        want.push_back(c * ((1 - 0.8) + 0.8 * std::polar(1.0, 2 * kPi * k / 6)));
    CHECK(match_distance(eigenvalues(scaled).roots, want) < 1e-9);
}

TEST_CASE("verify_subdominant accepts ties only at the value or its conjugate") {
    const Complex z = std::polar(0.8, 2.0);
    RootSet rs;
    rs.roots = {Complex(1.0), z, std::conj(z), Complex(0.3)};
    CHECK(verify_subdominant(rs, z));

    rs.roots.push_back(std::polar(0.8, 0.5));  // same modulus, different direction
    CHECK_FALSE(verify_subdominant(rs, z));

    // -1 ties |i| but is neither i nor its conjugate
    RootSet quart;
    quart.roots = {Complex(1.0), Complex(-1.0), Complex(0.0, 1.0), Complex(0.0, -1.0)};
    CHECK_FALSE(verify_subdominant(quart, Complex(0.0, 1.0)));
    CHECK_THROWS(verify_subdominant(quart, Complex(0.5)));  // 0.5 is not a root

    RootSet dominated;
    dominated.roots = {Complex(1.0), Complex(0.9), Complex(0.2)};
    CHECK_FALSE(verify_subdominant(dominated, Complex(0.2)));
}

TEST_CASE("realize_subdominant produces verified matrices on Type 0 and I arcs") {
    // chord sector of Theta_4
    {
        const Complex z = std::polar(0.4, kPi / 4);
        const RealizationResult r = realize_subdominant(4, z);
        REQUIRE(r.kind == RealizationKind::Matrix);
        REQUIRE(r.matrix.has_value());
        CHECK(r.matrix->order == 4);
        const RootSet ev = eigenvalues(*r.matrix);
        CHECK(std::abs(closest(ev.roots, z) - z) < 1e-7);
        CHECK(verify_subdominant(ev, r.achieved));
    }
    // Type I sector of Theta_5, on the boundary and inside
    for (double shrink : {1.0, 0.7}) {
        const Complex z = shrink * boundary_point(5, 7 * kPi / 12).value;
        const RealizationResult r = realize_subdominant(5, z);
        REQUIRE(r.kind == RealizationKind::Matrix);
        REQUIRE(r.matrix.has_value());
        CHECK(r.matrix->order == 5);
        const RootSet ev = eigenvalues(*r.matrix);
        CHECK(std::abs(closest(ev.roots, z) - z) < 1e-7);
        CHECK(verify_subdominant(ev, r.achieved));
    }
    // z = 1 and z = 0
    {
        const RealizationResult r1 = realize_subdominant(3, Complex(1.0));
        REQUIRE(r1.matrix.has_value());
        const RealizationResult r0 = realize_subdominant(3, Complex(0.0));
        REQUIRE(r0.matrix.has_value());
        CHECK(std::abs(r0.achieved) < 1e-12);
    }
    // unit-circle contact point
    {
        const Complex z = std::polar(1.0, 2 * kPi / 3);
        const RealizationResult r = realize_subdominant(6, z);
        REQUIRE(r.matrix.has_value());
        const RootSet ev = eigenvalues(*r.matrix);
        CHECK(std::abs(closest(ev.roots, z) - z) < 1e-8);
        CHECK(verify_subdominant(ev, r.achieved));
    }
    CHECK_THROWS_AS((void)realize_subdominant(3, Complex(0.0, 1.0)), NotInRegion);
}

TEST_CASE("Type II arcs yield a checked polynomial certificate") {
    const Complex z = std::polar(0.9, 7 * kPi / 12);  // Theta_6, TypeII sector
    REQUIRE(contains(6, z).inside);
    const RealizationResult r = realize_subdominant(6, z);
    CHECK(r.kind == RealizationKind::PolynomialCertificate);
    REQUIRE(r.certificate.has_value());
    const Certificate& c = r.certificate.value();
    CHECK(c.subdominance_ok);
    CHECK(std::abs(eval(c.f_alpha, c.boundary_root)) < 1e-8);
    CHECK(std::abs(c.boundary_root) >= std::abs(z) - 1e-9);
    CHECK(std::abs(std::arg(c.boundary_root) - std::arg(z)) < 1e-6);
}

TEST_CASE("random interior points under chord and Type I arcs realize as matrices") {
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    std::uniform_real_distribution<double> ut(0.0, 2 * kPi);
    int done = 0;
    while (done < 40) {
        const Complex z = std::polar(ur(rng), ut(rng));
        if (!contains(5, z).inside || std::abs(z) < 1e-6) continue;
        const ArcType type = boundary_point(5, std::arg(z)).params.type;
        if (type != ArcType::Type0 && type != ArcType::TypeI) continue;
        ++done;
        const RealizationResult r = realize_subdominant(5, z);
        REQUIRE(r.kind == RealizationKind::Matrix);
        REQUIRE(r.matrix.has_value());
        CHECK(r.matrix->order == 5);
        const RootSet ev = eigenvalues(*r.matrix);
        CHECK(std::abs(closest(ev.roots, z) - z) < 1e-7);
        CHECK(verify_subdominant(ev, r.achieved));
    }
}
