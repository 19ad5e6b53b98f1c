#include "karp/realize.hpp"

#include "karp/farey.hpp"
#include "karp/region.hpp"

#include <cmath>
#include <numbers>

namespace karp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<std::vector<double>> zero_rows(int n) {
    return std::vector<std::vector<double>>(static_cast<std::size_t>(n),
                                            std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

}  // namespace

StochasticMatrix cyclic_combo(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("cyclic_combo: n must be >= 1");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("cyclic_combo: alpha must lie in [0, 1]");
    auto rows = zero_rows(n);
    for (int i = 0; i < n; ++i) {
        rows[i][i] += 1.0 - alpha;
        rows[i][(i + 1) % n] += alpha;
    }
    return StochasticMatrix(n, std::move(rows));
}

StochasticMatrix companion_typeI(const ArcParams& params, double alpha) {
    if (params.type != ArcType::TypeI)
        throw std::invalid_argument("companion_typeI: params must describe a Type I arc");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("companion_typeI: alpha must lie in [0, 1]");
    const int s = static_cast<int>(params.s);
    auto rows = zero_rows(s);
    for (int i = 0; i + 1 < s; ++i) rows[i][i + 1] = 1.0;
    rows[s - 1][0] = alpha;
    rows[s - 1][static_cast<std::size_t>(params.s - params.q)] += 1.0 - alpha;
    return StochasticMatrix(s, std::move(rows));
}

StochasticMatrix inflate(const StochasticMatrix& t, int n) {
    const int m = t.order;
    if (m > n) throw std::invalid_argument("inflate: target order is smaller than input");
    if (m == n) return t;
    const int k = n - m + 1;  // width of the averaged block
    auto rows = zero_rows(n);
    for (int i = 0; i < n; ++i) {
        const int src = i < k ? 0 : i - k + 1;
        for (int j = 0; j < k; ++j) rows[i][j] = t(src, 0) / k;
        for (int j = 1; j < m; ++j) rows[i][k - 1 + j] = t(src, j);
    }
    return StochasticMatrix(n, std::move(rows));
}

StochasticMatrix brauer_scale(const StochasticMatrix& t, double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("brauer_scale: c must lie in [0, 1]");
    const int n = t.order;
    const double uniform = (1.0 - c) / n;
    auto rows = zero_rows(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = c * t(i, j) + uniform;
    return StochasticMatrix(n, std::move(rows));
}

bool verify_subdominant(const RootSet& roots, Complex t) {
    const double mod_t = std::abs(t);
    bool found = false;
    for (const Complex& z : roots.roots) found = found || std::abs(z - t) <= 1e-8;
    if (!found) throw std::invalid_argument("verify_subdominant: t is not among the roots");

    for (const Complex& z : roots.roots) {
        if (std::abs(z - Complex(1.0)) <= 1e-8) continue;
        const double mod_z = std::abs(z);
        if (mod_z > mod_t + 1e-8) return false;
        if (std::abs(mod_z - mod_t) <= 1e-8 && std::abs(z - t) > 1e-6 &&
            std::abs(z - std::conj(t)) > 1e-6)
            return false;
    }
    return true;
}

RealizationResult realize_subdominant(int n, Complex z) {
    if (n < 2) throw std::invalid_argument("realize_subdominant: n must be >= 2");
    if (!contains(n, z).inside)
        throw NotInRegion("realize_subdominant: z is not in Theta_n");

    RealizationResult res;
    res.target = z;

    const double mod = std::abs(z);
    if (mod == 0.0) {
        // rank-one averaging matrix has spectrum {1, 0, ..., 0}
        res.matrix = brauer_scale(cyclic_combo(n, 0.0), 0.0);
        res.achieved = Complex(0.0);
        return res;
    }

    double theta = std::arg(z);
    if (theta < 0) theta += kTwoPi;
    const BoundaryPoint bp = boundary_point(n, theta);
    const double c = std::min(1.0, mod / bp.rho);

    const SectorLocation loc = bracketing_pair(n, theta);
    if (const Fraction* f = std::get_if<Fraction>(&loc)) {
        // unit-circle contact point: scaled q-cycle (identity when q = 1)
        StochasticMatrix t = f->q == 1 ? cyclic_combo(n, 0.0)
                                       : inflate(cyclic_combo(static_cast<int>(f->q), 1.0), n);
        if (c < 1.0) t = brauer_scale(t, c);
        res.matrix = std::move(t);
        res.achieved = c * std::polar(1.0, f->angle());
        if (f->q == 1) res.achieved = Complex(c);
        return res;
    }

    switch (bp.params.type) {
        case ArcType::Type0: {
            StochasticMatrix t = cyclic_combo(n, bp.alpha);
            if (c < 1.0) t = brauer_scale(t, c);
            res.matrix = std::move(t);
            res.achieved = c * bp.value;
            return res;
        }
        case ArcType::TypeI: {
            StochasticMatrix t = inflate(companion_typeI(bp.params, bp.alpha), n);
            if (c < 1.0) t = brauer_scale(t, c);
            res.matrix = std::move(t);
            res.achieved = c * bp.value;
            return res;
        }
        case ArcType::TypeII:
        case ArcType::TypeIII: {
            // no explicit order-s construction carried for these arcs;
            // certify subdominance of the boundary root instead
            Certificate cert;
            cert.f_alpha = reduced_ito_poly(bp.params, bp.alpha);
            cert.alpha = bp.alpha;
            cert.roots = reduced_ito_roots(bp.params, bp.alpha);
            Complex nearest = cert.roots.roots.front();
            for (const Complex& root : cert.roots.roots)
                if (std::abs(root - bp.value) < std::abs(nearest - bp.value)) nearest = root;
            cert.boundary_root = nearest;
            cert.subdominance_ok = verify_subdominant(cert.roots, nearest);
            res.kind = RealizationKind::PolynomialCertificate;
            res.certificate = std::move(cert);
            res.achieved = c * bp.value;
            return res;
        }
    }
    throw std::logic_error("realize_subdominant: unknown arc type");
}

}  // namespace karp
