#include "karp/arcs.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace karp {

std::string to_string(ArcType t) {
    switch (t) {
        case ArcType::Type0: return "Type0";
        case ArcType::TypeI: return "TypeI";
        case ArcType::TypeII: return "TypeII";
        case ArcType::TypeIII: return "TypeIII";
    }
    return "?";
}

namespace {

// exact binomial coefficient; C(66,33) still fits in unsigned 64-bit
unsigned long long binomial(std::int64_t n, std::int64_t k) {
    if (n > 66) throw std::overflow_error("binomial: n too large for exact arithmetic");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned long long>(n - k + i);
        acc /= static_cast<unsigned long long>(i);
    }
    return acc;
}

// coefficients of (t^q - beta)^d placed at exponents offset + q*k
void add_binomial_expansion(std::vector<Complex>& coeffs, std::int64_t q, std::int64_t d,
                            double beta, std::int64_t offset) {
    for (std::int64_t k = 0; k <= d; ++k) {
        const double sign = ((d - k) % 2 == 0) ? 1.0 : -1.0;
        const double term =
            sign * static_cast<double>(binomial(d, k)) * std::pow(beta, static_cast<double>(d - k));
        coeffs[static_cast<std::size_t>(offset + q * k)] += term;
    }
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    // extended Euclid; gcd(a, m) = 1
    std::int64_t t = 0, new_t = 1, r = m, new_r = a % m;
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::logic_error("mod_inverse: arguments not coprime");
    return ((t % m) + m) % m;
}

// e^{2 pi i k/m}, exact on the axes so quarter-turn phases carry no noise
Complex unit_root(std::int64_t k, std::int64_t m) {
    k %= m;
    if (k < 0) k += m;
    if ((4 * k) % m == 0) {
        switch (4 * k / m) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                               static_cast<double>(m));
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0, 1]");
}

}  // namespace

ArcParams arc_params(const FareyPair& pair, int n) {
    ArcParams ap;
    ap.n = n;
    const bool left_small = pair.left.q <= pair.right.q;
    const Fraction& small = left_small ? pair.left : pair.right;
    const Fraction& other = left_small ? pair.right : pair.left;
    ap.p = small.p;
    ap.q = small.q;
    ap.r = other.p;
    ap.s = other.q;
    ap.d = n / ap.q;
    ap.y = n - ap.d * ap.q;
    ap.delta = std::gcd(ap.d, ap.s);
    ap.d1 = ap.d / ap.delta;
    ap.s1 = ap.s / ap.delta;
    ap.r1 = ap.r / ap.delta;
    ap.j0 = ap.r - ap.delta * ap.r1;
    if (ap.s1 == 1) {
        ap.rhat = 0;
        ap.l0 = 0;
    } else {
        ap.rhat = (ap.r1 % ap.s1) * mod_inverse(ap.d1 % ap.s1, ap.s1) % ap.s1;
        ap.l0 = (ap.d1 * ap.rhat - ap.r1) / ap.s1;
    }
    if (ap.q == 1)
        ap.type = ArcType::Type0;
    else if (ap.d == 1)
        ap.type = ArcType::TypeI;
    else
        ap.type = (ap.q * ap.d > ap.s) ? ArcType::TypeII : ArcType::TypeIII;
    return ap;
}

Poly reduced_ito_poly(const ArcParams& params, double alpha) {
    check_alpha(alpha);
    const double beta = 1.0 - alpha;
    switch (params.type) {
        case ArcType::Type0: {
            std::vector<Complex> c(static_cast<std::size_t>(params.n) + 1, Complex(0.0));
            add_binomial_expansion(c, 1, params.n, beta, 0);
            c[0] -= std::pow(alpha, static_cast<double>(params.n));
            return Poly{std::move(c)};
        }
        case ArcType::TypeI: {
            std::vector<Complex> c(static_cast<std::size_t>(params.s) + 1, Complex(0.0));
            c[static_cast<std::size_t>(params.s)] = 1.0;
            c[static_cast<std::size_t>(params.s - params.q)] -= beta;
            c[0] -= alpha;
            return Poly{std::move(c)};
        }
        case ArcType::TypeII: {
            std::vector<Complex> c(static_cast<std::size_t>(params.q * params.d) + 1,
                                   Complex(0.0));
            add_binomial_expansion(c, params.q, params.d, beta, 0);
            c[static_cast<std::size_t>(params.q * params.d - params.s)] -=
                std::pow(alpha, static_cast<double>(params.d));
            return Poly{std::move(c)};
        }
        case ArcType::TypeIII: {
            std::vector<Complex> c(static_cast<std::size_t>(params.s) + 1, Complex(0.0));
            add_binomial_expansion(c, params.q, params.d, beta, params.s - params.q * params.d);
            c[0] -= std::pow(alpha, static_cast<double>(params.d));
            return Poly{std::move(c)};
        }
    }
    throw std::logic_error("reduced_ito_poly: unknown arc type");
}

RootSet reduced_ito_roots(const ArcParams& params, double alpha) {
    check_alpha(alpha);
    const Poly f = reduced_ito_poly(params, alpha);

    RootSet rs;
    switch (params.type) {
        case ArcType::Type0:
            // closed form; the expanded polynomial is an n-fold cluster near
            // alpha = 0 and hopeless for iterative solvers
            for (std::int64_t k = 0; k < params.n; ++k)
                rs.roots.push_back(k == 0 ? Complex(1.0)
                                          : (1.0 - alpha) + alpha * unit_root(k, params.n));
            break;
        case ArcType::TypeI:
            return roots_with_one(f);
        case ArcType::TypeII:
        case ArcType::TypeIII:
            // the d-fold clusters of f near alpha = 0 are products of simple
            // trinomial roots: take d1-th powers of the ghat factor roots
            for (std::int64_t j = 0; j < params.delta; ++j) {
                const Poly h = g_hat(params, alpha, j);
                const RootSet hr = j == 0 ? roots_with_one(h) : all_roots(h);
                for (const Complex& root : hr.roots) {
                    Complex powered(1.0);
                    for (std::int64_t k = 0; k < params.d1; ++k) powered *= root;
                    rs.roots.push_back(powered);
                }
            }
            break;
    }
    for (const Complex& z : rs.roots) rs.residual = std::max(rs.residual, std::abs(eval(f, z)));
    return rs;
}

Poly g_factor(const ArcParams& params, double alpha, std::int64_t j) {
    check_alpha(alpha);
    if (params.q < 2) throw std::invalid_argument("g_factor: requires q >= 2");
    if (j < 0 || j >= params.delta) throw std::invalid_argument("g_factor: j out of range");
    const double beta = 1.0 - alpha;
    const std::int64_t e = params.q * params.d1 - params.s1;
    const std::int64_t shift = e < 0 ? -e : 0;  // clear the negative power of t
    const std::int64_t deg = std::max(params.q * params.d1 + shift, e + shift);
    std::vector<Complex> c(static_cast<std::size_t>(deg) + 1, Complex(0.0));
    add_binomial_expansion(c, params.q, params.d1, beta, shift);
    c[static_cast<std::size_t>(e + shift)] -=
        std::pow(alpha, static_cast<double>(params.d1)) * unit_root(j, params.delta);
    return Poly{std::move(c)};
}

Poly g_hat(const ArcParams& params, double alpha, std::int64_t j) {
    check_alpha(alpha);
    if (params.q < 2) throw std::invalid_argument("g_hat: requires q >= 2");
    if (j < 0 || j >= params.delta) throw std::invalid_argument("g_hat: j out of range");
    const double beta = 1.0 - alpha;
    const std::int64_t e = params.q * params.d1 - params.s1;
    const std::int64_t shift = e < 0 ? -e : 0;
    const std::int64_t deg = std::max(params.q * params.d1 + shift, e + shift);
    std::vector<Complex> c(static_cast<std::size_t>(deg) + 1, Complex(0.0));
    c[static_cast<std::size_t>(params.q * params.d1 + shift)] += 1.0;
    c[static_cast<std::size_t>(shift)] -= beta;
    c[static_cast<std::size_t>(e + shift)] -= alpha * unit_root(j, params.delta * params.d1);
    return Poly{std::move(c)};
}

}  // namespace karp
