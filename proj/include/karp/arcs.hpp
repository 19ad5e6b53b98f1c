#ifndef KARP_ARCS_HPP
#define KARP_ARCS_HPP

#include "karp/farey.hpp"
#include "karp/poly.hpp"

#include <cstdint>
#include <string>

namespace karp {

enum class ArcType { Type0, TypeI, TypeII, TypeIII };

std::string to_string(ArcType t);

/// Integer parameter block of a boundary arc.  (p,q) comes from the
/// smaller-denominator endpoint of the pair, (r,s) from the other; this is
/// the orientation in which the boundary equation is applied.
struct ArcParams {
    int n = 0;
    std::int64_t p = 0, q = 1;  // smaller-denominator fraction
    std::int64_t r = 0, s = 1;  // the other endpoint
    std::int64_t d = 0;         // floor(n/q)
    std::int64_t y = 0;         // n - d*q
    std::int64_t delta = 1;     // gcd(d, s)
    std::int64_t d1 = 1, s1 = 1;
    std::int64_t r1 = 0, j0 = 0;
    std::int64_t rhat = 0, l0 = 0;
    ArcType type = ArcType::Type0;
};

ArcParams arc_params(const FareyPair& pair, int n);

/// Reduced Ito polynomial f_alpha of the arc's type, with real coefficients
/// expanded from exact integer binomials.  beta = 1 - alpha throughout.
Poly reduced_ito_poly(const ArcParams& params, double alpha);

/// Root multiset of reduced_ito_poly.  Type 0 polynomials are solved in
/// closed form (beta + alpha e^{2 pi i k/n}), Type II/III via the simple
/// roots of the ghat factors raised to the d1-th power; both avoid the
/// d-fold root clusters of the expanded polynomial near alpha = 0, which
/// iterative solvers cannot resolve.  Type I deflates the known root 1.
RootSet reduced_ito_roots(const ArcParams& params, double alpha);

/// Factor g_{alpha,j}(t) = (t^q - beta)^{d1} - alpha^{d1} t^{q d1 - s1} e^{2 pi i j / delta},
/// cleared of any negative power of t.  Requires q >= 2 and 0 <= j < delta.
Poly g_factor(const ArcParams& params, double alpha, std::int64_t j);

/// Companion factor ghat_{alpha,j}(t) = t^{q d1} - beta - alpha t^{q d1 - s1} e^{2 pi i j/(delta d1)},
/// cleared of any negative power of t.  The d1-th powers of its nonzero roots
/// are the nonzero roots of g_factor(params, alpha, j).
Poly g_hat(const ArcParams& params, double alpha, std::int64_t j);

}  // namespace karp

#endif
