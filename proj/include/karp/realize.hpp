#ifndef KARP_REALIZE_HPP
#define KARP_REALIZE_HPP

#include "karp/arcs.hpp"
#include "karp/boundary.hpp"
#include "karp/poly.hpp"

#include <optional>
#include <stdexcept>

namespace karp {

/// (1 - alpha) I + alpha P with P the n-cycle permutation.
StochasticMatrix cyclic_combo(int n, double alpha);

/// The s x s stochastic companion matrix whose characteristic polynomial is
/// the Type I reduced Ito polynomial t^s - beta t^{s-q} - alpha.
StochasticMatrix companion_typeI(const ArcParams& params, double alpha);

/// Embed an order-m stochastic matrix into order n >= m, preserving the
/// spectrum and appending n - m zero eigenvalues (the X T Y construction).
StochasticMatrix inflate(const StochasticMatrix& t, int n);

/// c T + (1-c)/n * ones; maps the spectrum {1, l_2, ..., l_n} to
/// {1, c l_2, ..., c l_n}.
StochasticMatrix brauer_scale(const StochasticMatrix& t, double c);

/// True iff t is subdominant in the root multiset: every root away from 1
/// has modulus at most |t|, and moduli that tie |t| belong to t or conj(t).
bool verify_subdominant(const RootSet& roots, Complex t);

struct NotInRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RealizationKind { Matrix, PolynomialCertificate };

/// Certificate for arcs whose explicit matrix construction is not carried
/// here (Type II/III): the carrying Ito polynomial, its roots, and the
/// verified subdominance of the boundary root.
struct Certificate {
    Poly f_alpha;
    double alpha = 0.0;
    RootSet roots;
    Complex boundary_root;
    bool subdominance_ok = false;
};

struct RealizationResult {
    RealizationKind kind = RealizationKind::Matrix;
    std::optional<StochasticMatrix> matrix;
    std::optional<Certificate> certificate;
    Complex target;
    Complex achieved;
};

/// Realize z in Theta_n as a subdominant eigenvalue.  Writes z = c * z0 with
/// z0 the boundary point at arg z.  Type 0 / Type I arcs (and unit-circle
/// contact points) yield an explicit order-n matrix; Type II/III arcs yield
/// a polynomial certificate.
RealizationResult realize_subdominant(int n, Complex z);

}  // namespace karp

#endif
