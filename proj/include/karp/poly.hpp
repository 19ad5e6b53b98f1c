#ifndef KARP_POLY_HPP
#define KARP_POLY_HPP

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace karp {

using Complex = std::complex<double>;

/// Dense complex polynomial, constant term first.
struct Poly {
    std::vector<Complex> coeffs;

    Poly() : coeffs{Complex(0.0)} {}
    explicit Poly(std::vector<Complex> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) coeffs.push_back(Complex(0.0));
    }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Drop (exactly) zero leading coefficients.
    void normalize();
};

Complex eval(const Poly& poly, Complex z);

/// Multiset of roots together with the worst residual max|p(root)|.
struct RootSet {
    std::vector<Complex> roots;
    double residual = 0.0;
};

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All complex roots by Durand-Kerner simultaneous iteration.  Deterministic:
/// initial points sit on a circle of radius 1 + max|c_i/c_lead|, rotated by
/// 0.4 rad to break symmetry.  Throws NonConvergence if neither the update
/// criterion nor the residual criterion is met after max_iter sweeps.
RootSet all_roots(const Poly& poly, double tol = 1e-13, int max_iter = 2000);

/// Group roots into clusters of nearby values (for multiplicity-sensitive
/// checks); returns (representative, count) pairs.
std::vector<std::pair<Complex, int>> cluster_roots(const std::vector<Complex>& roots,
                                                   double tol = 1e-5);

/// Dense row-stochastic matrix.  Every row is finished so that it sums to 1
/// exactly: the last nonzero entry equals 1 minus the sum of the others.
struct StochasticMatrix {
    int order = 0;
    std::vector<std::vector<double>> rows;

    StochasticMatrix() = default;
    StochasticMatrix(int n, std::vector<std::vector<double>> r);

    double operator()(int i, int j) const { return rows[i][j]; }
};

/// Rewrite the last nonzero entry as 1 minus the partial sum of the others,
/// so that left-to-right accumulation of the row yields exactly 1.0.
void finish_row(std::vector<double>& row);

/// Roots of a polynomial known to vanish at 1 (characteristic and boundary
/// polynomials all do): divide out (t - 1) synthetically, solve the quotient,
/// and append the root 1 exactly.
RootSet roots_with_one(const Poly& p);

/// Monic characteristic polynomial via the Faddeev-LeVerrier recursion.
/// Supported for order <= 64.
Poly char_poly(const StochasticMatrix& m);

/// Spectrum of m: the Perron root 1 (appended exactly) plus the roots of
/// char_poly(m) deflated by (t - 1).
RootSet eigenvalues(const StochasticMatrix& m);

}  // namespace karp

#endif
