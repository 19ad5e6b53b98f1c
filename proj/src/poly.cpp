#include "karp/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace karp {

void Poly::normalize() {
    while (coeffs.size() > 1 && coeffs.back() == Complex(0.0)) coeffs.pop_back();
}

Complex eval(const Poly& poly, Complex z) {
    Complex acc(0.0);
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

double coeff_scale(const Poly& p) {
    double s = 0.0;
    for (const Complex& c : p.coeffs) s = std::max(s, std::abs(c));
    return s;
}

}  // namespace

RootSet all_roots(const Poly& poly, double tol, int max_iter) {
    Poly p = poly;
    p.normalize();
    if (p.degree() < 1) throw std::invalid_argument("all_roots: degree must be >= 1");

    RootSet out;
    // deflate zero roots exactly
    std::size_t zeros = 0;
    while (zeros < p.coeffs.size() - 1 && p.coeffs[zeros] == Complex(0.0)) ++zeros;
    out.roots.assign(zeros, Complex(0.0));
    std::vector<Complex> c(p.coeffs.begin() + zeros, p.coeffs.end());

    const int deg = static_cast<int>(c.size()) - 1;
    if (deg >= 1) {
        const Complex lead = c.back();
        if (deg == 1) {
            out.roots.push_back(-c[0] / lead);
        } else {
            double radius = 0.0;
            for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(c[i] / lead));
            radius += 1.0;

            std::vector<Complex> r(deg);
            for (int k = 0; k < deg; ++k) {
                const double ang = 2.0 * std::numbers::pi * k / deg + 0.4;
                r[k] = radius * Complex(std::cos(ang), std::sin(ang));
            }
            const Poly q{std::vector<Complex>(c)};
            bool converged = false;
            for (int it = 0; it < max_iter && !converged; ++it) {
                double max_step = 0.0;
                for (int i = 0; i < deg; ++i) {
                    Complex denom = lead;
                    for (int j = 0; j < deg; ++j)
                        if (j != i) denom *= r[i] - r[j];
                    const Complex step = eval(q, r[i]) / denom;
                    r[i] -= step;
                    max_step = std::max(max_step, std::abs(step));
                }
                converged = max_step < tol;
            }
            if (!converged) {
                // multiple roots stall the update criterion; accept on residual
                double res = 0.0;
                for (const Complex& z : r) res = std::max(res, std::abs(eval(q, z)));
                if (res > 1e-10 * coeff_scale(q))
                    throw NonConvergence("all_roots: Durand-Kerner did not converge");
            }
            out.roots.insert(out.roots.end(), r.begin(), r.end());
        }
    }

    for (const Complex& z : out.roots)
        out.residual = std::max(out.residual, std::abs(eval(poly, z)));
    return out;
}

std::vector<std::pair<Complex, int>> cluster_roots(const std::vector<Complex>& roots,
                                                   double tol) {
    std::vector<std::pair<Complex, int>> clusters;
    for (const Complex& z : roots) {
        bool placed = false;
        for (auto& [rep, count] : clusters) {
            if (std::abs(z - rep) <= tol) {
                rep = (rep * static_cast<double>(count) + z) / static_cast<double>(count + 1);
                ++count;
                placed = true;
                break;
            }
        }
        if (!placed) clusters.emplace_back(z, 1);
    }
    return clusters;
}

StochasticMatrix::StochasticMatrix(int n, std::vector<std::vector<double>> r)
    : order(n), rows(std::move(r)) {
    if (n < 1 || rows.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("StochasticMatrix: bad dimensions");
    for (auto& row : rows) {
        if (row.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("StochasticMatrix: bad row length");
        for (double x : row)
            if (!(x >= 0.0)) throw std::invalid_argument("StochasticMatrix: negative entry");
        finish_row(row);
    }
}

void finish_row(std::vector<double>& row) {
    int last = -1;
    for (int i = static_cast<int>(row.size()) - 1; i >= 0; --i) {
        if (row[i] != 0.0) {
            last = i;
            break;
        }
    }
    if (last < 0) throw std::invalid_argument("finish_row: zero row");
    double rest = 0.0;
    for (int i = 0; i < static_cast<int>(row.size()); ++i)
        if (i != last) rest += row[i];
    const double fixed = 1.0 - rest;
    if (!(fixed >= 0.0)) throw std::invalid_argument("finish_row: row sum exceeds 1");
    row[last] = fixed;
}

Poly char_poly(const StochasticMatrix& m) {
    const int n = m.order;
    if (n > 64) throw std::invalid_argument("char_poly: order must be <= 64");

    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A(M_k + c_{n-k} I)
    std::vector<double> mk(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i) * n + i] = 1.0;

    std::vector<Complex> coeffs(n + 1, Complex(0.0));
    coeffs[n] = 1.0;
    std::vector<double> am(static_cast<std::size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int l = 0; l < n; ++l) acc += m(i, l) * mk[static_cast<std::size_t>(l) * n + j];
                am[static_cast<std::size_t>(i) * n + j] = acc;
            }
        double trace = 0.0;
        for (int i = 0; i < n; ++i) trace += am[static_cast<std::size_t>(i) * n + i];
        const double ck = -trace / k;
        coeffs[n - k] = ck;
        mk = am;
        for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i) * n + i] += ck;
    }
    return Poly{std::move(coeffs)};
}

RootSet roots_with_one(const Poly& p) {
    if (p.degree() < 1) throw std::invalid_argument("roots_with_one: constant polynomial");
    if (p.degree() == 1) return RootSet{{Complex(1.0)}, std::abs(eval(p, Complex(1.0)))};

    // synthetic division by (t - 1); the remainder p(1) vanishes analytically
    std::vector<Complex> quot(p.coeffs.size() - 1);
    Complex carry = p.coeffs.back();
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        quot[i] = carry;
        carry = p.coeffs[i] + carry;
    }
    RootSet rs = all_roots(Poly{std::move(quot)});
    rs.roots.push_back(Complex(1.0));
    for (const Complex& z : rs.roots) rs.residual = std::max(rs.residual, std::abs(eval(p, z)));
    return rs;
}

RootSet eigenvalues(const StochasticMatrix& m) {
    const Poly p = char_poly(m);
    if (m.order == 1) return RootSet{{Complex(1.0)}, std::abs(eval(p, Complex(1.0)))};
    return roots_with_one(p);
}

}  // namespace karp
