#include "karp/farey.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace karp {

Fraction::Fraction(std::int64_t num, std::int64_t den) : p(num), q(den) {
    if (den <= 0) throw std::invalid_argument("Fraction: denominator must be positive");
    if (num < 0) throw std::invalid_argument("Fraction: numerator must be nonnegative");
    if (num > den) throw std::invalid_argument("Fraction: value must lie in [0, 1]");
    const std::int64_t g = std::gcd(p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
}

double Fraction::angle() const {
    return 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
}

std::string Fraction::str() const {
    return std::to_string(p) + "/" + std::to_string(q);
}

std::vector<Fraction> farey_sequence(int n) {
    if (n < 1) throw std::invalid_argument("farey_sequence: n must be >= 1");
    std::vector<Fraction> seq;
    for (std::int64_t q = 1; q <= n; ++q)
        for (std::int64_t p = 0; p < q; ++p)
            if (std::gcd(p, q) == 1) seq.emplace_back(p, q);
    std::sort(seq.begin(), seq.end());
    seq.emplace_back(1, 1);
    return seq;
}

bool is_farey_pair(const Fraction& a, const Fraction& b, int n) {
    if (!(a < b)) return false;
    return a.q + b.q > n && a.q * b.p - a.p * b.q == 1;
}

SectorLocation bracketing_pair(int n, double theta, double tol_angle) {
    if (n < 2) throw std::invalid_argument("bracketing_pair: n must be >= 2");
    const double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0) theta += two_pi;

    const std::vector<Fraction> seq = farey_sequence(n);
    for (const Fraction& f : seq) {
        if (std::abs(theta - f.angle()) <= tol_angle) {
            // report 1/1 as its alias 0/1
            return f == Fraction(1, 1) ? Fraction(0, 1) : f;
        }
    }
    // seq brackets [0, 1] in turns, so the sector always exists
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (theta > seq[i].angle() && theta < seq[i + 1].angle())
            return FareyPair{seq[i], seq[i + 1], n};
    }
    throw std::logic_error("bracketing_pair: no sector found");
}

FareyPair conjugate_pair(const FareyPair& pair) {
    const Fraction& a = pair.left;
    const Fraction& b = pair.right;
    return FareyPair{Fraction(b.q - b.p, b.q), Fraction(a.q - a.p, a.q), pair.order};
}

}  // namespace karp
