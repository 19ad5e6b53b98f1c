#ifndef KARP_FAREY_HPP
#define KARP_FAREY_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace karp {

/// Reduced fraction p/q with 0 <= p <= q, used both as a Farey fraction and
/// as an angle measured in turns (angle = 2*pi*p/q).  The wrap-around value
/// 1/1 is admitted so that arcs can be traversed circularly.
struct Fraction {
    std::int64_t p = 0;
    std::int64_t q = 1;

    Fraction() = default;
    Fraction(std::int64_t num, std::int64_t den);

    double turns() const { return static_cast<double>(p) / static_cast<double>(q); }
    double angle() const;

    std::string str() const;

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.p == b.p && a.q == b.q;
    }
    // order as rationals; exact in 64-bit for the denominators we admit
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return a.p * b.q < b.p * a.q;
    }
};

/// Two adjacent Farey fractions of a given order.
struct FareyPair {
    Fraction left;
    Fraction right;
    int order = 0;
};

/// Result of locating an angle on the Farey circle: either the angle is (to
/// within tolerance) a Farey fraction itself, or it falls strictly inside the
/// sector of a pair.
using SectorLocation = std::variant<Fraction, FareyPair>;

/// All Farey fractions of order n in increasing order, with 1/1 appended as
/// the final element for circular traversal.
std::vector<Fraction> farey_sequence(int n);

/// True iff a = p/q and b = r/s are adjacent in F_n, i.e. q+s > n and
/// qr - ps = 1.  Requires a < b.
bool is_farey_pair(const Fraction& a, const Fraction& b, int n);

/// Default snapping tolerance (radians) for recognising an angle as an exact
/// Farey fraction.
inline constexpr double kAngleTol = 1e-12;

/// Locate theta (radians, reduced mod 2*pi) among the Farey fractions of
/// order n.  Returns the exact fraction when theta is within tol_angle of a
/// Farey angle, otherwise the unique pair whose open sector contains theta.
SectorLocation bracketing_pair(int n, double theta, double tol_angle = kAngleTol);

/// The conjugate pair ((s-r)/s, (q-p)/q); an involution whose sector is the
/// complex-conjugate reflection of the input's.
FareyPair conjugate_pair(const FareyPair& pair);

}  // namespace karp

#endif
