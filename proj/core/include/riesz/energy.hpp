#pragma once

#include <array>

#include "riesz/params.hpp"

namespace riesz {

// Pair energy value on the extended real line [finite, +inf].  Public results
// carry the infinity marker explicitly instead of a floating-point infinity so
// serialization is unambiguous; value_or_infinity() is the arithmetic view.
class ExtendedEnergy {
public:
    static ExtendedEnergy infinity() { return ExtendedEnergy(true, 0.0); }
    static ExtendedEnergy finite(double v) { return ExtendedEnergy(false, v); }

    bool is_infinite() const { return infinite_; }

    // Finite value; only meaningful when !is_infinite().
    double value() const {
        if (infinite_) throw std::logic_error("ExtendedEnergy: value() on infinite energy");
        return value_;
    }

    double value_or_infinity() const;

    friend bool operator==(const ExtendedEnergy& a, const ExtendedEnergy& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

private:
    ExtendedEnergy(bool inf, double v) : infinite_(inf), value_(v) {}
    bool infinite_;
    double value_;
};

// Inscribed angles (alpha, beta, gamma) of a 3-point arrangement on the unit
// circle; alpha + beta + gamma = pi.  Degenerate arrangements sit on the
// boundary (some angle 0).  Construction validates the angle sum to 1e-12 and
// then renormalizes gamma := pi - alpha - beta.
class TriangleConfig {
public:
    TriangleConfig(double alpha, double beta, double gamma);

    // gamma derived from the other two.
    static TriangleConfig from_alpha_beta(double alpha, double beta);

    // Isosceles representative (alpha = beta = (pi - gamma)/2) on the height.
    static TriangleConfig isosceles_height(double gamma);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }

    // Chord lengths |a| = 2 sin(alpha), |b| = 2 sin(beta), |c| = 2 sin(gamma).
    std::array<double, 3> chords() const;

private:
    double alpha_, beta_, gamma_;
};

// Chord subtended on the unit circle by inscribed angle phi in [0, pi].
// Exactly 0 at both endpoints.
double chord_from_angle(double phi);

// Standardized pair energy V_s(r) = (r^-s - 1)/s (s != 0), -ln r (s = 0),
// extended to r = 0 by -1/s for s < 0 and +inf for s >= 0.  r in [0, 2].
ExtendedEnergy pair_energy(const RieszParam& p, double r);

// Raw pair energy sign(s) r^-s (s != 0), -ln r (s = 0).  For fixed s != 0 it
// is affine in the standardized form: raw = |s| V_s(r) + sign(s).
ExtendedEnergy pair_energy_raw(const RieszParam& p, double r);

// Mean of the three pair energies of a triangular arrangement.  Invariant
// under permutations of the angles bit-for-bit (chords are summed in sorted
// order); infinite iff s >= 0 and some angle vanishes.
ExtendedEnergy mean_pair_energy(const RieszParam& p, const TriangleConfig& c);

// Height profile U_s(gamma) = -2 sin^|s|((pi-gamma)/2) - sin^|s|(gamma) for
// s < 0.  Shares critical points with the mean pair energy restricted to the
// isosceles height: mean = (1/(3s)) (-2^|s| U_s(gamma) - 3), and the
// coefficient 2^|s|/(3|s|) on U_s is positive.
double u_profile(const RieszParam& p, double gamma);

} // namespace riesz
