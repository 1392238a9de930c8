#include "riesz/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleSumTol = 1e-12;

// Below this |s| the direct form (r^-s - 1)/s cancels catastrophically.
constexpr double kSmallExponent = 1e-6;

void check_angle(double phi, const char* name) {
    if (!(phi >= 0.0 && phi <= kPi)) {
        throw std::domain_error(std::string(name) + ": angle outside [0, pi]");
    }
}

} // namespace

double ExtendedEnergy::value_or_infinity() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

TriangleConfig::TriangleConfig(double alpha, double beta, double gamma) {
    check_angle(alpha, "TriangleConfig");
    check_angle(beta, "TriangleConfig");
    check_angle(gamma, "TriangleConfig");
    if (std::abs(alpha + beta + gamma - kPi) > kAngleSumTol) {
        throw std::domain_error("TriangleConfig: alpha + beta + gamma != pi");
    }
    alpha_ = alpha;
    beta_ = beta;
    gamma_ = std::clamp(kPi - alpha - beta, 0.0, kPi);
}

TriangleConfig TriangleConfig::from_alpha_beta(double alpha, double beta) {
    check_angle(alpha, "TriangleConfig");
    check_angle(beta, "TriangleConfig");
    if (alpha + beta > kPi + kAngleSumTol) {
        throw std::domain_error("TriangleConfig: alpha + beta > pi");
    }
    return TriangleConfig(alpha, beta, std::clamp(kPi - alpha - beta, 0.0, kPi));
}

TriangleConfig TriangleConfig::isosceles_height(double gamma) {
    check_angle(gamma, "TriangleConfig");
    const double leg = 0.5 * (kPi - gamma);
    return TriangleConfig(leg, leg, gamma);
}

std::array<double, 3> TriangleConfig::chords() const {
    return {chord_from_angle(alpha_), chord_from_angle(beta_), chord_from_angle(gamma_)};
}

double chord_from_angle(double phi) {
    check_angle(phi, "chord_from_angle");
    if (phi == 0.0 || phi == kPi) return 0.0; // sin(pi) rounds to ~1.2e-16 otherwise
    return 2.0 * std::sin(phi);
}

ExtendedEnergy pair_energy(const RieszParam& p, double r) {
    if (!(r >= 0.0 && r <= 2.0)) {
        throw std::domain_error("pair_energy: r outside [0, 2]");
    }
    const double s = p.s();
    if (r == 0.0) {
        if (s < 0.0) return ExtendedEnergy::finite(-1.0 / s);
        return ExtendedEnergy::infinity();
    }
    if (s == 0.0) return ExtendedEnergy::finite(-std::log(r));
    if (std::abs(s) < kSmallExponent) {
        return ExtendedEnergy::finite(std::expm1(-s * std::log(r)) / s);
    }
    return ExtendedEnergy::finite((std::pow(r, -s) - 1.0) / s);
}

ExtendedEnergy pair_energy_raw(const RieszParam& p, double r) {
    if (!(r >= 0.0)) {
        throw std::domain_error("pair_energy_raw: r must be >= 0");
    }
    const double s = p.s();
    if (r == 0.0) {
        if (s < 0.0) return ExtendedEnergy::finite(0.0);
        return ExtendedEnergy::infinity();
    }
    if (s == 0.0) return ExtendedEnergy::finite(-std::log(r));
    const double sign = s > 0.0 ? 1.0 : -1.0;
    return ExtendedEnergy::finite(sign * std::pow(r, -s));
}

ExtendedEnergy mean_pair_energy(const RieszParam& p, const TriangleConfig& c) {
    std::array<double, 3> r = c.chords();
    std::sort(r.begin(), r.end());
    if (p.s() >= 0.0 && r[0] == 0.0) return ExtendedEnergy::infinity();
    double sum = 0.0;
    for (double ri : r) sum += pair_energy(p, ri).value();
    return ExtendedEnergy::finite(sum / 3.0);
}

double u_profile(const RieszParam& p, double gamma) {
    if (!(p.s() < 0.0)) {
        throw std::domain_error("u_profile: defined for s < 0 only");
    }
    check_angle(gamma, "u_profile");
    const double e = -p.s(); // |s|
    const double leg = std::sin(0.5 * (kPi - gamma));
    return -2.0 * std::pow(leg, e) - std::pow(std::sin(gamma), e);
}

} // namespace riesz
