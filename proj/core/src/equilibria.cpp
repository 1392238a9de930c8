#include "riesz/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace riesz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr int kNewtonCap = 50;

// Safeguarded Newton on a bracketed root: keeps the bisection bracket and
// falls back to it whenever the Newton step leaves it or stalls.
template <typename F, typename DF>
double solve_bracketed(F f, DF df, double lo, double hi, double flo, double tol) {
    double x = 0.5 * (lo + hi);
    double fx = f(x);
    for (int iter = 0; iter < 200; ++iter) {
        if (fx == 0.0) return x;
        if ((fx < 0.0) == (flo < 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        double next;
        const double d = df(x);
        bool newton_ok = false;
        if (d != 0.0 && std::isfinite(d)) {
            next = x - fx / d;
            newton_ok = next > lo && next < hi;
        }
        if (!newton_ok) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= tol * std::max(std::abs(next), 1e-300)) return next;
        x = next;
        fx = f(x);
    }
    return x;
}

// Unsafeguarded Newton for the near-s=-4 regime where the bracket endpoints
// carry h-values below fp noise (the branch collides with the double root).
template <typename F, typename DF>
double newton_polish(F f, DF df, double x0, double tol) {
    double x = x0;
    for (int iter = 0; iter < kNewtonCap; ++iter) {
        const double fx = f(x);
        const double d = df(x);
        if (fx == 0.0 || d == 0.0 || !std::isfinite(d)) break;
        const double step = fx / d;
        x -= step;
        if (std::abs(step) <= tol * std::max(std::abs(x), 1e-300)) break;
    }
    return x;
}

Equilibrium make_universal(EquilibriumBranch b, double s) {
    Equilibrium e;
    e.branch = b;
    switch (b) {
        case EquilibriumBranch::Equilateral:
            e.gamma_star = kPi / 3.0;
            e.log_xi = 0.0;
            e.properness = Properness::Proper;
            break;
        case EquilibriumBranch::Antipodal:
            e.gamma_star = 0.0;
            e.properness = s < -1.0 ? Properness::Proper : Properness::Pseudo;
            break;
        case EquilibriumBranch::SinglePoint:
            e.gamma_star = kPi;
            e.properness = s < -1.0 ? Properness::Proper : Properness::Pseudo;
            break;
        default:
            throw std::logic_error("make_universal: isosceles branch");
    }
    return e;
}

} // namespace

std::string_view to_string(EquilibriumBranch b) {
    switch (b) {
        case EquilibriumBranch::Equilateral: return "equilateral";
        case EquilibriumBranch::Antipodal: return "antipodal";
        case EquilibriumBranch::SinglePoint: return "single_point";
        case EquilibriumBranch::IsoscelesLow: return "isosceles_low";
        case EquilibriumBranch::IsoscelesHigh: return "isosceles_high";
    }
    return "?";
}

std::string_view to_string(Properness pr) {
    return pr == Properness::Proper ? "proper" : "pseudo";
}

double f_profile(const RieszParam& p, double phi) {
    if (!(phi > 0.0 && phi < kPi)) {
        throw std::domain_error("f_profile: phi outside (0, pi)");
    }
    return std::cos(phi) * std::pow(std::sin(phi), -(p.s() + 1.0));
}

double f_critical_angle(const RieszParam& p) {
    const double s = p.s();
    if (!(s < -1.0)) {
        throw std::domain_error("f_critical_angle: requires s < -1");
    }
    if (s == -4.0) return kPi / 3.0;
    return std::acos(std::sqrt(-1.0 / s));
}

double f_max_value(const RieszParam& p) {
    return f_profile(p, f_critical_angle(p));
}

double g_poly(const RieszParam& p, double xi) {
    if (!(p.s() < 0.0)) {
        throw std::domain_error("g_poly: requires s < 0");
    }
    if (!(xi > 0.0 && xi < kSqrt2)) {
        throw std::domain_error("g_poly: xi outside (0, sqrt 2)");
    }
    const double e = -p.s();
    return std::pow(xi, e) - 2.0 * std::pow(xi, e - 2.0) + 1.0;
}

double g_interior_min(const RieszParam& p) {
    if (!(p.s() < -2.0)) {
        throw std::domain_error("g_interior_min: requires s < -2");
    }
    return std::sqrt(2.0 - 4.0 / -p.s());
}

std::optional<Equilibrium> solve_nonuniversal(const RieszParam& p, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("solve_nonuniversal: tol must be > 0");
    }
    const double s = p.s();
    if (!p.nonuniversal_possible()) return std::nullopt;

    const double m = -s - 2.0; // |s| - 2 > 0
    const double ln2 = std::numbers::ln2;

    Equilibrium eq;
    eq.properness = Properness::Proper;

    if (s > -4.0) {
        // gamma in (0, pi/3): root of h(t) = m t + ln(2 - e^{2t}), t = ln xi < 0.
        auto h = [m](double t) { return m * t + std::log(2.0 - std::exp(2.0 * t)); };
        auto dh = [m](double t) {
            const double e2t = std::exp(2.0 * t);
            return m - 2.0 * e2t / (2.0 - e2t);
        };
        double t;
        if (std::abs(s + 4.0) < 1e-5) {
            t = newton_polish(h, dh, std::log1p(-(s + 4.0) / 4.0), tol);
        } else {
            const double t_lo = -4.0 * ln2 / m;                    // h < 0 (asymptotic tail, x4 margin)
            const double t_hi = 0.5 * std::log(2.0 - 4.0 / -s);    // ln xi_o, h > 0
            t = solve_bracketed(h, dh, t_lo, t_hi, h(t_lo), tol);
        }
        eq.branch = EquilibriumBranch::IsoscelesLow;
        eq.log_xi = t;
        const double xi = std::exp(t);
        if (xi < std::numeric_limits<double>::min()) {
            eq.gamma_star = 0.0;
            eq.underflow_gamma = true;
        } else {
            eq.gamma_star = 2.0 * std::asin(0.5 * xi);
        }
        return eq;
    }

    // s < -4, gamma in (pi/3, pi/2).  Same log-domain equation parameterized
    // by q = 2 - e^{2t}: near the sqrt(2) endpoint t is degenerate in doubles
    // while q ~ 2^{(s+2)/2} stays well-scaled.
    auto H = [m](double q) { return 0.5 * m * std::log(2.0 - q) + std::log(q); };
    auto dH = [m](double q) { return -0.5 * m / (2.0 - q) + 1.0 / q; };
    double q;
    if (std::abs(s + 4.0) < 1e-5) {
        q = newton_polish(H, dH, 1.0 + 0.5 * (s + 4.0), tol);
    } else {
        const double q_lo = 0.25 * std::exp2(0.5 * (s + 2.0)); // H < 0 (x4 margin)
        const double q_hi = 4.0 / -s;                          // 2 - xi_o^2, H > 0
        q = solve_bracketed(H, dH, q_lo, q_hi, H(q_lo), tol);
    }
    eq.branch = EquilibriumBranch::IsoscelesHigh;
    eq.log_xi = 0.5 * (std::numbers::ln2 + std::log1p(-0.5 * q));
    eq.gamma_star = std::acos(0.5 * q); // = 2 asin(xi/2) with xi^2 = 2 - q
    return eq;
}

std::vector<Equilibrium> enumerate_equilibria(const RieszParam& p) {
    std::vector<Equilibrium> out;
    out.push_back(make_universal(EquilibriumBranch::Antipodal, p.s()));
    if (auto iso = solve_nonuniversal(p); iso && iso->branch == EquilibriumBranch::IsoscelesLow) {
        out.push_back(*iso);
    }
    out.push_back(make_universal(EquilibriumBranch::Equilateral, p.s()));
    if (auto iso = solve_nonuniversal(p); iso && iso->branch == EquilibriumBranch::IsoscelesHigh) {
        out.push_back(*iso);
    }
    out.push_back(make_universal(EquilibriumBranch::SinglePoint, p.s()));
    std::sort(out.begin(), out.end(),
              [](const Equilibrium& a, const Equilibrium& b) { return a.gamma_star < b.gamma_star; });
    return out;
}

TriangleConfig equilibrium_triangle(const Equilibrium& e) {
    return TriangleConfig::isosceles_height(e.gamma_star);
}

} // namespace riesz
