#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "riesz/energy.hpp"
#include "riesz/params.hpp"

namespace riesz {

enum class EquilibriumBranch {
    Equilateral,   // gamma = pi/3, all s
    Antipodal,     // gamma = 0
    SinglePoint,   // gamma = pi
    IsoscelesLow,  // gamma in (0, pi/3), s in (-4, -2)
    IsoscelesHigh, // gamma in (pi/3, pi/2), s < -4
};

enum class Properness { Proper, Pseudo };

std::string_view to_string(EquilibriumBranch b);
std::string_view to_string(Properness pr);

// A branch-tagged critical point of the mean pair energy.  log_xi (xi = chord
// of gamma) is present on the isosceles branches where it is the solver's
// primary variable; gamma_star is derived from it.  underflow_gamma marks the
// regime near s = -2 where xi underflows doubles while log_xi stays exact.
struct Equilibrium {
    EquilibriumBranch branch;
    double gamma_star;
    std::optional<double> log_xi;
    Properness properness;
    bool underflow_gamma = false;
};

// F_s(phi) = cos(phi) / sin^(s+1)(phi) on (0, pi); antisymmetric about pi/2.
double f_profile(const RieszParam& p, double phi);

// The unique interior maximum location of F_s for s < -1:
// phi = arccos(sqrt(-1/s)); equals pi/3 exactly at s = -4.
double f_critical_angle(const RieszParam& p);

// L(s) = F_s at its critical angle, s < -1.
double f_max_value(const RieszParam& p);

// g_s(xi) = xi^|s| - 2 xi^(|s|-2) + 1 for s < 0, xi in (0, sqrt 2).
// g_s(1) = 0 for every s; g_s'(1) = s + 4.
double g_poly(const RieszParam& p, double xi);

// Location xi_o(s) = sqrt(2 - 4/|s|) of the unique interior minimum of g_s,
// s < -2.
double g_interior_min(const RieszParam& p);

// The non-universal isosceles equilibrium, when it exists (s < -2, s != -4).
// Solved from the log-domain equation h(t) = (|s|-2) t + ln(2 - e^{2t}) = 0
// with t = ln xi; tol is the relative tolerance on the solved variable.
std::optional<Equilibrium> solve_nonuniversal(const RieszParam& p, double tol = 1e-12);

// All force equilibria (proper and pseudo) at this s: the three universal
// shapes plus the isosceles branch when present.  Ordered by gamma_star.
// Cardinality 4 for s < -2 with s != -4, else 3.
std::vector<Equilibrium> enumerate_equilibria(const RieszParam& p);

// Isosceles triangle representative of an equilibrium: alpha = beta =
// (pi - gamma_star)/2.
TriangleConfig equilibrium_triangle(const Equilibrium& e);

} // namespace riesz
