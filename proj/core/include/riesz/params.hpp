#pragma once

#include <cmath>
#include <stdexcept>

namespace riesz {

// Riesz exponent s with the regime predicates used throughout the library.
// s must be finite; everything else about the parameter is derived.
class RieszParam {
public:
    explicit RieszParam(double s) : s_(s) {
        if (!std::isfinite(s)) {
            throw std::invalid_argument("RieszParam: s must be finite");
        }
    }

    double s() const { return s_; }

    // Logarithmic-energy branch.
    bool is_log() const { return s_ == 0.0; }

    // Pairwise forces stay defined at coincident particles.
    bool force_proper_everywhere() const { return s_ < -1.0; }

    // The s-dependent isosceles branch can exist.
    bool nonuniversal_possible() const { return s_ < -2.0 && s_ != -4.0; }

private:
    double s_;
};

} // namespace riesz
