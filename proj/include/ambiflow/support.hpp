#pragma once

#include <algorithm>
#include <cmath>

#include "ambiflow/errors.hpp"

namespace ambiflow {

// Closed interval [lo, hi] carrying the physical state range of a CDF.
struct SupportInterval {
    double lo = 0.0;
    double hi = 0.0;

    SupportInterval() = default;
    SupportInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo <= hi)) {
            throw DomainError("support interval requires lo <= hi");
        }
    }

    double width() const { return hi - lo; }
    double center() const { return 0.5 * (lo + hi); }
    bool contains(double t, double tol = 0.0) const {
        return t >= lo - tol && t <= hi + tol;
    }
    bool degenerate() const { return hi == lo; }
};

// Absolute tolerance for breakpoint comparisons, scaled by the support width.
inline double breakpoint_tol(const SupportInterval& support) {
    return 1e-12 * std::max(1.0, support.width());
}

}  // namespace ambiflow
