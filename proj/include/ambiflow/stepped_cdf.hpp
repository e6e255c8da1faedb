#pragma once

#include <utility>
#include <vector>

#include "ambiflow/support.hpp"

namespace ambiflow {

// CDF of a discrete distribution: positive masses at strictly increasing
// locations inside a compact support. Immutable after construction.
class SteppedCdf {
  public:
    struct Atom {
        double location;
        double mass;
    };

    // Atoms must be strictly increasing with positive masses summing to one
    // (within 1e-12) and contained in the support.
    SteppedCdf(std::vector<Atom> atoms, SupportInterval support);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const SupportInterval& support() const { return support_; }
    std::size_t size() const { return atoms_.size(); }

    // Cumulative mass up to and including atom i (z_i in the envelope
    // construction). cumulative(-1) == 0.
    double cumulative(std::ptrdiff_t i) const {
        return i < 0 ? 0.0 : cumulative_[static_cast<std::size_t>(i)];
    }

    // Right-continuous evaluation P(X <= t).
    double eval(double t) const;

    // inf{t : F(t) > y} for y in [0, 1).
    double generalized_inverse(double y) const;

    // inf{t : F(t) >= y} for y in (0, 1].
    double left_inverse(double y) const;

    // Exact integral of F over [a, b].
    double integral(double a, double b) const;

    // Support endpoints plus atom locations, increasing.
    std::vector<double> breakpoints() const;

  private:
    std::vector<Atom> atoms_;
    std::vector<double> cumulative_;
    SupportInterval support_;
};

// Empirical CDF of the samples: sorted distinct values with multiplicity/N
// masses. Values equal within the breakpoint tolerance are merged.
SteppedCdf from_samples(const std::vector<double>& values,
                        const SupportInterval& support);

// Point reflection around (center(support), 1/2), right-continuous version.
SteppedCdf reflect(const SteppedCdf& cdf);

}  // namespace ambiflow
