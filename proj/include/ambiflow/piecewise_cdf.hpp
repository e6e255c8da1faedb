#pragma once

#include <vector>

#include "ambiflow/stepped_cdf.hpp"
#include "ambiflow/support.hpp"

namespace ambiflow {

// One piece of a PiecewiseCdf on the half-open interval [begin, end).
//
// Constant:   value = p0
// Linear:     value interpolates from p0 at begin to p1 at end
// Hyperbolic: value = p0 + p1 / (p2 - t), with the pole p2 outside
//             [begin, end] and p1 >= 0 so the piece is non-decreasing
struct Segment {
    enum class Kind { Constant, Linear, Hyperbolic };

    double begin = 0.0;
    double end = 0.0;
    Kind kind = Kind::Constant;
    double p0 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;

    static Segment constant(double begin, double end, double value);
    static Segment linear(double begin, double end, double y_begin,
                          double y_end);
    static Segment hyperbolic(double begin, double end, double base,
                              double amplitude, double pole);

    double value_at(double t) const;
    // Limit of the value as t -> end from the left.
    double end_value() const { return value_at(end); }
    // Exact integral of the value over [a, b] (clamped to [begin, end]).
    double integral(double a, double b) const;
    // Solves value_at(t) == y inside the segment; caller guarantees y lies
    // strictly between the endpoint values.
    double solve_value(double y) const;
};

// Exact CDF made of constant, linear and hyperbolic arcs. The segments are
// contiguous, start at support.lo and the function is zero before
// support.lo and one at and after one_from() (the last segment end).
// Jumps between segments are allowed (atoms); within a segment the value
// is continuous and non-decreasing.
class PiecewiseCdf {
  public:
    PiecewiseCdf(std::vector<Segment> segments, SupportInterval support);

    const std::vector<Segment>& segments() const { return segments_; }
    const SupportInterval& support() const { return support_; }

    // Location from which the CDF equals one.
    double one_from() const { return one_from_; }

    double eval(double t) const;
    double generalized_inverse(double y) const;
    double left_inverse(double y) const;
    double integral(double a, double b) const;
    std::vector<double> breakpoints() const;

    // Segment whose [begin, end) contains t, or nullptr outside all
    // segments.
    const Segment* segment_at(double t) const;

  private:
    std::vector<Segment> segments_;
    SupportInterval support_;
    double one_from_ = 0.0;
};

// Step-function representation of a discrete CDF as constant pieces.
PiecewiseCdf to_piecewise(const SteppedCdf& cdf);

// Point reflection around (center(support), 1/2), right-continuous version.
PiecewiseCdf reflect(const PiecewiseCdf& cdf);

}  // namespace ambiflow
