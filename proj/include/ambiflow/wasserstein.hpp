#pragma once

#include "ambiflow/generic_cdf.hpp"

namespace ambiflow {

// Exact 1-Wasserstein distance, the integral of |F - G|. For stepped and
// piecewise operands the segment crossings are located analytically
// (closed-form linear/quadratic roots with a bisection fallback); closure
// operands contribute exact piece integrals with bisection-located
// crossings.
double w1_distance(const GenericCdf& f, const GenericCdf& g);

double w1_distance(const SteppedCdf& f, const SteppedCdf& g);
double w1_distance(const SteppedCdf& f, const PiecewiseCdf& g);
double w1_distance(const PiecewiseCdf& f, const SteppedCdf& g);
double w1_distance(const PiecewiseCdf& f, const PiecewiseCdf& g);

}  // namespace ambiflow
