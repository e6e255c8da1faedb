#pragma once

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "ambiflow/piecewise_cdf.hpp"
#include "ambiflow/stepped_cdf.hpp"

namespace ambiflow {

// CDF given by evaluation (and optionally exact integration) closures.
// Used for analytically known distributions that are neither stepped nor
// made of the supported arc kinds, and for characteristic-traced slices.
struct ClosureCdf {
    std::function<double(double)> cdf;
    // Exact integral of the CDF over [a, b]; empty means "integrate
    // numerically".
    std::function<double(double, double)> integral;
    SupportInterval support;
    // Locations where the CDF is not smooth, for splitting integrals.
    std::vector<double> breakpoints;
};

// Value-semantic union of the CDF representations the solvers move around.
class GenericCdf {
  public:
    GenericCdf(SteppedCdf cdf) : rep_(std::move(cdf)) {}
    GenericCdf(PiecewiseCdf cdf) : rep_(std::move(cdf)) {}
    GenericCdf(ClosureCdf cdf) : rep_(std::move(cdf)) {}

    double eval(double t) const;
    const SupportInterval& support() const;
    std::vector<double> breakpoints() const;
    // Exact integral of the CDF over [a, b] when available; ClosureCdf
    // without an integral closure falls back to adaptive quadrature.
    double integral(double a, double b) const;

    const SteppedCdf* as_stepped() const {
        return std::get_if<SteppedCdf>(&rep_);
    }
    const PiecewiseCdf* as_piecewise() const {
        return std::get_if<PiecewiseCdf>(&rep_);
    }
    const ClosureCdf* as_closure() const {
        return std::get_if<ClosureCdf>(&rep_);
    }

  private:
    std::variant<SteppedCdf, PiecewiseCdf, ClosureCdf> rep_;
};

// CDF of the state scaled by a positive factor: if X ~ F then k*X has CDF
// u -> F(u/k). Atom locations, breakpoints and supports scale by k.
SteppedCdf scale_cdf(const SteppedCdf& cdf, double k);
PiecewiseCdf scale_cdf(const PiecewiseCdf& cdf, double k);
ClosureCdf scale_cdf(const ClosureCdf& cdf, double k);
GenericCdf scale_cdf(const GenericCdf& cdf, double k);

// Adaptive Simpson quadrature of f on [a, b] to the given tolerance.
double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, double tol);

}  // namespace ambiflow
