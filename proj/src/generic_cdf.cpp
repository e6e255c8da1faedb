#include "ambiflow/generic_cdf.hpp"

#include <algorithm>
#include <cmath>

namespace ambiflow {

double GenericCdf::eval(double t) const {
    return std::visit(
        [t](const auto& cdf) -> double {
            using T = std::decay_t<decltype(cdf)>;
            if constexpr (std::is_same_v<T, ClosureCdf>) {
                return cdf.cdf(t);
            } else {
                return cdf.eval(t);
            }
        },
        rep_);
}

const SupportInterval& GenericCdf::support() const {
    return std::visit(
        [](const auto& cdf) -> const SupportInterval& {
            using T = std::decay_t<decltype(cdf)>;
            if constexpr (std::is_same_v<T, ClosureCdf>) {
                return cdf.support;
            } else {
                return cdf.support();
            }
        },
        rep_);
}

std::vector<double> GenericCdf::breakpoints() const {
    return std::visit(
        [](const auto& cdf) -> std::vector<double> {
            using T = std::decay_t<decltype(cdf)>;
            if constexpr (std::is_same_v<T, ClosureCdf>) {
                std::vector<double> pts = cdf.breakpoints;
                pts.push_back(cdf.support.lo);
                pts.push_back(cdf.support.hi);
                std::sort(pts.begin(), pts.end());
                pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
                return pts;
            } else {
                return cdf.breakpoints();
            }
        },
        rep_);
}

double GenericCdf::integral(double a, double b) const {
    return std::visit(
        [&](const auto& cdf) -> double {
            using T = std::decay_t<decltype(cdf)>;
            if constexpr (std::is_same_v<T, ClosureCdf>) {
                if (cdf.integral) return cdf.integral(a, b);
                return adaptive_quadrature(cdf.cdf, a, b, 1e-11);
            } else {
                return cdf.integral(a, b);
            }
        },
        rep_);
}

SteppedCdf scale_cdf(const SteppedCdf& cdf, double k) {
    if (!(k > 0.0)) throw DomainError("scale factor must be positive");
    std::vector<SteppedCdf::Atom> atoms = cdf.atoms();
    for (auto& a : atoms) a.location *= k;
    return SteppedCdf(
        std::move(atoms),
        SupportInterval(cdf.support().lo * k, cdf.support().hi * k));
}

PiecewiseCdf scale_cdf(const PiecewiseCdf& cdf, double k) {
    if (!(k > 0.0)) throw DomainError("scale factor must be positive");
    std::vector<Segment> segs = cdf.segments();
    for (auto& s : segs) {
        s.begin *= k;
        s.end *= k;
        if (s.kind == Segment::Kind::Hyperbolic) {
            // base + amp/(pole - u/k) == base + k*amp/(k*pole - u)
            s.p1 *= k;
            s.p2 *= k;
        }
    }
    return PiecewiseCdf(
        std::move(segs),
        SupportInterval(cdf.support().lo * k, cdf.support().hi * k));
}

ClosureCdf scale_cdf(const ClosureCdf& cdf, double k) {
    if (!(k > 0.0)) throw DomainError("scale factor must be positive");
    ClosureCdf out;
    auto base_eval = cdf.cdf;
    out.cdf = [base_eval, k](double u) { return base_eval(u / k); };
    if (cdf.integral) {
        auto base_int = cdf.integral;
        out.integral = [base_int, k](double a, double b) {
            return k * base_int(a / k, b / k);
        };
    }
    out.support = SupportInterval(cdf.support.lo * k, cdf.support.hi * k);
    out.breakpoints = cdf.breakpoints;
    for (auto& p : out.breakpoints) p *= k;
    return out;
}

GenericCdf scale_cdf(const GenericCdf& cdf, double k) {
    if (const auto* s = cdf.as_stepped()) return GenericCdf(scale_cdf(*s, k));
    if (const auto* p = cdf.as_piecewise()) {
        return GenericCdf(scale_cdf(*p, k));
    }
    return GenericCdf(scale_cdf(*cdf.as_closure(), k));
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol,
                         depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol,
                         depth - 1);
}

}  // namespace

double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, double tol) {
    if (b <= a) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = simpson(f, a, fa, b, fb, m, fm);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

}  // namespace ambiflow
