#include "ambiflow/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace ambiflow {

namespace {

// value(t) = c0 + c1*t + sum_i amp[i] / (pole[i] - t), poles outside the
// interval the expression is used on.
struct PieceExpr {
    double c0 = 0.0;
    double c1 = 0.0;
    double amp[2] = {0.0, 0.0};
    double pole[2] = {0.0, 0.0};
    int npoles = 0;

    double value(double t) const {
        double v = c0 + c1 * t;
        for (int i = 0; i < npoles; ++i) v += amp[i] / (pole[i] - t);
        return v;
    }

    double integral(double a, double b) const {
        double v = c0 * (b - a) + 0.5 * c1 * (b * b - a * a);
        for (int i = 0; i < npoles; ++i) {
            v += amp[i] * (std::log(std::abs(pole[i] - a)) -
                           std::log(std::abs(pole[i] - b)));
        }
        return v;
    }
};

PieceExpr expr_constant(double v) {
    PieceExpr e;
    e.c0 = v;
    return e;
}

PieceExpr expr_from_segment(const Segment& s) {
    PieceExpr e;
    switch (s.kind) {
        case Segment::Kind::Constant:
            e.c0 = s.p0;
            break;
        case Segment::Kind::Linear: {
            const double slope = (s.p1 - s.p0) / (s.end - s.begin);
            e.c1 = slope;
            e.c0 = s.p0 - slope * s.begin;
            break;
        }
        case Segment::Kind::Hyperbolic:
            e.c0 = s.p0;
            e.amp[0] = s.p1;
            e.pole[0] = s.p2;
            e.npoles = s.p1 != 0.0 ? 1 : 0;
            break;
    }
    return e;
}

// Analytic description of the CDF on an interval free of its breakpoints;
// nullopt for closure-backed CDFs.
std::optional<PieceExpr> describe(const GenericCdf& cdf, double mid) {
    if (const auto* s = cdf.as_stepped()) {
        return expr_constant(s->eval(mid));
    }
    if (const auto* p = cdf.as_piecewise()) {
        if (mid >= p->one_from()) return expr_constant(1.0);
        if (const Segment* seg = p->segment_at(mid)) {
            return expr_from_segment(*seg);
        }
        return expr_constant(mid < p->support().lo ? 0.0 : 1.0);
    }
    return std::nullopt;
}

PieceExpr difference(const PieceExpr& f, const PieceExpr& g) {
    PieceExpr d;
    d.c0 = f.c0 - g.c0;
    d.c1 = f.c1 - g.c1;
    auto add_pole = [&d](double amp, double pole) {
        if (amp == 0.0) return;
        for (int i = 0; i < d.npoles; ++i) {
            if (d.pole[i] == pole) {
                d.amp[i] += amp;
                return;
            }
        }
        d.amp[d.npoles] = amp;
        d.pole[d.npoles] = pole;
        ++d.npoles;
    };
    for (int i = 0; i < f.npoles; ++i) add_pole(f.amp[i], f.pole[i]);
    for (int i = 0; i < g.npoles; ++i) add_pole(-g.amp[i], g.pole[i]);
    return d;
}

int solve_quadratic(double a, double b, double c, double out[2]) {
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (scale == 0.0) return 0;
    a /= scale;
    b /= scale;
    c /= scale;
    if (std::abs(a) < 1e-14) {
        if (std::abs(b) < 1e-14) return 0;
        out[0] = -c / b;
        return 1;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return 0;
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(sq, b));
    int n = 0;
    if (q != 0.0) {
        out[n++] = q / a;
        out[n++] = c / q;
    } else {
        out[n++] = 0.0;
    }
    return n;
}

// Roots of the difference expression; at most two since the rationalized
// form is at most quadratic (two poles only arise from two hyperbolic
// pieces, whose slopes are zero).
int difference_roots(const PieceExpr& d, double out[2]) {
    if (d.npoles == 0) {
        return solve_quadratic(0.0, d.c1, d.c0, out);
    }
    if (d.npoles == 1) {
        const double p = d.pole[0];
        return solve_quadratic(-d.c1, d.c1 * p - d.c0, d.c0 * p + d.amp[0],
                               out);
    }
    const double p1 = d.pole[0];
    const double p2 = d.pole[1];
    return solve_quadratic(
        d.c0, -d.c0 * (p1 + p2) - (d.amp[0] + d.amp[1]),
        d.c0 * p1 * p2 + d.amp[0] * p2 + d.amp[1] * p1, out);
}

template <typename Fn>
double bisect_sign_change(const Fn& f, double a, double b, double fa) {
    for (int i = 0; i < 200 && b - a > 1e-16 * std::max(1.0, std::abs(a));
         ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Splits [u, v] at the sign changes of f sampled on a uniform refinement
// and appends the crossing locations to splits.
template <typename Fn>
void scan_sign_changes(const Fn& f, double u, double v, int samples,
                       std::vector<double>* splits) {
    double prev_t = u;
    double prev_f = f(u);
    for (int i = 1; i <= samples; ++i) {
        const double t = u + (v - u) * i / samples;
        const double ft = f(t);
        if (prev_f == 0.0 || (ft > 0.0) != (prev_f > 0.0)) {
            if (prev_f != 0.0 && ft != 0.0) {
                splits->push_back(bisect_sign_change(f, prev_t, t, prev_f));
            } else if (prev_f == 0.0) {
                splits->push_back(prev_t);
            }
        }
        prev_t = t;
        prev_f = ft;
    }
}

double integrate_abs_analytic(const PieceExpr& d, double u, double v) {
    std::vector<double> splits;
    splits.push_back(u);
    double roots[2];
    const int n = difference_roots(d, roots);
    for (int i = 0; i < n; ++i) {
        if (roots[i] > u && roots[i] < v) splits.push_back(roots[i]);
    }
    // Bisection fallback for crossings the closed form lost to rounding.
    scan_sign_changes([&d](double t) { return d.value(t); }, u, v, 8,
                      &splits);
    splits.push_back(v);
    std::sort(splits.begin(), splits.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
        total += std::abs(d.integral(splits[i], splits[i + 1]));
    }
    return total;
}

double integrate_abs_hybrid(const GenericCdf& f, const GenericCdf& g,
                            double u, double v) {
    auto d = [&f, &g](double t) { return f.eval(t) - g.eval(t); };
    std::vector<double> splits;
    splits.push_back(u);
    scan_sign_changes(d, u, v, 16, &splits);
    splits.push_back(v);
    std::sort(splits.begin(), splits.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
        const double a = splits[i];
        const double b = splits[i + 1];
        if (b - a <= 0.0) continue;
        total += std::abs(f.integral(a, b) - g.integral(a, b));
    }
    return total;
}

}  // namespace

double w1_distance(const GenericCdf& f, const GenericCdf& g) {
    std::vector<double> pts = f.breakpoints();
    const std::vector<double> pg = g.breakpoints();
    pts.insert(pts.end(), pg.begin(), pg.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2) return 0.0;
    const double width = pts.back() - pts.front();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double u = pts[i];
        const double v = pts[i + 1];
        if (v - u <= 1e-15 * std::max(1.0, width)) continue;
        const auto ef = describe(f, 0.5 * (u + v));
        const auto eg = describe(g, 0.5 * (u + v));
        if (ef && eg) {
            total += integrate_abs_analytic(difference(*ef, *eg), u, v);
        } else {
            total += integrate_abs_hybrid(f, g, u, v);
        }
    }
    return total;
}

double w1_distance(const SteppedCdf& f, const SteppedCdf& g) {
    return w1_distance(GenericCdf(f), GenericCdf(g));
}

double w1_distance(const SteppedCdf& f, const PiecewiseCdf& g) {
    return w1_distance(GenericCdf(f), GenericCdf(g));
}

double w1_distance(const PiecewiseCdf& f, const SteppedCdf& g) {
    return w1_distance(GenericCdf(f), GenericCdf(g));
}

double w1_distance(const PiecewiseCdf& f, const PiecewiseCdf& g) {
    return w1_distance(GenericCdf(f), GenericCdf(g));
}

}  // namespace ambiflow
