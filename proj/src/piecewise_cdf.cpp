#include "ambiflow/piecewise_cdf.hpp"

#include <algorithm>
#include <cmath>

namespace ambiflow {

namespace {
constexpr double kValueTol = 1e-9;
}  // namespace

Segment Segment::constant(double begin, double end, double value) {
    Segment s;
    s.begin = begin;
    s.end = end;
    s.kind = Kind::Constant;
    s.p0 = value;
    return s;
}

Segment Segment::linear(double begin, double end, double y_begin,
                        double y_end) {
    Segment s;
    s.begin = begin;
    s.end = end;
    s.kind = Kind::Linear;
    s.p0 = y_begin;
    s.p1 = y_end;
    return s;
}

Segment Segment::hyperbolic(double begin, double end, double base,
                            double amplitude, double pole) {
    Segment s;
    s.begin = begin;
    s.end = end;
    s.kind = Kind::Hyperbolic;
    s.p0 = base;
    s.p1 = amplitude;
    s.p2 = pole;
    return s;
}

double Segment::value_at(double t) const {
    switch (kind) {
        case Kind::Constant:
            return p0;
        case Kind::Linear: {
            if (end == begin) return p0;
            const double w = (t - begin) / (end - begin);
            return p0 + (p1 - p0) * w;
        }
        case Kind::Hyperbolic:
            return p0 + p1 / (p2 - t);
    }
    return p0;
}

double Segment::integral(double a, double b) const {
    const double lo = std::max(a, begin);
    const double hi = std::min(b, end);
    if (hi <= lo) return 0.0;
    switch (kind) {
        case Kind::Constant:
            return p0 * (hi - lo);
        case Kind::Linear:
            return 0.5 * (value_at(lo) + value_at(hi)) * (hi - lo);
        case Kind::Hyperbolic:
            return p0 * (hi - lo) +
                   p1 * (std::log(std::abs(p2 - lo)) -
                         std::log(std::abs(p2 - hi)));
    }
    return 0.0;
}

double Segment::solve_value(double y) const {
    switch (kind) {
        case Kind::Constant:
            return begin;
        case Kind::Linear: {
            const double dy = p1 - p0;
            if (std::abs(dy) < 1e-300) return begin;
            return begin + (y - p0) / dy * (end - begin);
        }
        case Kind::Hyperbolic: {
            const double dy = y - p0;
            if (std::abs(dy) < 1e-300) return begin;
            return p2 - p1 / dy;
        }
    }
    return begin;
}

PiecewiseCdf::PiecewiseCdf(std::vector<Segment> segments,
                           SupportInterval support)
    : support_(support) {
    const double tol = breakpoint_tol(support_);
    segments_.reserve(segments.size());
    for (const auto& s : segments) {
        if (s.end - s.begin <= 0.0) {
            if (s.end - s.begin < -tol) {
                throw DomainError("segment with negative width");
            }
            continue;  // zero-width, drop
        }
        segments_.push_back(s);
    }
    double expected_begin = support_.lo;
    double prev_value = 0.0;
    for (auto& s : segments_) {
        if (std::abs(s.begin - expected_begin) > tol) {
            throw DomainError("segments must be contiguous from support.lo");
        }
        const double v0 = s.value_at(s.begin);
        const double v1 = s.end_value();
        if (s.kind == Segment::Kind::Hyperbolic) {
            if (!(s.p2 > s.end || s.p2 < s.begin)) {
                throw DomainError("hyperbolic pole inside segment");
            }
            if (s.p1 < -1e-12) {
                throw DomainError("hyperbolic amplitude must be non-negative");
            }
        }
        if (v0 < -kValueTol || v1 > 1.0 + kValueTol || v1 < v0 - kValueTol) {
            throw DomainError("segment values must be non-decreasing in [0,1]");
        }
        if (v0 < prev_value - kValueTol) {
            throw DomainError("CDF values must be non-decreasing");
        }
        prev_value = v1;
        expected_begin = s.end;
    }
    one_from_ = segments_.empty() ? support_.lo : segments_.back().end;
    if (one_from_ > support_.hi + tol) {
        throw DomainError("CDF must reach one inside the support");
    }
}

double PiecewiseCdf::eval(double t) const {
    if (t >= one_from_) return 1.0;
    if (segments_.empty() || t < segments_.front().begin) return 0.0;
    auto it = std::upper_bound(
        segments_.begin(), segments_.end(), t,
        [](double value, const Segment& s) { return value < s.begin; });
    const auto& s = *(it - 1);
    return std::min(1.0, std::max(0.0, s.value_at(t)));
}

double PiecewiseCdf::generalized_inverse(double y) const {
    if (!(y >= 0.0 && y < 1.0)) {
        throw DomainError("generalized inverse requires y in [0, 1)");
    }
    for (const auto& s : segments_) {
        const double v0 = s.value_at(s.begin);
        if (v0 > y) return s.begin;
        const double v1 = s.end_value();
        if (v1 > y && s.kind != Segment::Kind::Constant && v1 > v0) {
            return s.solve_value(y);
        }
    }
    return one_from_;
}

double PiecewiseCdf::left_inverse(double y) const {
    if (!(y > 0.0 && y <= 1.0)) {
        throw DomainError("left inverse requires y in (0, 1]");
    }
    for (const auto& s : segments_) {
        const double v0 = s.value_at(s.begin);
        if (v0 >= y) return s.begin;
        const double v1 = s.end_value();
        if (v1 > y && s.kind != Segment::Kind::Constant && v1 > v0) {
            return s.solve_value(y);
        }
    }
    return one_from_;
}

const Segment* PiecewiseCdf::segment_at(double t) const {
    if (segments_.empty() || t < segments_.front().begin ||
        t >= segments_.back().end) {
        return nullptr;
    }
    auto it = std::upper_bound(
        segments_.begin(), segments_.end(), t,
        [](double value, const Segment& s) { return value < s.begin; });
    return &*(it - 1);
}

double PiecewiseCdf::integral(double a, double b) const {
    if (b <= a) return 0.0;
    double sum = 0.0;
    for (const auto& s : segments_) sum += s.integral(a, b);
    const double tail_lo = std::max(a, one_from_);
    if (b > tail_lo) sum += b - tail_lo;
    return sum;
}

std::vector<double> PiecewiseCdf::breakpoints() const {
    std::vector<double> pts;
    pts.reserve(segments_.size() + 3);
    pts.push_back(support_.lo);
    for (const auto& s : segments_) pts.push_back(s.begin);
    pts.push_back(one_from_);
    pts.push_back(support_.hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

PiecewiseCdf to_piecewise(const SteppedCdf& cdf) {
    std::vector<Segment> segs;
    const auto& atoms = cdf.atoms();
    double begin = cdf.support().lo;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].location > begin) {
            segs.push_back(Segment::constant(
                begin, atoms[i].location,
                cdf.cumulative(static_cast<std::ptrdiff_t>(i) - 1)));
        }
        begin = atoms[i].location;
    }
    return PiecewiseCdf(std::move(segs), cdf.support());
}

PiecewiseCdf reflect(const PiecewiseCdf& cdf) {
    const double pivot = cdf.support().lo + cdf.support().hi;
    std::vector<Segment> segs;
    segs.reserve(cdf.segments().size() + 1);
    if (cdf.one_from() < cdf.support().hi) {
        segs.push_back(Segment::constant(cdf.support().lo,
                                         pivot - cdf.one_from(), 0.0));
    }
    for (auto it = cdf.segments().rbegin(); it != cdf.segments().rend();
         ++it) {
        const Segment& s = *it;
        const double nb = pivot - s.end;
        const double ne = pivot - s.begin;
        switch (s.kind) {
            case Segment::Kind::Constant:
                segs.push_back(Segment::constant(nb, ne, 1.0 - s.p0));
                break;
            case Segment::Kind::Linear:
                segs.push_back(Segment::linear(nb, ne, 1.0 - s.end_value(),
                                               1.0 - s.value_at(s.begin)));
                break;
            case Segment::Kind::Hyperbolic:
                segs.push_back(Segment::hyperbolic(nb, ne, 1.0 - s.p0, s.p1,
                                                   pivot - s.p2));
                break;
        }
    }
    // Trailing pieces that already sit at one shorten the one-region.
    while (!segs.empty() && segs.back().kind == Segment::Kind::Constant &&
           segs.back().p0 >= 1.0 - 1e-15) {
        segs.pop_back();
    }
    return PiecewiseCdf(std::move(segs), cdf.support());
}

}  // namespace ambiflow
