#include "ambiflow/stepped_cdf.hpp"

#include <algorithm>
#include <cmath>

namespace ambiflow {

SteppedCdf::SteppedCdf(std::vector<Atom> atoms, SupportInterval support)
    : atoms_(std::move(atoms)), support_(support) {
    if (atoms_.empty()) {
        throw EmptySampleError("stepped CDF requires at least one atom");
    }
    const double tol = breakpoint_tol(support_);
    double total = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!(atoms_[i].mass > 0.0)) {
            throw DomainError("atom masses must be positive");
        }
        if (i > 0 && !(atoms_[i - 1].location < atoms_[i].location)) {
            throw DomainError("atom locations must be strictly increasing");
        }
        total += atoms_[i].mass;
        cumulative_.push_back(total);
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw DomainError("atom masses must sum to one");
    }
    cumulative_.back() = 1.0;
    if (atoms_.front().location < support_.lo - tol ||
        atoms_.back().location > support_.hi + tol) {
        throw DomainError("atoms outside the support interval");
    }
}

double SteppedCdf::eval(double t) const {
    auto it = std::upper_bound(
        atoms_.begin(), atoms_.end(), t,
        [](double value, const Atom& a) { return value < a.location; });
    if (it == atoms_.begin()) return 0.0;
    return cumulative_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double SteppedCdf::generalized_inverse(double y) const {
    if (!(y >= 0.0 && y < 1.0)) {
        throw DomainError("generalized inverse requires y in [0, 1)");
    }
    // First atom whose cumulative mass exceeds y.
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), y);
    return atoms_[static_cast<std::size_t>(it - cumulative_.begin())].location;
}

double SteppedCdf::left_inverse(double y) const {
    if (!(y > 0.0 && y <= 1.0)) {
        throw DomainError("left inverse requires y in (0, 1]");
    }
    auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), y);
    return atoms_[static_cast<std::size_t>(it - cumulative_.begin())].location;
}

double SteppedCdf::integral(double a, double b) const {
    if (b <= a) return 0.0;
    double sum = 0.0;
    // F is constant between consecutive atom locations, zero before the
    // first and one after the last.
    for (std::size_t i = 0; i + 1 < atoms_.size(); ++i) {
        const double lo = std::max(a, atoms_[i].location);
        const double hi = std::min(b, atoms_[i + 1].location);
        if (hi > lo) sum += cumulative_[i] * (hi - lo);
    }
    const double tail_lo = std::max(a, atoms_.back().location);
    if (b > tail_lo) sum += b - tail_lo;
    return sum;
}

std::vector<double> SteppedCdf::breakpoints() const {
    std::vector<double> pts;
    pts.reserve(atoms_.size() + 2);
    pts.push_back(support_.lo);
    for (const auto& a : atoms_) pts.push_back(a.location);
    pts.push_back(support_.hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

SteppedCdf from_samples(const std::vector<double>& values,
                        const SupportInterval& support) {
    if (values.empty()) {
        throw EmptySampleError("empirical CDF requires at least one sample");
    }
    const double tol = breakpoint_tol(support);
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < support.lo - tol || sorted.back() > support.hi + tol) {
        throw DomainError("sample value outside the support interval");
    }
    const double mass = 1.0 / static_cast<double>(sorted.size());
    std::vector<SteppedCdf::Atom> atoms;
    for (double v : sorted) {
        if (!atoms.empty() && v - atoms.back().location <= tol) {
            atoms.back().mass += mass;
        } else {
            atoms.push_back({v, mass});
        }
    }
    return SteppedCdf(std::move(atoms), support);
}

SteppedCdf reflect(const SteppedCdf& cdf) {
    const double pivot = cdf.support().lo + cdf.support().hi;
    std::vector<SteppedCdf::Atom> atoms(cdf.atoms().size());
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto& src = cdf.atoms()[cdf.atoms().size() - 1 - i];
        atoms[i] = {pivot - src.location, src.mass};
    }
    return SteppedCdf(std::move(atoms), cdf.support());
}

}  // namespace ambiflow
