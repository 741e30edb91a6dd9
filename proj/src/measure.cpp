#include "hm/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hm {

Measure Measure::make(std::vector<Atom> atoms, std::vector<DensityPiece> density) {
    for (const auto& a : atoms) {
        if (!std::isfinite(a.x)) throw std::invalid_argument("atom position must be finite");
        if (!std::isfinite(a.w) || a.w <= 0.0)
            throw std::invalid_argument("atom weight must be positive and finite");
    }
    for (const auto& p : density) {
        if (!std::isfinite(p.a) || !std::isfinite(p.b))
            throw std::invalid_argument("density endpoints must be finite");
        if (!(p.a < p.b)) throw std::invalid_argument("density piece must have a < b");
        if (!std::isfinite(p.h) || p.h < 0.0)
            throw std::invalid_argument("density height must be nonnegative and finite");
    }

    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.x < b.x; });
    std::vector<Atom> merged_atoms;
    for (const auto& a : atoms) {
        if (!merged_atoms.empty() && a.x - merged_atoms.back().x <= kAtomMergeTol) {
            merged_atoms.back().w += a.w;
        } else {
            merged_atoms.push_back(a);
        }
    }

    std::sort(density.begin(), density.end(),
              [](const DensityPiece& a, const DensityPiece& b) { return a.a < b.a; });
    std::erase_if(density, [](const DensityPiece& p) { return p.h == 0.0; });
    for (std::size_t i = 1; i < density.size(); ++i) {
        if (density[i].a < density[i - 1].b)
            throw std::invalid_argument("density pieces must have disjoint interiors");
    }
    std::vector<DensityPiece> merged_density;
    for (const auto& p : density) {
        if (!merged_density.empty() && merged_density.back().b == p.a &&
            merged_density.back().h == p.h) {
            merged_density.back().b = p.b;
        } else {
            merged_density.push_back(p);
        }
    }

    Measure m;
    m.atoms_ = std::move(merged_atoms);
    m.density_ = std::move(merged_density);
    return m;
}

double Measure::total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.w;
    for (const auto& p : density_) s += p.h * (p.b - p.a);
    return s;
}

Measure Measure::restrict(const IntervalUnion& s) const {
    std::vector<Atom> atoms;
    for (const auto& a : atoms_)
        if (s.contains(a.x)) atoms.push_back(a);

    std::vector<DensityPiece> density;
    for (const auto& p : density_) {
        IntervalUnion clipped = s.intersect_interval(p.a, p.b);
        for (const auto& iv : clipped.parts()) density.push_back({iv.left, iv.right, p.h});
    }
    return make(std::move(atoms), std::move(density));
}

std::pair<Measure, Measure> Measure::decompose() const {
    return {make({}, density_), make(atoms_, {})};
}

bool Measure::mutually_singular(const Measure& mu, const Measure& nu) {
    // Singular parts are atomic here, so: disjoint atom position sets.
    for (const auto& a : mu.atoms_)
        for (const auto& b : nu.atoms_)
            if (std::abs(a.x - b.x) <= kAtomMergeTol) return false;
    return true;
}

Measure Measure::scaled(double c) const {
    if (!(c > 0.0)) throw std::invalid_argument("scale factor must be positive");
    std::vector<Atom> atoms = atoms_;
    for (auto& a : atoms) a.w *= c;
    std::vector<DensityPiece> density = density_;
    for (auto& p : density) p.h *= c;
    return make(std::move(atoms), std::move(density));
}

Measure Measure::shifted(double s) const {
    std::vector<Atom> atoms = atoms_;
    for (auto& a : atoms) a.x += s;
    std::vector<DensityPiece> density = density_;
    for (auto& p : density) {
        p.a += s;
        p.b += s;
    }
    return make(std::move(atoms), std::move(density));
}

double Measure::support_min() const {
    if (is_zero()) throw std::domain_error("support of the zero measure");
    double m = std::numeric_limits<double>::infinity();
    if (!atoms_.empty()) m = std::min(m, atoms_.front().x);
    if (!density_.empty()) m = std::min(m, density_.front().a);
    return m;
}

double Measure::support_max() const {
    if (is_zero()) throw std::domain_error("support of the zero measure");
    double m = -std::numeric_limits<double>::infinity();
    if (!atoms_.empty()) m = std::max(m, atoms_.back().x);
    for (const auto& p : density_) m = std::max(m, p.b);
    return m;
}

}  // namespace hm
