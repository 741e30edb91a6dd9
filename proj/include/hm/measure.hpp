#ifndef HM_MEASURE_HPP
#define HM_MEASURE_HPP

#include <utility>
#include <vector>

#include "hm/interval_union.hpp"

namespace hm {

struct Atom {
    double x;
    double w;  // mass, > 0
};

struct DensityPiece {
    double a;
    double b;
    double h;  // mass per length, >= 0
};

// Finite positive measure on R: a purely atomic part plus a piecewise
// constant density. Atoms are sorted by position, pieces by left endpoint;
// atoms closer than 1e-14 are merged, adjacent equal-height pieces fused.
class Measure {
public:
    Measure() = default;
    static Measure make(std::vector<Atom> atoms, std::vector<DensityPiece> density);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<DensityPiece>& density() const { return density_; }

    double total_mass() const;
    bool is_zero() const { return atoms_.empty() && density_.empty(); }
    bool purely_atomic() const { return density_.empty(); }
    bool purely_ac() const { return atoms_.empty(); }

    Measure restrict(const IntervalUnion& s) const;

    // (absolutely continuous part, singular part)
    std::pair<Measure, Measure> decompose() const;

    static bool mutually_singular(const Measure& mu, const Measure& nu);

    Measure scaled(double c) const;
    Measure shifted(double s) const;

    // Hull of the support; requires a nonzero measure.
    double support_min() const;
    double support_max() const;

    static constexpr double kAtomMergeTol = 1e-14;

private:
    std::vector<Atom> atoms_;
    std::vector<DensityPiece> density_;
};

}  // namespace hm

#endif
