#ifndef HM_INTERVAL_UNION_HPP
#define HM_INTERVAL_UNION_HPP

#include <cstddef>
#include <vector>

namespace hm {

struct Interval {
    double left;
    double right;

    double length() const { return right - left; }
};

// Finite union of disjoint closed intervals on the real line, kept sorted
// and normalized (touching or overlapping parts are merged, degenerate
// parts dropped). This is the universal set / level-set representation.
class IntervalUnion {
public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<Interval> parts);

    static IntervalUnion whole_line();

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    double length() const;
    double min() const;   // leftmost endpoint; requires non-empty
    double max() const;   // rightmost endpoint; requires non-empty
    double diam() const { return max() - min(); }

    bool contains(double x) const;

    // Set algebra. All results are normalized.
    IntervalUnion unite(const IntervalUnion& other) const;
    IntervalUnion intersect(const IntervalUnion& other) const;
    IntervalUnion subtract(const IntervalUnion& other) const;

    IntervalUnion intersect_interval(double a, double b) const;

    // |E ∩ (x-a, x+a)|
    double window_length(double x, double a) const;

    // Containment up to endpoint slack: every part of `other` lies inside
    // some part of *this after growing the parts by tol.
    bool contains_set(const IntervalUnion& other, double tol) const;

    double symmetric_difference_length(const IntervalUnion& other) const;

private:
    std::vector<Interval> parts_;
    void normalize();
};

}  // namespace hm

#endif
