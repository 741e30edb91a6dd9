#include "hm/interval_union.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hm {

IntervalUnion::IntervalUnion(std::vector<Interval> parts) : parts_(std::move(parts)) {
    for (const auto& iv : parts_) {
        if (!std::isfinite(iv.left) && iv.left != -std::numeric_limits<double>::infinity())
            throw std::invalid_argument("interval endpoint is NaN");
        if (!std::isfinite(iv.right) && iv.right != std::numeric_limits<double>::infinity())
            throw std::invalid_argument("interval endpoint is NaN");
    }
    normalize();
}

IntervalUnion IntervalUnion::whole_line() {
    return IntervalUnion({{-std::numeric_limits<double>::infinity(),
                           std::numeric_limits<double>::infinity()}});
}

void IntervalUnion::normalize() {
    std::erase_if(parts_, [](const Interval& iv) { return !(iv.left < iv.right); });
    std::sort(parts_.begin(), parts_.end(),
              [](const Interval& a, const Interval& b) { return a.left < b.left; });
    std::vector<Interval> merged;
    for (const auto& iv : parts_) {
        if (!merged.empty() && iv.left <= merged.back().right) {
            merged.back().right = std::max(merged.back().right, iv.right);
        } else {
            merged.push_back(iv);
        }
    }
    parts_ = std::move(merged);
}

double IntervalUnion::length() const {
    double s = 0.0;
    for (const auto& iv : parts_) s += iv.length();
    return s;
}

double IntervalUnion::min() const {
    if (parts_.empty()) throw std::domain_error("min of empty interval union");
    return parts_.front().left;
}

double IntervalUnion::max() const {
    if (parts_.empty()) throw std::domain_error("max of empty interval union");
    return parts_.back().right;
}

bool IntervalUnion::contains(double x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](double v, const Interval& iv) { return v < iv.left; });
    if (it == parts_.begin()) return false;
    --it;
    return x <= it->right;
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return IntervalUnion(std::move(all));
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < parts_.size() && j < other.parts_.size()) {
        const Interval& a = parts_[i];
        const Interval& b = other.parts_[j];
        double lo = std::max(a.left, b.left);
        double hi = std::min(a.right, b.right);
        if (lo < hi) out.push_back({lo, hi});
        if (a.right < b.right)
            ++i;
        else
            ++j;
    }
    return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::subtract(const IntervalUnion& other) const {
    std::vector<Interval> out;
    for (const auto& a : parts_) {
        double cursor = a.left;
        for (const auto& b : other.parts_) {
            if (b.right <= cursor) continue;
            if (b.left >= a.right) break;
            if (b.left > cursor) out.push_back({cursor, std::min(b.left, a.right)});
            cursor = std::max(cursor, b.right);
            if (cursor >= a.right) break;
        }
        if (cursor < a.right) out.push_back({cursor, a.right});
    }
    return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::intersect_interval(double a, double b) const {
    return intersect(IntervalUnion({{a, b}}));
}

double IntervalUnion::window_length(double x, double a) const {
    return intersect_interval(x - a, x + a).length();
}

bool IntervalUnion::contains_set(const IntervalUnion& other, double tol) const {
    for (const auto& iv : other.parts_) {
        bool covered = false;
        for (const auto& mine : parts_) {
            if (mine.left - tol <= iv.left && iv.right <= mine.right + tol) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

double IntervalUnion::symmetric_difference_length(const IntervalUnion& other) const {
    return subtract(other).length() + other.subtract(*this).length();
}

}  // namespace hm
