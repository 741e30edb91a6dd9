#ifndef HM_CANTOR_HPP
#define HM_CANTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hm/interval_union.hpp"
#include "hm/measure.hpp"
#include "hm/report.hpp"

namespace hm::cantor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Index (n, j), 1 <= j <= 2^n, ordered lexicographically.
struct CantorIndex {
    int n;
    std::int64_t j;

    friend bool operator==(const CantorIndex&, const CantorIndex&) = default;
};

bool index_valid(CantorIndex i);
bool index_le(CantorIndex a, CantorIndex b);
CantorIndex index_successor(CantorIndex i);
CantorIndex index_predecessor(CantorIndex i);  // throws for (1,1)

struct RationalInterval {
    Rational left, right;

    Rational length() const { return right - left; }
};

// k(1,1) = seed, then k triples along the lexicographic successor;
// m(n,j) = k(n,j) - n.
struct KSchedule {
    std::int64_t seed_k11;
    std::vector<std::pair<CantorIndex, BigInt>> values;  // lexicographic order

    const BigInt& k(CantorIndex i) const;
    BigInt m(CantorIndex i) const;
};

KSchedule k_schedule(std::int64_t seed_k11, CantorIndex upto);

inline constexpr int kDepthCap = 20;

// The 2^n level-n intervals of the middle-thirds construction, each of
// exact length 3^-n.
std::vector<RationalInterval> k_intervals(int n);
RationalInterval k_interval(CantorIndex i);

// E_m inside [0,1]: the middle closed thirds of the 2^(m-1) gaps opened at
// stage m; each has length 3^-(m+1).
std::vector<RationalInterval> e_m_unit(int m);

// Affine image of E_m in K_{n,j}; 2^(m-1) intervals of size 3^-(n+m+1).
std::vector<RationalInterval> e_block(CantorIndex i, int m);

// |E_{n,j,m}| = 2^(m-1) / 3^(n+m+1), valid for arbitrary m.
Rational e_block_total_length(int n, const BigInt& m);

struct Block {
    CantorIndex idx;
    BigInt k;  // k(n,j)
    bool enumerated;
    std::vector<RationalInterval> intervals;  // filled when enumerated
    Rational total_length;                    // exact closed form
    bool length_exact;                        // false when k is too deep to materialize
    RationalInterval hull;                    // K_{n,j}
};

// Truncation of the weakly homogeneous set: K_N plus the scheduled blocks
// for every index up to (N, 2^N). Blocks whose interval count exceeds the
// cap stay un-enumerated (with exact total length and hull) and are
// reported, never silently dropped.
struct CantorSet {
    int levels;
    std::int64_t seed_k11;
    std::vector<RationalInterval> k_part;
    std::vector<Block> blocks;

    bool fully_enumerated() const;
    std::vector<CantorIndex> skipped_indices() const;
    // All enumerated material (K_N plus enumerated blocks).
    std::vector<RationalInterval> enumerated_intervals() const;
    IntervalUnion to_interval_union() const;  // throws unless fully enumerated
    IntervalUnion enumerated_interval_union() const;
};

CantorSet build_set(int levels, std::int64_t seed_k11,
                    std::size_t max_intervals_per_block = std::size_t{1} << 20);

// Level-L atomic approximation of the Cantor measure: 2^L atoms of weight
// 2^-L at the K_{L,j} midpoints. For x with dist(x, K_L) >= d the
// transform error is bounded by 3^-L / d^2.
Measure cantor_atoms(int L);

// Split of cantor_atoms(L) by membership in K_{n,j} ∪ K_{n,j-1} (with the
// level-(n-1) predecessor interval when j = 1). Returns (near, far).
std::pair<Measure, Measure> split_at(CantorIndex i, int L);

Rational rational_window_length(const std::vector<RationalInterval>& set, const Rational& x,
                                const Rational& a);

// Exact window ratio at x0 = 0 with radius delta_n = (5/3) 3^-k(n,1) on the
// truncated set; second member is the contribution of the scheduled block
// alone (equals 1/10 exactly).
std::pair<Rational, Rational> lemma41_ratio(const CantorSet& s, int n);

CheckReport check_lemma42(int levels, std::int64_t seed_k11, int samples_per_block);
CheckReport check_thm16_decay(int levels, std::int64_t seed_k11, double t);

double to_double(const Rational& r);

}  // namespace hm::cantor

#endif
