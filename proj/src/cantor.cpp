#include "hm/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hm/level_sets.hpp"
#include "hm/transform.hpp"

namespace hm::cantor {

namespace {

BigInt pow_big(const BigInt& base, const BigInt& exp) {
    BigInt r = 1, b = base, e = exp;
    while (e > 0) {
        if ((e & 1) != 0) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational pow3_inv(const BigInt& k) { return Rational(1, pow_big(3, k)); }

// Largest k we still raise 3 to as an exact integer; beyond this the
// recurrence has left every floating window anyway.
constexpr std::int64_t kExactPowCap = 100000;

}  // namespace

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool index_valid(CantorIndex i) {
    return i.n >= 1 && i.n <= 62 && i.j >= 1 && i.j <= (std::int64_t{1} << i.n);
}

bool index_le(CantorIndex a, CantorIndex b) {
    return a.n < b.n || (a.n == b.n && a.j <= b.j);
}

CantorIndex index_successor(CantorIndex i) {
    if (!index_valid(i)) throw std::invalid_argument("index_successor: invalid index");
    if (i.j == (std::int64_t{1} << i.n)) return {i.n + 1, 1};
    return {i.n, i.j + 1};
}

CantorIndex index_predecessor(CantorIndex i) {
    if (!index_valid(i)) throw std::invalid_argument("index_predecessor: invalid index");
    if (i.n == 1 && i.j == 1) throw std::domain_error("index_predecessor: (1,1) has none");
    if (i.j == 1) return {i.n - 1, std::int64_t{1} << (i.n - 1)};
    return {i.n, i.j - 1};
}

const BigInt& KSchedule::k(CantorIndex i) const {
    for (const auto& [idx, v] : values)
        if (idx == i) return v;
    throw std::out_of_range("KSchedule: index beyond computed range");
}

BigInt KSchedule::m(CantorIndex i) const { return k(i) - i.n; }

KSchedule k_schedule(std::int64_t seed_k11, CantorIndex upto) {
    if (seed_k11 < 2) throw std::invalid_argument("k_schedule: seed must be >= 2 so m(1,1) >= 1");
    if (!index_valid(upto)) throw std::invalid_argument("k_schedule: invalid upto index");
    KSchedule s;
    s.seed_k11 = seed_k11;
    CantorIndex i{1, 1};
    BigInt k = seed_k11;
    while (true) {
        s.values.push_back({i, k});
        if (i == upto) break;
        i = index_successor(i);
        k *= 3;
    }
    return s;
}

std::vector<RationalInterval> k_intervals(int n) {
    if (n < 1 || n > kDepthCap) throw std::invalid_argument("k_intervals: level out of range");
    std::vector<RationalInterval> cur{{Rational(0), Rational(1)}};
    for (int level = 1; level <= n; ++level) {
        std::vector<RationalInterval> next;
        next.reserve(cur.size() * 2);
        for (const auto& iv : cur) {
            Rational third = iv.length() / 3;
            next.push_back({iv.left, iv.left + third});
            next.push_back({iv.right - third, iv.right});
        }
        cur = std::move(next);
    }
    return cur;
}

RationalInterval k_interval(CantorIndex i) {
    if (!index_valid(i) || i.n > kDepthCap)
        throw std::invalid_argument("k_interval: index out of range");
    Rational left = 0;
    Rational len = 1;
    for (int bit = i.n - 1; bit >= 0; --bit) {
        len /= 3;
        if (((i.j - 1) >> bit) & 1) left += 2 * len;
    }
    return {left, left + len};
}

std::vector<RationalInterval> e_m_unit(int m) {
    if (m < 1 || m > kDepthCap + 1) throw std::invalid_argument("e_m_unit: stage out of range");
    // Gaps opened at stage m are the middle thirds of the level-(m-1)
    // intervals; E_m takes the middle closed third of each gap.
    std::vector<RationalInterval> parents =
        (m == 1) ? std::vector<RationalInterval>{{Rational(0), Rational(1)}} : k_intervals(m - 1);
    Rational u = pow3_inv(m + 1);
    std::vector<RationalInterval> out;
    out.reserve(parents.size());
    for (const auto& p : parents) out.push_back({p.left + 4 * u, p.left + 5 * u});
    return out;
}

std::vector<RationalInterval> e_block(CantorIndex i, int m) {
    RationalInterval home = k_interval(i);
    Rational scale = pow3_inv(i.n);
    std::vector<RationalInterval> out = e_m_unit(m);
    for (auto& iv : out) {
        iv.left = home.left + iv.left * scale;
        iv.right = home.left + iv.right * scale;
    }
    return out;
}

Rational e_block_total_length(int n, const BigInt& m) {
    if (m < 1) throw std::invalid_argument("e_block_total_length: m must be positive");
    return Rational(pow_big(2, m - 1), pow_big(3, m + n + 1));
}

bool CantorSet::fully_enumerated() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.enumerated; });
}

std::vector<CantorIndex> CantorSet::skipped_indices() const {
    std::vector<CantorIndex> out;
    for (const auto& b : blocks)
        if (!b.enumerated) out.push_back(b.idx);
    return out;
}

std::vector<RationalInterval> CantorSet::enumerated_intervals() const {
    std::vector<RationalInterval> out = k_part;
    for (const auto& b : blocks)
        if (b.enumerated) out.insert(out.end(), b.intervals.begin(), b.intervals.end());
    std::sort(out.begin(), out.end(),
              [](const RationalInterval& a, const RationalInterval& b) { return a.left < b.left; });
    return out;
}

IntervalUnion CantorSet::to_interval_union() const {
    if (!fully_enumerated())
        throw std::runtime_error(
            "CantorSet: schedule depth exceeds the enumeration cap; "
            "un-enumerated blocks present");
    return enumerated_interval_union();
}

IntervalUnion CantorSet::enumerated_interval_union() const {
    std::vector<Interval> parts;
    for (const auto& iv : enumerated_intervals())
        parts.push_back({to_double(iv.left), to_double(iv.right)});
    return IntervalUnion(std::move(parts));
}

CantorSet build_set(int levels, std::int64_t seed_k11, std::size_t max_intervals_per_block) {
    if (levels < 1 || levels > kDepthCap) throw std::invalid_argument("build_set: bad level");
    CantorSet s;
    s.levels = levels;
    s.seed_k11 = seed_k11;
    s.k_part = k_intervals(levels);

    CantorIndex last{levels, std::int64_t{1} << levels};
    KSchedule sched = k_schedule(seed_k11, last);
    for (const auto& [idx, k] : sched.values) {
        Block b;
        b.idx = idx;
        b.k = k;
        b.hull = k_interval(idx);
        BigInt m = k - idx.n;
        b.length_exact = (k <= kExactPowCap);
        b.total_length = b.length_exact ? e_block_total_length(idx.n, m) : Rational(0);
        bool countable = false;
        if (m <= kDepthCap + 1) {
            int mi = m.convert_to<int>();
            countable = (std::size_t{1} << (mi - 1)) <= max_intervals_per_block;
        }
        b.enumerated = countable;
        if (b.enumerated) b.intervals = e_block(idx, m.convert_to<int>());
        s.blocks.push_back(std::move(b));
    }
    return s;
}

Measure cantor_atoms(int L) {
    if (L < 1 || L > kDepthCap) throw std::invalid_argument("cantor_atoms: level out of range");
    const std::uint64_t count = std::uint64_t{1} << L;
    // Level-L left endpoints over the common denominator 3^L.
    double denom = 1.0;
    for (int i = 0; i < L; ++i) denom *= 3.0;
    std::vector<Atom> atoms;
    atoms.reserve(count);
    const double w = std::ldexp(1.0, -L);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        // numerator accumulates in base 3, scanning choices MSB-first
        std::uint64_t num = 0;
        for (int bit = L - 1; bit >= 0; --bit) {
            num *= 3;
            if ((idx >> bit) & 1) num += 2;
        }
        double mid = (2.0 * static_cast<double>(num) + 1.0) / (2.0 * denom);
        atoms.push_back({mid, w});
    }
    return Measure::make(std::move(atoms), {});
}

std::pair<Measure, Measure> split_at(CantorIndex i, int L) {
    if (!index_valid(i)) throw std::invalid_argument("split_at: invalid index");
    if (L < i.n || L > kDepthCap) throw std::invalid_argument("split_at: need n <= L <= cap");
    Measure full = cantor_atoms(L);
    const auto& atoms = full.atoms();

    bool has_pred = !(i.n == 1 && i.j == 1);
    CantorIndex pred = has_pred ? index_predecessor(i) : i;

    std::vector<Atom> near, far;
    for (std::size_t idx = 0; idx < atoms.size(); ++idx) {
        bool in_main = (static_cast<std::int64_t>(idx >> (L - i.n)) == i.j - 1);
        bool in_pred =
            has_pred && (static_cast<std::int64_t>(idx >> (L - pred.n)) == pred.j - 1);
        if (in_main || in_pred)
            near.push_back(atoms[idx]);
        else
            far.push_back(atoms[idx]);
    }
    return {Measure::make(std::move(near), {}), Measure::make(std::move(far), {})};
}

Rational rational_window_length(const std::vector<RationalInterval>& set, const Rational& x,
                                const Rational& a) {
    Rational lo = x - a, hi = x + a, total = 0;
    for (const auto& iv : set) {
        Rational l = std::max(iv.left, lo);
        Rational r = std::min(iv.right, hi);
        if (l < r) total += r - l;
    }
    return total;
}

std::pair<Rational, Rational> lemma41_ratio(const CantorSet& s, int n) {
    if (n < 1 || n > s.levels) throw std::invalid_argument("lemma41_ratio: n out of range");
    CantorIndex i{n, 1};
    KSchedule sched = k_schedule(s.seed_k11, i);
    const BigInt& kn = sched.k(i);
    if (kn > kExactPowCap) throw std::runtime_error("lemma41_ratio: k too deep");
    Rational delta = Rational(5, 3) * pow3_inv(kn);

    const Block* block = nullptr;
    for (const auto& b : s.blocks)
        if (b.idx == i) block = &b;
    if (block == nullptr || !block->enumerated)
        throw std::runtime_error("lemma41_ratio: block (n,1) not enumerated");
    for (const auto& b : s.blocks)
        if (!b.enumerated && b.hull.left < delta && b.hull.right > -delta)
            throw std::runtime_error("lemma41_ratio: skipped block overlaps the window");

    Rational full = rational_window_length(s.enumerated_intervals(), Rational(0), delta) /
                    (2 * delta);
    Rational block_only =
        rational_window_length(block->intervals, Rational(0), delta) / (2 * delta);
    return {full, block_only};
}

// ---- transform-based checks ----------------------------------------------

namespace {

struct SamplePoint {
    double x;
    CantorIndex from;  // block the point lies in
    BigInt block_k;
};

std::vector<SamplePoint> block_samples(const CantorSet& s, CantorIndex upto, int per_block) {
    std::vector<SamplePoint> pts;
    for (const auto& b : s.blocks) {
        if (!b.enumerated || !index_le(b.idx, upto)) continue;
        std::size_t count = b.intervals.size();
        std::size_t take = std::min<std::size_t>(per_block, count);
        for (std::size_t q = 0; q < take; ++q) {
            const auto& iv = b.intervals[q * (count - 1) / std::max<std::size_t>(1, take - 1)];
            pts.push_back({to_double((iv.left + iv.right) / 2), b.idx, b.k});
        }
    }
    return pts;
}

double nearest_atom_distance(const Measure& mu, double x) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& a : mu.atoms()) d = std::min(d, std::abs(a.x - x));
    return d;
}

// Transport error of the level-L atomic stand-in: each cell of mass w sits
// within 3^-L/2 of its atom, so the transform error at x is bounded by
// h * Σ w_i/d_i'^2 with d_i' = |x - atom_i| - h.
double transform_error_bound(const Measure& mu, double x, int L) {
    double h = 0.5 * std::pow(3.0, -L);
    double s = 0.0;
    for (const auto& a : mu.atoms()) {
        double d = std::abs(a.x - x) - h;
        if (d <= 0.0) return std::numeric_limits<double>::infinity();
        s += a.w / (d * d);
    }
    return h * s;
}

}  // namespace

CheckReport check_lemma42(int levels, std::int64_t seed_k11, int samples_per_block) {
    CheckReport rep;
    rep.check_id = "lemma42";
    rep.inputs_echo = {{"levels", levels}, {"seed_k", seed_k11},
                       {"samples_per_block", samples_per_block}};
    CantorSet s = build_set(levels, seed_k11);
    for (auto i : s.skipped_indices())
        rep.notes.push_back("block (" + std::to_string(i.n) + "," + std::to_string(i.j) +
                            ") not enumerated; its points are not sampled");

    double min_margin = std::numeric_limits<double>::infinity();
    CantorIndex last{levels, std::int64_t{1} << levels};
    KSchedule sched = k_schedule(seed_k11, last);

    for (CantorIndex i{1, 2};; i = index_successor(i)) {
        if (!index_le(i, last)) break;
        CantorIndex pred = index_predecessor(i);
        const BigInt& kp = sched.k(pred);
        if (kp > 25) {
            rep.notes.push_back("index (" + std::to_string(i.n) + "," + std::to_string(i.j) +
                                ") skipped: bound 3^" + kp.str() + " exceeds floating range");
            continue;
        }
        double bound = std::pow(3.0, kp.convert_to<double>());

        std::vector<SamplePoint> pts = block_samples(s, i, samples_per_block);
        if (pts.empty()) continue;

        for (int L = std::max(i.n, 12);; L += 3) {
            Measure far = split_at(i, L).second;
            if (far.is_zero()) {
                // near region covers the whole support; the remainder
                // transform vanishes identically
                min_margin = std::min(min_margin, 1.0);
                rep.asserted_cases += static_cast<int>(pts.size());
                rep.notes.push_back("index (" + std::to_string(i.n) + "," +
                                    std::to_string(i.j) + "): zero far measure");
                break;
            }
            bool ok = true;
            double worst = std::numeric_limits<double>::infinity();
            for (const auto& p : pts) {
                double err = transform_error_bound(far, p.x, L);
                if (err > 0.01 * bound) {
                    ok = false;
                    break;
                }
                double f = boundary_real(far, p.x);
                worst = std::min(worst, 1.0 - (std::abs(f) + err) / bound);
            }
            if (ok) {
                min_margin = std::min(min_margin, worst);
                rep.asserted_cases += static_cast<int>(pts.size());
                break;
            }
            if (L + 3 > kDepthCap) {
                rep.notes.push_back("index (" + std::to_string(i.n) + "," +
                                    std::to_string(i.j) +
                                    ") skipped: approximation budget infeasible");
                break;
            }
        }
    }
    rep.margin = std::isfinite(min_margin) ? min_margin : 0.0;
    rep.finalize(0.0);
    return rep;
}

CheckReport check_thm16_decay(int levels, std::int64_t seed_k11, double t) {
    CheckReport rep;
    rep.check_id = "thm16_decay";
    rep.inputs_echo = {{"levels", levels}, {"seed_k", seed_k11}, {"t", t}};
    if (!(t > 0.0)) throw std::invalid_argument("check_thm16_decay: t must be positive");

    CantorIndex last{levels, std::int64_t{1} << levels};
    KSchedule sched = k_schedule(seed_k11, last);
    const double log3t = std::log(t) / std::log(3.0);

    // locate the window 3^k(n,j-1) < t <= 3^k(n,j)
    bool found = false;
    CantorIndex win{1, 1};
    for (CantorIndex i{1, 2};; i = index_successor(i)) {
        if (!index_le(i, last)) break;
        double kp = sched.k(index_predecessor(i)).convert_to<double>();
        double kc = sched.k(i).convert_to<double>();
        if (kp < log3t && log3t <= kc) {
            win = i;
            found = true;
            break;
        }
    }
    if (!found) {
        rep.notes.push_back("t outside every feasible window of the truncated schedule");
        rep.finalize(0.0);
        return rep;
    }
    const int n = win.n;
    const double budget = 13.0 * std::ldexp(1.0, -n);
    rep.inputs_echo["window_index"] = {win.n, win.j};

    CantorSet s = build_set(levels, seed_k11);
    double min_margin = std::numeric_limits<double>::infinity();

    // main bound (restricted to the blocks; the limit set K_inf is null)
    {
        int L = 15;
        Measure mu = cantor_atoms(L);
        double lambda_upper = 0.0;
        for (const auto& b : s.blocks) {
            double len = b.length_exact ? to_double(b.total_length) : 0.0;
            if (!b.enumerated) {
                lambda_upper += len;
                if (!b.length_exact)
                    rep.notes.push_back("block (" + std::to_string(b.idx.n) + "," +
                                        std::to_string(b.idx.j) +
                                        ") length below floating range; counted as 0");
                continue;
            }
            // per-block global transport bound from the gap distance 3^-(k+1)
            double h = 0.5 * std::pow(3.0, -L);
            double d = std::pow(3.0, -(b.k.convert_to<double>() + 1.0)) - h;
            double err = (d > 0.0) ? h * mu.total_mass() / (d * d)
                                   : std::numeric_limits<double>::infinity();
            if (err > 0.01 * t) {
                // cannot certify pointwise transforms here; take the whole
                // block length as an upper bound instead
                lambda_upper += len;
                rep.notes.push_back("block (" + std::to_string(b.idx.n) + "," +
                                    std::to_string(b.idx.j) +
                                    ") counted by full length (transform budget)");
                continue;
            }
            for (const auto& iv : b.intervals) {
                IntervalUnion part = levelset_on_atomfree_interval(
                    mu, t - err, to_double(iv.left), to_double(iv.right));
                lambda_upper += part.length();
            }
        }
        double lhs = 2.0 * t * lambda_upper;
        min_margin = std::min(min_margin, 1.0 - lhs / budget);
        rep.asserted_cases++;
        rep.inputs_echo["two_t_lambda"] = lhs;
    }

    // near-part tail: the near part obeys Boole, so 2t|{|F_near| >= t}| = 4*mass
    {
        int L = std::max(n + 1, 10);
        Measure near = split_at(win, L).first;
        double mass = near.total_mass();
        double expect = (win.j == 1 ? 3.0 : 2.0) * std::ldexp(1.0, -n);
        if (std::abs(mass - expect) > 1e-12)
            rep.notes.push_back("near-mass accounting mismatch");
        double lambda = gamma(near, t, LevelSign::abs).set.length();
        double lhs = 2.0 * t * lambda;
        min_margin = std::min(min_margin, 1.0 - lhs / (12.0 * std::ldexp(1.0, -n)));
        // Boole audit on the same computation
        min_margin = std::min(min_margin, 1.0 - std::abs(lambda * t / (2.0 * mass) - 1.0));
        rep.asserted_cases += 2;
    }

    // exact block-length identity for every enumerated block
    for (const auto& b : s.blocks) {
        if (!b.enumerated) continue;
        Rational sum = 0;
        for (const auto& iv : b.intervals) sum += iv.length();
        Rational expect = Rational(1, pow_big(2, BigInt(b.idx.n + 1)) * 3) *
                          Rational(pow_big(2, b.k), pow_big(3, b.k));
        if (sum != b.total_length || sum != expect) {
            min_margin = std::min(min_margin, -1.0);
            rep.notes.push_back("block length identity failed");
        }
        rep.asserted_cases++;
    }

    // geometric tail identity, exact rationals
    {
        const int l0 = 5, top = 60;
        Rational sum = 0, q = Rational(2, 3);
        Rational ql = Rational(pow_big(2, l0), pow_big(3, l0));
        Rational term = ql;
        for (int l = l0; l <= top; ++l) {
            sum += term;
            term *= q;
        }
        // term is now (2/3)^(top+1)
        if (sum + 3 * term != 3 * ql) {
            min_margin = std::min(min_margin, -1.0);
            rep.notes.push_back("geometric identity failed");
        }
        rep.asserted_cases++;
    }

    // schedule growth bound: 3^k * 2^-n * (2/3)^(3k) <= 2^-n, i.e. 2^(3k) <= 3^(2k)
    for (const auto& [idx, k] : sched.values) {
        if (k > 5000) {
            rep.notes.push_back("index (" + std::to_string(idx.n) + "," +
                                std::to_string(idx.j) + ") power inequality checked by exponent");
            if (3.0 * k.convert_to<double>() * std::log(2.0) >
                2.0 * k.convert_to<double>() * std::log(3.0))
                min_margin = std::min(min_margin, -1.0);
        } else {
            if (pow_big(2, 3 * k) > pow_big(3, 2 * k)) {
                min_margin = std::min(min_margin, -1.0);
                rep.notes.push_back("power inequality failed");
            }
        }
        rep.asserted_cases++;
    }

    rep.margin = std::isfinite(min_margin) ? min_margin : 0.0;
    rep.finalize(1e-12);
    return rep;
}

}  // namespace hm::cantor
