#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lr.hpp"
#include "partition.hpp"
#include "skew.hpp"

namespace skewlr {

// ---------------------------------------------------------------------------
// Multiplicity-freeness

struct MFClass {
    std::vector<std::string> cases;    // "R0".."R4" or "P0".."P4"
    std::vector<std::string> details;  // one line per case
    bool multiplicity_free() const { return !cases.empty(); }
};

inline MFClass classify_mf(const SkewShape& A) {
    require_basic(A);
    MFClass out;
    const int m = A.cols(), n = A.rows();
    const Partition& mu = A.inner;
    Partition ls = complement(A.outer, m, n);
    auto tm = shape_class(mu), tl = shape_class(ls);
    int sm = shortness(mu, m, n), sl = shortness(ls, m, n);
    auto add = [&](const char* c, std::string d) {
        if (out.cases.empty() || out.cases.back() != c) out.cases.emplace_back(c);
        out.details.push_back(std::string(c) + ": " + d);
    };
    if (tm.zero) add("R0", "mu is zero");
    if (tl.zero) add("R0", "lambda* is zero");
    if (tm.rectangle && sm == 1) add("R1", "mu is a rectangle of shortness 1");
    if (tl.rectangle && sl == 1) add("R1", "lambda* is a rectangle of shortness 1");
    if (tm.rectangle && sm == 2 && tl.fat_hook) add("R2", "mu is a rectangle of shortness 2, lambda* a fat hook");
    if (tl.rectangle && sl == 2 && tm.fat_hook) add("R2", "lambda* is a rectangle of shortness 2, mu a fat hook");
    if (tm.rectangle && tl.fat_hook && sl == 1) add("R3", "mu is a rectangle, lambda* a fat hook of shortness 1");
    if (tl.rectangle && tm.fat_hook && sm == 1) add("R3", "lambda* is a rectangle, mu a fat hook of shortness 1");
    if (tm.rectangle && tl.rectangle) add("R4", "mu and lambda* are rectangles");
    return out;
}

inline MFClass classify_product_mf(const Partition& mu, const Partition& nu) {
    MFClass out;
    auto a = shape_class(mu), b = shape_class(nu);
    auto add = [&](const char* c, std::string d) {
        if (out.cases.empty() || out.cases.back() != c) out.cases.emplace_back(c);
        out.details.push_back(std::string(c) + ": " + d);
    };
    if (a.zero || b.zero) add("P0", "a factor is zero");
    if (a.one_line_rectangle) add("P1", "mu is a one-line rectangle");
    if (b.one_line_rectangle) add("P1", "nu is a one-line rectangle");
    if (a.two_line_rectangle && b.fat_hook) add("P2", "mu is a two-line rectangle, nu a fat hook");
    if (b.two_line_rectangle && a.fat_hook) add("P2", "nu is a two-line rectangle, mu a fat hook");
    if (a.rectangle && b.near_rectangle) add("P3", "mu is a rectangle, nu a near rectangle");
    if (b.rectangle && a.near_rectangle) add("P3", "nu is a rectangle, mu a near rectangle");
    if (a.rectangle && b.rectangle) add("P4", "mu and nu are rectangles");
    return out;
}

// ---------------------------------------------------------------------------
// Full-interval templates

enum class Config { Partition, A1, A2, A3, A4, A6, A7, None };

inline const char* to_string(Config c) {
    switch (c) {
        case Config::Partition: return "Partition";
        case Config::A1: return "A1";
        case Config::A2: return "A2";
        case Config::A3: return "A3";
        case Config::A4: return "A4";
        case Config::A6: return "A6";
        case Config::A7: return "A7";
        case Config::None: return "None";
    }
    return "?";
}

using Params = std::vector<std::pair<std::string, int>>;

struct TemplateHit {
    Config config = Config::None;
    Symmetry symmetry = Symmetry::id;
    Params params;
};

struct ConfigMatch {
    Config config = Config::None;
    Symmetry symmetry = Symmetry::id;
    int depth_blocks = 0;
    int width_blocks = 0;
    Params params;
    std::vector<BlockStep> steps;          // replayed by reinsert_blocks
    std::vector<TemplateHit> all_matches;  // every template that fits, in priority order
    bool matched() const { return config != Config::None; }
};

namespace detail {
inline int param(const Params& p, const char* name) {
    for (auto& [k, v] : p)
        if (k == name) return v;
    throw OutOfRange(std::string("missing parameter ") + name);
}
}  // namespace detail

// Two-column shape: right column rows [0,R), left column R-o .. R-o+L-1.
inline SkewShape two_column_shape(int R, int L, int o) {
    if (R < 1 || L < 1 || o < 0 || o > std::min(R, L)) throw OutOfRange("bad two-column parameters");
    std::vector<Cell> cells;
    for (int r = 0; r < R; ++r) cells.push_back({r, 1});
    for (int r = R - o; r < R - o + L; ++r) cells.push_back({r, 0});
    return shape_from_cells(cells);
}

inline SkewShape f2_shape(int a, int b, int c, int d) {
    return make_skew(Partition{a + b + c + d, b + c + d, d}, Partition{c + d});
}

inline SkewShape f3_shape(int a, int b, int x, int y) {
    int m = a + b + 2;
    std::vector<int> lam, mu;
    for (int i = 0; i <= x; ++i) lam.push_back(m);
    for (int i = 0; i <= y; ++i) lam.push_back(a + 1);
    for (int i = 0; i < x; ++i) mu.push_back(a + b + 1);
    for (int i = 0; i <= y; ++i) mu.push_back(a);
    return make_skew(Partition(lam), Partition(mu));
}

inline SkewShape f4_shape(int a, int x, int y) {
    std::vector<int> lam(static_cast<std::size_t>(x), a + 2);
    lam.push_back(a + 1);
    for (int i = 0; i < y; ++i) lam.push_back(1);
    return make_skew(Partition(lam), Partition(std::vector<int>(static_cast<std::size_t>(x), a + 1)));
}

inline SkewShape f6_shape(int a, int b, int x, int y) {
    std::vector<int> lam{a + b + 1};
    for (int i = 0; i < x; ++i) lam.push_back(a + 1);
    for (int i = 0; i < y; ++i) lam.push_back(1);
    return make_skew(Partition(lam), Partition{1});
}

// Four columns left to right: a single box in the bottom row, a column of
// length w2 ending there, a column of length w1 ending there, and a column of
// length w2 starting in the top row; n = w1 + 1 rows.
inline SkewShape a7_shape(int w1, int w2) {
    if (w2 < 2 || w1 <= w2) throw OutOfRange("A7 needs w1 > w2 >= 2");
    int n = w1 + 1;
    std::vector<Cell> cells;
    cells.push_back({n - 1, 0});
    for (int r = n - w2; r < n; ++r) cells.push_back({r, 1});
    for (int r = 1; r < n; ++r) cells.push_back({r, 2});
    for (int r = 0; r < w2; ++r) cells.push_back({r, 3});
    return shape_from_cells(cells);
}

inline bool a2_ok(int a, int b, int c, int d) { return a >= 1 && d >= 1 && b >= 0 && c >= 0 && a <= c + 1 && d <= b + 1; }
inline bool a3_ok(int a, int b, int x, int y) {
    if (a < 1 || b < 1 || x < 1 || y < 1) return false;
    return (a == 1 && x == 1) || (a == 1 && x <= y + 1) || (a <= b + 1 && x == 1);
}
inline bool a4_ok(int a, int x, int y) {
    if (a < 1 || x < 1 || y < 1) return false;
    return (a == 1 && x <= y + 1) || (a >= 2 && x == 1);
}

// Template shape before symmetry and blocks.
inline SkewShape instantiate(Config c, const Params& p) {
    using detail::param;
    switch (c) {
        case Config::Partition: return make_skew({}, {});
        case Config::A1: return two_column_shape(param(p, "R"), param(p, "L"), param(p, "o"));
        case Config::A2: return f2_shape(param(p, "a"), param(p, "b"), param(p, "c"), param(p, "d"));
        case Config::A3: return f3_shape(param(p, "a"), param(p, "b"), param(p, "x"), param(p, "y"));
        case Config::A4: return f4_shape(param(p, "a"), param(p, "x"), param(p, "y"));
        case Config::A6: return f6_shape(param(p, "a"), 1, param(p, "x"), 1);
        case Config::A7: return a7_shape(param(p, "w1"), param(p, "w2"));
        case Config::None: break;
    }
    throw OutOfRange("no template for None");
}

inline SkewShape reconstruct(const ConfigMatch& m) {
    return reinsert_blocks(apply_symmetry(instantiate(m.config, m.params), m.symmetry), m.steps);
}

// Symmetry images of every A2..A7 instance up to a size bound.
class TemplateRegistry {
public:
    explicit TemplateRegistry(int max_size = 0) { grow(max_size); }

    int max_size() const { return max_size_; }

    void grow(int n) {
        if (n <= max_size_) return;
        map_.clear();
        max_size_ = n;
        for (int a = 1; a <= n; ++a)
            for (int d = 1; d <= n; ++d)
                for (int b = 0; b <= n; ++b)
                    for (int c = 0; c <= n; ++c)
                        if (a + 2 * b + c + 2 * d <= n && a2_ok(a, b, c, d))
                            add(Config::A2, f2_shape(a, b, c, d), {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
        for (int a = 1; a <= n; ++a)
            for (int b = 1; a + b <= n; ++b)
                for (int x = 1; x <= n; ++x)
                    for (int y = 1; x + y <= n; ++y)
                        if (a3_ok(a, b, x, y) && a + b + x + y + 2 <= n)
                            add(Config::A3, f3_shape(a, b, x, y), {{"a", a}, {"b", b}, {"x", x}, {"y", y}});
        for (int a = 1; a <= n; ++a)
            for (int x = 1; x <= n; ++x)
                for (int y = 1; x + y <= n; ++y)
                    if (a4_ok(a, x, y) && x + a + 1 + y <= n)
                        add(Config::A4, f4_shape(a, x, y), {{"a", a}, {"x", x}, {"y", y}});
        for (int a = 1; a <= n; ++a)
            for (int x = 1; x <= n; ++x)
                if (a + 2 + x * (a + 1) <= n) add(Config::A6, f6_shape(a, 1, x, 1), {{"a", a}, {"x", x}});
        for (int w2 = 2; w2 <= n; ++w2)
            for (int w1 = w2 + 1; w1 + 2 * w2 + 1 <= n; ++w1) add(Config::A7, a7_shape(w1, w2), {{"w1", w1}, {"w2", w2}});
    }

    const std::vector<TemplateHit>* find(const SkewShape& K) const {
        auto it = map_.find(K);
        return it == map_.end() ? nullptr : &it->second;
    }

private:
    void add(Config c, const SkewShape& T, Params p) {
        if (T.size() > max_size_) return;
        std::set<SkewShape> seen;
        for (auto g : {Symmetry::id, Symmetry::pi, Symmetry::conj, Symmetry::pi_conj}) {
            SkewShape S = apply_symmetry(T, g);
            if (!seen.insert(S).second) continue;
            map_[S].push_back({c, g, p});
        }
    }

    int max_size_ = 0;
    std::unordered_map<SkewShape, std::vector<TemplateHit>, SkewShapeHash> map_;
};

namespace detail {
inline const TemplateRegistry& shared_registry(int need) {
    static std::mutex mu;
    static TemplateRegistry reg(12);
    std::lock_guard<std::mutex> lock(mu);
    if (need > reg.max_size()) reg.grow(need);
    return reg;
}

inline void a1_hit(const SkewShape& K, Symmetry g, std::vector<TemplateHit>& hits) {
    SkewShape S = apply_symmetry(K, g);
    if (S.cols() != 2) return;
    int R = S.col_length(1), L = S.col_length(0);
    int o = 0;
    for (int r = 0; r < S.rows(); ++r)
        if (S.contains(r, 0) && S.contains(r, 1)) ++o;
    hits.push_back({Config::A1, g, {{"R", R}, {"L", L}, {"o", o}}});
}
}  // namespace detail

// Matches A against the templates after stripping maximal blocks. The
// registry must cover the size of the reduced shape; the shared one grows on
// demand. Pass a prebuilt registry to avoid locking in parallel scans.
inline ConfigMatch match_full_interval_config(const SkewShape& A, const TemplateRegistry* registry = nullptr) {
    require_basic(A);
    ConfigMatch m;
    auto sr = strip_maximal_blocks(A);
    m.depth_blocks = sr.depth_strip;
    m.width_blocks = sr.width_strip;
    m.steps = sr.steps;
    const SkewShape& K = sr.reduced;
    std::vector<TemplateHit> hits;
    if (K.size() == 0) {
        hits.push_back({Config::Partition, Symmetry::id, {}});
    } else {
        detail::a1_hit(K, Symmetry::id, hits);
        detail::a1_hit(K, Symmetry::conj, hits);
        const TemplateRegistry* reg = registry;
        if (!reg || reg->max_size() < K.size()) reg = &detail::shared_registry(K.size());
        if (auto* v = reg->find(K)) hits.insert(hits.end(), v->begin(), v->end());
    }
    std::stable_sort(hits.begin(), hits.end(), [](const TemplateHit& x, const TemplateHit& y) {
        if (x.config != y.config) return x.config < y.config;
        return x.symmetry < y.symmetry;
    });
    m.all_matches = hits;
    if (!hits.empty()) {
        m.config = hits.front().config;
        m.symmetry = hits.front().symmetry;
        m.params = hits.front().params;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Witnesses of a support strictly inside the Schur interval

enum class WitnessReason { disconnected, same, las, F0, F1, induction, ribbon };

inline const char* to_string(WitnessReason r) {
    switch (r) {
        case WitnessReason::disconnected: return "disconnected";
        case WitnessReason::same: return "same";
        case WitnessReason::las: return "las";
        case WitnessReason::F0: return "F0";
        case WitnessReason::F1: return "F1";
        case WitnessReason::induction: return "induction";
        case WitnessReason::ribbon: return "ribbon";
    }
    return "?";
}

struct Witness {
    Partition xi;
    WitnessReason reason;
};

namespace detail {

inline bool in_interval(const Partition& xi, const Profiles& pr) {
    return xi.size() == pr.w.size() && dominated_by(pr.w, xi) && dominated_by(xi, pr.n);
}

inline Partition drop_first(const Partition& p) {
    std::vector<int> v(p.parts());
    if (!v.empty()) v.erase(v.begin());
    return Partition(std::move(v));
}

// A minus its first V-strip, in basic form.
inline SkewShape minus_v1(const SkewShape& A) {
    auto vs = v_sequence(A);
    return shape_from_cells(vs.residuals.front());
}

// ξ with ξ₁ = n₁ whose tail is not above w(A∖V₁) cannot be in the support.
inline bool tail_certified(const SkewShape& A, const Partition& xi, const Profiles& pr) {
    if (!in_interval(xi, pr) || xi.first() != pr.n.first()) return false;
    auto rest = minus_v1(A);
    auto w1 = profiles(rest).w;
    auto tail = drop_first(xi);
    return tail.size() == w1.size() && !dominated_by(w1, tail);
}

inline std::optional<Partition> disconnected_xi(const SkewShape& A) {
    auto comps = components(A);
    if (comps.size() < 2) return std::nullopt;
    bool block = false;
    for (auto& c : comps) block = block || has_2x2_block(c);
    if (!block) return std::nullopt;
    auto pr = profiles(A);
    auto w1 = profiles(minus_v1(A)).w;
    std::vector<int> v{pr.n.first()};
    int q = 0;
    std::vector<int> big;
    for (int x : w1.parts()) (x >= 2 ? big.push_back(x) : void(++q));
    if (big.empty()) return std::nullopt;
    big.back() -= 1;
    v.insert(v.end(), big.begin(), big.end());
    for (int i = 0; i < q + 1; ++i) v.push_back(1);
    Partition xi = Partition::from_unsorted(v);
    if (!tail_certified(A, xi, pr)) return std::nullopt;
    return xi;
}

inline std::optional<Partition> same_xi(const SkewShape& A) {
    auto pr = profiles(A);
    int s = pr.n.length();
    if (pr.w.length() <= s || s < 2) return std::nullopt;
    auto vs = v_sequence(A);
    const auto& last = vs.strips.back();
    if (last.size() < 2) return std::nullopt;
    for (auto& x : last)
        if (x.c != last.front().c) return std::nullopt;
    if (A.col_length(last.front().c) != static_cast<int>(last.size())) return std::nullopt;
    // Peel V-strips until the residual disconnects, then use the disconnected-shape witness.
    std::vector<int> head;
    for (std::size_t k = 0; k + 1 < vs.strips.size(); ++k) {
        head.push_back(static_cast<int>(vs.strips[k].size()));
        auto R = shape_from_cells(vs.residuals[k]);
        if (components(R).size() >= 2) {
            auto t = disconnected_xi(R);
            if (!t) return std::nullopt;
            std::vector<int> v = head;
            v.insert(v.end(), t->parts().begin(), t->parts().end());
            Partition xi = Partition::from_unsorted(v);
            if (!in_interval(xi, pr)) return std::nullopt;
            return xi;
        }
    }
    return std::nullopt;
}

inline std::optional<Partition> las_xi(const SkewShape& A) {
    if (components(A).size() != 1) return std::nullopt;
    auto pr = profiles(A);
    if (pr.n.length() < 2) return std::nullopt;
    auto w1 = profiles(minus_v1(A)).w;
    const auto& w = pr.w;
    int r = w.length();
    // σ = (n₁) ∪ w¹ aligned with w: σ_k = w¹_{k-1} for k ≥ 2 (1-based).
    auto sig = [&](int k) { return k == 1 ? pr.n.first() : w1[k - 2]; };
    int ell = -1;
    for (int k = 2; k <= r; ++k)
        if (sig(k) > 0 && sig(k) < w[k - 1]) ell = k;
    if (ell < 3) return std::nullopt;
    for (int k = 2; k <= ell; ++k)
        if (sig(k) > w[k - 1]) return std::nullopt;
    for (int i = 2; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j) {
            if (sig(i) >= sig(j) + 2 && w[j - 1] > sig(j)) {
                std::vector<int> v{pr.n.first()};
                for (int k = 2; k <= std::max(r, w1.length() + 1); ++k) {
                    int x = sig(k);
                    if (k == i) --x;
                    if (k == j) ++x;
                    if (x > 0) v.push_back(x);
                }
                Partition xi = Partition::from_unsorted(v);
                if (tail_certified(A, xi, pr)) return xi;
            }
        }
    return std::nullopt;
}

inline Partition pull_back(const Partition& xi, Symmetry g) {
    return (g == Symmetry::conj || g == Symmetry::pi_conj) ? conjugate(xi) : xi;
}

inline std::optional<Partition> f0_xi(const SkewShape& A) {
    for (auto g : {Symmetry::pi, Symmetry::conj, Symmetry::pi_conj}) {
        auto xi = las_xi(apply_symmetry(A, g));
        if (xi) return pull_back(*xi, g);
    }
    return std::nullopt;
}

// Support exactly {w, n} up to blocks and symmetry: F1 = ((a+1)^x, a)/(a^x)
// and F̃1 = (a+1, a^x)/(a).
inline std::optional<Partition> f1_xi(const SkewShape& A) {
    auto sr = strip_maximal_blocks(A);
    const auto& K = sr.reduced;
    if (K.size() == 0) return std::nullopt;
    for (auto g : {Symmetry::id, Symmetry::pi, Symmetry::conj, Symmetry::pi_conj}) {
        SkewShape S = apply_symmetry(K, g);
        std::optional<Partition> xs;
        int a = S.cols() - 1, x = S.rows() - 1;
        if (a >= 1 && x >= 1) {
            std::vector<int> lam(static_cast<std::size_t>(x), a + 1), mu(static_cast<std::size_t>(x), a);
            lam.push_back(a);
            if (S == make_skew(Partition(lam), Partition(mu)) && a >= 2 && x >= 2) {
                std::vector<int> v{x, 2};
                for (int i = 0; i < a - 2; ++i) v.push_back(1);
                xs = Partition(v);
            }
        }
        if (!xs) {
            int a2 = S.cols() - 1, x2 = S.rows() - 1;
            if (a2 >= 1 && x2 >= 1) {
                std::vector<int> lam{a2 + 1};
                for (int i = 0; i < x2; ++i) lam.push_back(a2);
                if (S == make_skew(Partition(lam), Partition{a2})) {
                    auto pr = profiles(S);
                    for (auto& p : dominance_interval(pr.w, pr.n))
                        if (p != pr.w && p != pr.n) {
                            xs = p;
                            break;
                        }
                }
            }
        }
        if (xs) return lift_through_blocks(pull_back(*xs, g), sr.steps);
    }
    return std::nullopt;
}

}  // namespace detail

// Tries, in order: disconnected with a 2×2 block, last V-strip a column,
// the gap-2 criterion, its symmetric images (F0 family), F1 up to blocks, and
// recursion on A∖V₁. Returns none when no rule applies.
inline std::optional<Witness> detect_bad_config(const SkewShape& A) {
    require_basic(A);
    if (A.size() == 0) return std::nullopt;
    if (auto xi = detail::disconnected_xi(A)) return Witness{*xi, WitnessReason::disconnected};
    if (auto xi = detail::same_xi(A)) return Witness{*xi, WitnessReason::same};
    if (auto xi = detail::las_xi(A)) return Witness{*xi, WitnessReason::las};
    if (auto xi = detail::f0_xi(A)) return Witness{*xi, WitnessReason::F0};
    if (auto xi = detail::f1_xi(A)) return Witness{*xi, WitnessReason::F1};
    auto vs = v_sequence(A);
    if (vs.strips.size() >= 2) {
        auto rest = shape_from_cells(vs.residuals.front());
        if (auto sub = detect_bad_config(rest)) {
            std::vector<int> v{static_cast<int>(vs.strips.front().size())};
            v.insert(v.end(), sub->xi.parts().begin(), sub->xi.parts().end());
            return Witness{Partition::from_unsorted(v), WitnessReason::induction};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Column ribbons

struct RibbonWitness {
    std::set<int> S, B;  // 1-based column indices
    int k = 0;
    int p = 0;
    Partition xi;
};

struct RibbonVerdict {
    bool full = true;
    std::optional<RibbonWitness> witness;
};

inline void require_ribbon_hypothesis(const RibbonComposition& r) {
    if (r.s() <= 2) throw HypothesisViolated("needs more than two columns");
    for (int i = 1; i + 1 < r.s(); ++i)
        if (r.cols[static_cast<std::size_t>(i)] < 2) throw HypothesisViolated("interior column of length 1");
}

// Exhaustive search over k and B (as a bitmask), S being the rest.
inline RibbonVerdict ribbon_full_support(const RibbonComposition& r) {
    require_ribbon_hypothesis(r);
    const int s = r.s();
    auto len = [&](int i) { return r.cols[static_cast<std::size_t>(i - 1)]; };
    for (int k = 1; k <= s; ++k) {
        for (unsigned mask = 0; mask < (1u << s); ++mask) {
            if (mask & (1u << (k - 1))) continue;
            std::set<int> S, B;
            for (int i = 1; i <= s; ++i) {
                if (i == k) continue;
                ((mask >> (i - 1)) & 1u ? B : S).insert(i);
            }
            if (S.empty()) continue;
            auto st = ribbon_subdiagram_stats(r, S);
            int p = st.I;
            if (p < 1) continue;
            int sumS = st.vspace + p;
            int bound = sumS - p + 1;
            bool ok = len(k) + p - 1 >= bound;
            for (int l : B) ok = ok && len(l) >= len(k) && len(l) >= bound;
            if (!ok) continue;
            std::vector<int> v;
            for (int l : B) v.push_back(len(l));
            v.push_back(len(k) + p - 1);
            v.push_back(bound);
            return {false, RibbonWitness{S, B, k, p, Partition::from_unsorted(v)}};
        }
    }
    return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Products s_μ s_ν

struct ProductCase {
    std::string tag;  // "a", "b", "c", "c'", "hook-pair" or "none"
    bool mf = false;
    bool full = false;
};

namespace detail {
inline bool is_row(const Partition& p) { return p.length() == 1; }
inline bool is_column(const Partition& p) { return !p.empty() && p.first() == 1; }
// (a, 1^y) with a ≥ 1, y ≥ 0.
inline bool as_hook(const Partition& p, int& a, int& y) {
    if (p.empty()) return false;
    for (int i = 1; i < p.length(); ++i)
        if (p[i] != 1) return false;
    a = p.first();
    y = p.length() - 1;
    return true;
}
inline bool case_c(const Partition& mu, const Partition& nu) {
    int a, y;
    if (!is_column(mu) || !as_hook(nu, a, y)) return false;
    int x = mu.length();
    return (a == 2 && x <= y + 1) || (a >= 3 && x == 1);
}
inline bool case_c_prime(const Partition& mu, const Partition& nu) {
    int z, a;
    if (!is_row(mu) || !as_hook(nu, z, a)) return false;
    int x = mu.first();
    return (a == 1 && x <= z) || (a >= 2 && x == 1);
}
inline bool hook_pair(const Partition& mu, const Partition& nu) {
    int r1, r2, s1, s2;
    if (!as_hook(mu, r1, r2) || !as_hook(nu, s1, s2)) return false;
    if (r2 != 1 || s2 != 1) return false;
    return (r1 == s1 && r1 >= 2) || (r1 == 2 && s1 == 3) || (s1 == 2 && r1 == 3);
}
}  // namespace detail

inline ProductCase product_full_interval(const Partition& mu, const Partition& nu) {
    using namespace detail;
    ProductCase pc;
    if (mu.empty() || nu.empty()) pc.tag = "a";
    else if ((is_row(mu) && is_row(nu)) || (is_column(mu) && is_column(nu))) pc.tag = "b";
    else if (case_c(mu, nu) || case_c(nu, mu)) pc.tag = "c";
    else if (case_c_prime(mu, nu) || case_c_prime(nu, mu)) pc.tag = "c'";
    if (!pc.tag.empty()) {
        pc.mf = pc.full = true;
        return pc;
    }
    if (hook_pair(mu, nu)) {
        pc.tag = "hook-pair";
        pc.full = true;
        return pc;
    }
    pc.tag = "none";
    return pc;
}

// ---------------------------------------------------------------------------
// Closed-form product expansions with every coefficient 1

struct PieriFixture {
    Partition mu, nu;
    SchurExpansion expansion;
};

namespace detail {
inline Partition ones(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(0, k)), 1)); }
inline Partition cat(std::vector<int> v) { return Partition(std::move(v)); }
inline PieriFixture make_fixture(Partition mu, Partition nu, const std::vector<Partition>& lams) {
    PieriFixture f{mu, nu, {}};
    f.expansion.shape = basic_form(direct_sum(make_skew(mu), make_skew(nu)));
    for (auto& l : lams) {
        f.expansion.terms[l] = 1;
        f.expansion.support.insert(conjugate(l));
    }
    return f;
}
inline PieriFixture conjugate_fixture(const PieriFixture& f) {
    std::vector<Partition> lams;
    for (auto& [l, c] : f.expansion.terms) lams.push_back(conjugate(l));
    return make_fixture(conjugate(f.mu), conjugate(f.nu), lams);
}
}  // namespace detail

// case "a": params {nu...} as a partition; "b": (x, y) with x ≥ y ≥ 1;
// "b'": conjugate of "b"; "c": (x, y) with 1 ≤ x ≤ y+1, μ = 1^x, ν = (2,1^y);
// "c'": (x, z) with 1 ≤ x ≤ z, μ = (x), ν = (z,1); "d": (a, y) with a ≥ 3,
// y ≥ 1; "d'": (z, a) with z ≥ 2, a ≥ 2, μ = (1), ν = (z, 1^a).
inline PieriFixture pieri_fixture_expansions(const std::string& which, const std::vector<int>& params) {
    using namespace detail;
    auto need = [&](std::size_t k) {
        if (params.size() != k) throw OutOfRange("case " + which + " takes " + std::to_string(k) + " parameters");
    };
    if (which == "a") {
        Partition nu(params);
        return make_fixture({}, nu, {nu});
    }
    if (which == "b" || which == "b'") {
        need(2);
        int x = params[0], y = params[1];
        if (!(x >= y && y >= 1)) throw OutOfRange("case b needs x >= y >= 1");
        std::vector<Partition> lams;
        for (int j = 0; j <= y; ++j) lams.push_back(add(rectangle(1, x + y - j), ones(j)));
        auto f = make_fixture(ones(x), ones(y), lams);
        return which == "b" ? f : conjugate_fixture(f);
    }
    if (which == "c" || which == "c'") {
        need(2);
        int x = params[0], y = which == "c" ? params[1] : params[1] - 1;
        if (!(x >= 1 && y >= 0 && x <= y + 1)) throw OutOfRange("case " + which + " parameters out of range");
        int k = y - x + 1;
        std::vector<Partition> lams;
        for (int i = 0; i <= x - 1; ++i) {
            lams.push_back(conjugate(cat({x + k + i, x - i, 1})));
            if (x + 1 - i <= x + k + i) lams.push_back(conjugate(cat({x + k + i, x + 1 - i})));
        }
        lams.push_back(conjugate(cat({2 * x + k, 1})));
        std::vector<int> nu{2};
        for (int i = 0; i < y; ++i) nu.push_back(1);
        auto f = make_fixture(ones(x), Partition(nu), lams);
        return which == "c" ? f : conjugate_fixture(f);
    }
    if (which == "d" || which == "d'") {
        need(2);
        int a, y;
        if (which == "d") {
            a = params[0];
            y = params[1];
        } else {
            int z = params[0];
            if (z < 2 || params[1] < 2) throw OutOfRange("case d' needs z >= 2 and a >= 2");
            a = params[1] + 1;
            y = z - 1;
        }
        if (a < 3 || y < 1) throw OutOfRange("case d needs a >= 3 and y >= 1");
        std::vector<int> hook{a}, l1{a}, l2{a, 2}, l3{a + 1};
        for (int i = 0; i < y; ++i) hook.push_back(1);
        for (int i = 0; i < y + 1; ++i) l1.push_back(1);
        for (int i = 0; i < y - 1; ++i) l2.push_back(1);
        for (int i = 0; i < y; ++i) l3.push_back(1);
        auto f = make_fixture(Partition(hook), Partition{1}, {Partition(l1), Partition(l2), Partition(l3)});
        return which == "d" ? f : conjugate_fixture(f);
    }
    throw OutOfRange("unknown case " + which);
}

}  // namespace skewlr
