#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "partition.hpp"
#include "skew.hpp"

namespace skewlr {

using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("coefficient count exceeds 64 bits");
    return r;
}

// A filling of a skew shape; entries[r] lists row r left to right.
struct Tableau {
    SkewShape shape;
    std::vector<std::vector<int>> entries;

    int& at(int r, int c) { return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - shape.row_begin(r))]; }
    int at(int r, int c) const {
        return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - shape.row_begin(r))];
    }
    auto operator<=>(const Tableau&) const = default;
    bool operator==(const Tableau&) const = default;
};

struct TableauHash {
    std::size_t operator()(const Tableau& t) const noexcept {
        std::size_t h = SkewShapeHash{}(t.shape);
        for (auto& row : t.entries)
            for (int x : row) h = h * 31 + static_cast<std::size_t>(x);
        return h;
    }
};

inline Tableau empty_tableau(const SkewShape& A) {
    Tableau t{A, {}};
    for (int r = 0; r < A.rows(); ++r) t.entries.emplace_back(static_cast<std::size_t>(A.row_length(r)), 0);
    return t;
}

inline bool is_lattice_word(const std::vector<int>& word) {
    std::vector<int> cnt(1, 0);
    for (int x : word) {
        if (x < 1) return false;
        if (static_cast<int>(cnt.size()) <= x) cnt.resize(static_cast<std::size_t>(x) + 1, 0);
        if (x > 1 && cnt[static_cast<std::size_t>(x - 1)] <= cnt[static_cast<std::size_t>(x)]) return false;
        ++cnt[static_cast<std::size_t>(x)];
    }
    return true;
}

// Rows top to bottom, each read right to left.
inline std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> w;
    for (auto& row : t.entries)
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
}

inline bool is_ssyt(const Tableau& t) {
    const auto& A = t.shape;
    for (int r = 0; r < A.rows(); ++r)
        for (int c = A.row_begin(r); c < A.row_end(r); ++c) {
            int v = t.at(r, c);
            if (v < 1) return false;
            if (c > A.row_begin(r) && t.at(r, c - 1) > v) return false;
            if (A.contains(r - 1, c) && t.at(r - 1, c) >= v) return false;
        }
    return true;
}

inline bool is_lr(const Tableau& t) { return is_ssyt(t) && is_lattice_word(reading_word(t)); }

// Letter multiplicities (α₁, α₂, …); a partition for LR tableaux.
inline std::vector<int> content_vector(const Tableau& t) {
    std::vector<int> cnt;
    for (auto& row : t.entries)
        for (int x : row) {
            if (static_cast<int>(cnt.size()) < x) cnt.resize(static_cast<std::size_t>(x), 0);
            ++cnt[static_cast<std::size_t>(x - 1)];
        }
    return cnt;
}

inline Partition content(const Tableau& t) { return Partition::from_unsorted(content_vector(t)); }

// All LR tableaux of shape A and content ν, sorted row-major lexicographically.
inline std::vector<Tableau> enumerate_lr(const SkewShape& A, const Partition& nu) {
    if (nu.size() != A.size()) throw SizeMismatch("content size differs from shape size");
    std::vector<Tableau> out;
    Tableau t = empty_tableau(A);
    auto cells = A.cells();
    // Reading order: rows top to bottom, right to left.
    std::vector<Cell> order;
    for (int r = 0; r < A.rows(); ++r)
        for (int c = A.row_end(r) - 1; c >= A.row_begin(r); --c) order.push_back({r, c});
    std::vector<int> cnt(static_cast<std::size_t>(nu.length()) + 1, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == order.size()) {
            out.push_back(t);
            return;
        }
        auto [r, c] = order[k];
        int hi = nu.length();
        if (c + 1 < A.row_end(r)) hi = std::min(hi, t.at(r, c + 1));
        int lo = A.contains(r - 1, c) ? t.at(r - 1, c) + 1 : 1;
        for (int v = lo; v <= hi; ++v) {
            auto& cv = cnt[static_cast<std::size_t>(v)];
            if (cv >= nu[v - 1]) continue;
            if (v > 1 && cnt[static_cast<std::size_t>(v - 1)] <= cv) continue;
            ++cv;
            t.at(r, c) = v;
            rec(k + 1);
            --cv;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

inline Count lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (mu.length() > lam.length()) return 0;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lam[i]) return 0;
    if (lam.size() - mu.size() != nu.size()) return 0;
    return enumerate_lr(make_skew(lam, mu), nu).size();
}

// Number of LR tableaux of A for every content, by a row-by-row transfer over
// (content so far, previous row's entries).
inline std::map<Partition, Count, LexDesc> lr_content_counts(const SkewShape& A) {
    using Key = std::vector<std::int8_t>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            std::size_t h = 0;
            for (auto x : k) h = h * 131 + static_cast<std::size_t>(x + 1);
            return h;
        }
    };
    const int maxv = std::max(1, A.rows());
    if (A.size() > 127) throw Overflow("shape too large for the content-count table");
    // Key layout: [maxv content counts][entries of previous row, left to right].
    std::unordered_map<Key, Count, KeyHash> cur, next;
    cur.emplace(Key(static_cast<std::size_t>(maxv), 0), 1);
    for (int r = 0; r < A.rows(); ++r) {
        next.clear();
        int b = A.row_begin(r), e = A.row_end(r);
        int pb = r > 0 ? A.row_begin(r - 1) : 0, pe = r > 0 ? A.row_end(r - 1) : 0;
        std::vector<int> row(static_cast<std::size_t>(e - b));
        for (auto& [key, ways] : cur) {
            std::vector<int> cnt(key.begin(), key.begin() + maxv);
            auto above = [&](int c) -> int {
                if (c < pb || c >= pe) return 0;
                return key[static_cast<std::size_t>(maxv + c - pb)];
            };
            std::function<void(int)> rec = [&](int c) {
                if (c < b) {
                    Key nk(static_cast<std::size_t>(maxv) + row.size());
                    for (int i = 0; i < maxv; ++i) nk[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(cnt[static_cast<std::size_t>(i)]);
                    for (std::size_t i = 0; i < row.size(); ++i) nk[static_cast<std::size_t>(maxv) + i] = static_cast<std::int8_t>(row[i]);
                    auto& slot = next[nk];
                    slot = checked_add(slot, ways);
                    return;
                }
                int hi = maxv;
                if (c + 1 < e) hi = std::min(hi, row[static_cast<std::size_t>(c + 1 - b)]);
                int lo = above(c) + 1;
                for (int v = lo; v <= hi; ++v) {
                    int& cv = cnt[static_cast<std::size_t>(v - 1)];
                    if (v > 1 && cnt[static_cast<std::size_t>(v - 2)] <= cv) continue;
                    ++cv;
                    row[static_cast<std::size_t>(c - b)] = v;
                    rec(c - 1);
                    --cv;
                }
            };
            rec(e - 1);
        }
        std::swap(cur, next);
    }
    std::map<Partition, Count, LexDesc> out;
    for (auto& [key, ways] : cur) {
        std::vector<int> cnt(key.begin(), key.begin() + maxv);
        Partition nu(cnt);
        auto& slot = out[nu];
        slot = checked_add(slot, ways);
    }
    return out;
}

struct SchurExpansion {
    SkewShape shape;                              // basic form of the input
    std::map<Partition, Count, LexDesc> terms;    // ν ↦ c, only c ≥ 1
    std::set<Partition, LexDesc> support;         // {ν′}
};

inline SchurExpansion schur_expansion(const SkewShape& A) {
    SchurExpansion ex;
    ex.shape = basic_form(A);
    ex.terms = lr_content_counts(ex.shape);
    for (auto& [nu, c] : ex.terms) ex.support.insert(conjugate(nu));
    return ex;
}

struct IntervalReport {
    Partition w, n;
    std::vector<Partition> interval;
    std::vector<Partition> support;
    std::vector<Partition> missing;
    bool multiplicity_free = true;
    bool full_interval = true;
};

inline IntervalReport interval_report(const SchurExpansion& ex) {
    IntervalReport rep;
    auto pr = profiles(ex.shape);
    rep.w = pr.w;
    rep.n = pr.n;
    rep.interval = dominance_interval(pr.w, pr.n);
    rep.support.assign(ex.support.begin(), ex.support.end());
    for (auto& p : rep.interval)
        if (!ex.support.count(p)) rep.missing.push_back(p);
    for (auto& [nu, c] : ex.terms)
        if (c > 1) rep.multiplicity_free = false;
    rep.full_interval = rep.missing.empty();
    return rep;
}

inline IntervalReport interval_report(const SkewShape& A) { return interval_report(schur_expansion(A)); }

struct ExtremalFillings {
    Tableau min_tab;
    Tableau max_tab;
};

inline Tableau min_filling(const SkewShape& A) {
    Tableau t = empty_tableau(A);
    for (int c = 0; c < A.cols(); ++c) {
        int k = 0;
        for (int r = 0; r < A.rows(); ++r)
            if (A.contains(r, c)) t.at(r, c) = ++k;
    }
    return t;
}

inline ExtremalFillings extremal_fillings(const SkewShape& A) {
    require_basic(A);
    ExtremalFillings f{min_filling(A), empty_tableau(A)};
    auto vs = v_sequence(A);
    for (auto& strip : vs.strips) {
        int k = 0;
        for (auto x : strip) f.max_tab.at(x.r, x.c) = ++k;
    }
    return f;
}

// A string is a list of 0-based rows y₁ < … < y_k whose residual rightmost cells
// carry the labels 1..k; its strip is that list of cells.
struct StringSequence {
    std::vector<std::vector<int>> strings;
    std::vector<std::vector<Cell>> strips;
};

namespace detail {

// Cells of a tableau restricted to a column window [c0, ∞), as a per-row span.
struct Residual {
    std::vector<int> begin, end;  // current [begin, end) per row
    int count = 0;
};

inline Residual full_residual(const SkewShape& A, int c0 = 0) {
    Residual R;
    for (int r = 0; r < A.rows(); ++r) {
        int b = std::max(A.row_begin(r), c0), e = A.row_end(r);
        if (e < b) e = b;
        R.begin.push_back(b);
        R.end.push_back(e);
        R.count += e - b;
    }
    return R;
}

inline void all_sequences(const Tableau& t, Residual R, std::vector<int> lengths, std::size_t j,
                          StringSequence& cur, std::vector<StringSequence>& out, bool first_only) {
    if (first_only && !out.empty()) return;
    if (j == lengths.size()) {
        if (R.count == 0) out.push_back(cur);
        return;
    }
    int k = lengths[j];
    int rows = static_cast<int>(R.begin.size());
    std::vector<int> ys;
    std::function<void(int, int)> rec = [&](int label, int from) {
        if (first_only && !out.empty()) return;
        if (label > k) {
            Residual R2 = R;
            std::vector<Cell> strip;
            for (int y : ys) {
                auto yy = static_cast<std::size_t>(y);
                --R2.end[yy];
                strip.push_back({y, R2.end[yy]});
            }
            R2.count -= k;
            cur.strings.push_back(ys);
            cur.strips.push_back(strip);
            all_sequences(t, R2, lengths, j + 1, cur, out, first_only);
            cur.strings.pop_back();
            cur.strips.pop_back();
            return;
        }
        for (int y = from; y < rows; ++y) {
            auto yy = static_cast<std::size_t>(y);
            if (R.end[yy] <= R.begin[yy]) continue;
            if (t.at(y, R.end[yy] - 1) != label) continue;
            ys.push_back(y);
            rec(label + 1, y + 1);
            ys.pop_back();
            if (first_only) return;  // greedy: topmost row only
        }
    };
    rec(1, 0);
}

inline std::vector<StringSequence> string_sequences(const Tableau& t, int c0, bool first_only) {
    std::vector<StringSequence> out;
    Residual R = full_residual(t.shape, c0);
    std::vector<int> cnt;
    for (int r = 0; r < t.shape.rows(); ++r)
        for (int c = R.begin[static_cast<std::size_t>(r)]; c < R.end[static_cast<std::size_t>(r)]; ++c) {
            int x = t.at(r, c);
            if (static_cast<int>(cnt.size()) < x) cnt.resize(static_cast<std::size_t>(x), 0);
            ++cnt[static_cast<std::size_t>(x - 1)];
        }
    for (std::size_t i = 1; i < cnt.size(); ++i)
        if (cnt[i] > cnt[i - 1]) return out;
    auto lengths = conjugate(Partition(cnt)).parts();
    StringSequence cur;
    all_sequences(t, R, lengths, 0, cur, out, first_only);
    return out;
}

}  // namespace detail

// Greedy complete sequence of strings (longest first, each taken from the top);
// none iff t is not an LR tableau.
inline std::optional<StringSequence> complete_string_sequence(const Tableau& t) {
    if (!is_ssyt(t)) return std::nullopt;
    auto v = detail::string_sequences(t, 0, true);
    if (v.empty()) return std::nullopt;
    return v.front();
}

// Every complete sequence of strings of t restricted to columns ≥ c0.
inline std::vector<StringSequence> all_string_sequences(const Tableau& t, int c0 = 0) {
    return detail::string_sequences(t, c0, false);
}

// Procedure 1 on the cells of t in columns ≥ c0, relative to the given sequence.
// Returns t itself when every strip meets every row of its residual.
enum class StretchRule { join, increment };

inline Tableau stretch_step(const Tableau& t, const StringSequence& seq, int c0 = 0,
                            StretchRule rule = StretchRule::join) {
    auto R = detail::full_residual(t.shape, c0);
    for (std::size_t j = 0; j < seq.strings.size(); ++j) {
        const auto& ys = seq.strings[j];
        std::set<int> in_string(ys.begin(), ys.end());
        int t1 = -1;
        for (int r = 0; r < t.shape.rows(); ++r) {
            auto rr = static_cast<std::size_t>(r);
            if (R.end[rr] > R.begin[rr] && !in_string.count(r)) {
                t1 = r;
                break;
            }
        }
        if (t1 >= 0) {
            Tableau out = t;
            int above = 0;
            for (int y : ys)
                if (y < t1) ++above;
            int& head = out.at(t1, R.end[static_cast<std::size_t>(t1)] - 1);
            head = rule == StretchRule::join ? above + 1 : head + 1;
            for (const auto& x : seq.strips[j])
                if (x.r > t1) ++out.at(x.r, x.c);
            return out;
        }
        for (const auto& x : seq.strips[j]) --R.end[static_cast<std::size_t>(x.r)];
    }
    return t;
}

inline Tableau stretch_step(const Tableau& t) {
    auto seq = complete_string_sequence(t);
    if (!seq) throw error("stretch_step needs an LR tableau");
    return stretch_step(t, *seq);
}

namespace detail {
inline bool is_lr_window(const Tableau& t, int c0) {
    const auto& A = t.shape;
    std::vector<int> word;
    for (int r = 0; r < A.rows(); ++r)
        for (int c = A.row_end(r) - 1; c >= std::max(c0, A.row_begin(r)); --c) {
            int v = t.at(r, c);
            if (v < 1) return false;
            if (c > std::max(c0, A.row_begin(r)) && t.at(r, c - 1) > v) return false;
            if (A.contains(r - 1, c) && t.at(r - 1, c) >= v) return false;
            word.push_back(v);
        }
    return is_lattice_word(word);
}
}  // namespace detail

struct GenerationTrace {
    // stages[i]: full tableaux after the rightmost i+1 columns were processed,
    // the remaining columns carrying the minimum filling.
    std::vector<std::vector<Tableau>> stages;
    std::size_t rejected_adjoins = 0;
    std::size_t rejected_stretches = 0;
};

// Every single-step stretch of t relative to seq: for each strip j and each row
// t1 of its residual not met by the strip, the cell at the end of row t1 and the
// strip cells below it are raised, either joining the string or by one.
inline std::vector<Tableau> stretch_moves(const Tableau& t, const StringSequence& seq, int c0 = 0) {
    std::vector<Tableau> out;
    auto R = detail::full_residual(t.shape, c0);
    for (std::size_t j = 0; j < seq.strings.size(); ++j) {
        const auto& ys = seq.strings[j];
        std::set<int> in_string(ys.begin(), ys.end());
        for (int r = 0; r < t.shape.rows(); ++r) {
            auto rr = static_cast<std::size_t>(r);
            if (R.end[rr] <= R.begin[rr] || in_string.count(r)) continue;
            int above = 0;
            for (int y : ys)
                if (y < r) ++above;
            for (auto rule : {StretchRule::join, StretchRule::increment}) {
                Tableau u = t;
                int& head = u.at(r, R.end[rr] - 1);
                head = rule == StretchRule::join ? above + 1 : head + 1;
                for (const auto& x : seq.strips[j])
                    if (x.r > r) ++u.at(x.r, x.c);
                if (u != t) out.push_back(std::move(u));
            }
        }
        for (const auto& x : seq.strips[j]) --R.end[static_cast<std::size_t>(x.r)];
    }
    return out;
}

// Column-by-column generation from the rightmost column, closing each stage
// under every stretch move of every complete sequence of strings.
inline std::vector<Tableau> generate_all_lr(const SkewShape& A, GenerationTrace* trace = nullptr) {
    require_basic(A);
    if (A.size() == 0) return {Tableau{A, {}}};
    Tableau base = min_filling(A);
    std::vector<Tableau> stage{base};
    GenerationTrace local;
    GenerationTrace& tr = trace ? *trace : local;
    for (int c0 = A.cols() - 1; c0 >= 0; --c0) {
        std::unordered_set<Tableau, TableauHash> seen;
        std::deque<Tableau> queue;
        for (auto& t : stage) {
            // Adjoin column c0 of the minimum filling (already present in t).
            if (!detail::is_lr_window(t, c0)) {
                ++tr.rejected_adjoins;
                continue;
            }
            if (seen.insert(t).second) queue.push_back(t);
        }
        while (!queue.empty()) {
            Tableau t = queue.front();
            queue.pop_front();
            for (auto& seq : all_string_sequences(t, c0))
                for (auto& u : stretch_moves(t, seq, c0)) {
                    if (!detail::is_lr_window(u, c0)) {
                        ++tr.rejected_stretches;
                        continue;
                    }
                    if (seen.insert(u).second) queue.push_back(std::move(u));
                }
        }
        stage.assign(seen.begin(), seen.end());
        std::sort(stage.begin(), stage.end());
        tr.stages.push_back(stage);
    }
    return stage;
}

// All LR tableaux of A of any content, sorted.
inline std::vector<Tableau> enumerate_all_lr(const SkewShape& A) {
    std::vector<Tableau> out;
    for (auto& [nu, c] : lr_content_counts(A)) {
        auto v = enumerate_lr(A, nu);
        out.insert(out.end(), v.begin(), v.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// w, σ¹, …, ending at n; consecutive repeats collapsed.
inline std::vector<Partition> sigma_chain(const SkewShape& A) {
    require_basic(A);
    auto pr = profiles(A);
    auto vs = v_sequence(A);
    std::vector<Partition> chain{pr.w};
    std::vector<int> ns;
    for (std::size_t i = 0; i + 1 < vs.strips.size(); ++i) {
        ns.push_back(static_cast<int>(vs.strips[i].size()));
        std::vector<int> cols(static_cast<std::size_t>(A.cols()), 0);
        for (auto x : vs.residuals[i]) ++cols[static_cast<std::size_t>(x.c)];
        Partition sigma = union_of(Partition(ns), Partition::from_unsorted(cols));
        if (sigma != chain.back()) chain.push_back(sigma);
    }
    if (chain.back() != pr.n) chain.push_back(pr.n);
    return chain;
}

inline std::string tableau_rows(const Tableau& t) {
    std::string s;
    for (int r = 0; r < t.shape.rows(); ++r) {
        if (r) s += ',';
        s += std::string(static_cast<std::size_t>(t.shape.row_begin(r)), ':');
        for (int x : t.entries[static_cast<std::size_t>(r)]) s += std::to_string(x);
    }
    return s;
}

}  // namespace skewlr
