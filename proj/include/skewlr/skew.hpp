#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace skewlr {

struct Cell {
    int r, c;  // 0-based row (top down) and column (left to right)
    auto operator<=>(const Cell&) const = default;
    bool operator==(const Cell&) const = default;
};

// λ/μ with μ ⊆ λ. Row i holds columns [inner[i], outer[i]).
struct SkewShape {
    Partition outer;
    Partition inner;

    int rows() const { return outer.length(); }
    int cols() const { return outer.first(); }
    int size() const { return outer.size() - inner.size(); }
    int row_begin(int i) const { return inner[i]; }
    int row_end(int i) const { return outer[i]; }
    int row_length(int i) const { return outer[i] - inner[i]; }
    bool contains(int r, int c) const {
        return r >= 0 && r < rows() && c >= inner[r] && c < outer[r];
    }
    int col_length(int c) const {
        int n = 0;
        for (int r = 0; r < rows(); ++r)
            if (contains(r, c)) ++n;
        return n;
    }
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int r = 0; r < rows(); ++r)
            for (int c = inner[r]; c < outer[r]; ++c) out.push_back({r, c});
        return out;
    }

    auto operator<=>(const SkewShape&) const = default;
    bool operator==(const SkewShape&) const = default;
};

struct SkewShapeHash {
    std::size_t operator()(const SkewShape& s) const noexcept {
        PartitionHash h;
        return h(s.outer) * 1000003u ^ h(s.inner);
    }
};

inline SkewShape make_skew(const Partition& outer, const Partition& inner = {}) {
    if (inner.length() > outer.length())
        throw NotContained("inner has more rows than outer");
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) throw NotContained("inner exceeds outer in row " + std::to_string(i + 1));
    return SkewShape{outer, inner};
}

// Builds the shape occupying exactly the given cells, which must form a skew diagram
// once empty rows and columns are deleted.
inline SkewShape shape_from_cells(std::vector<Cell> cells) {
    if (cells.empty()) return {};
    std::sort(cells.begin(), cells.end());
    std::vector<int> rows, cols;
    for (auto& x : cells) {
        rows.push_back(x.r);
        cols.push_back(x.c);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    auto ri = [&](int r) { return static_cast<int>(std::lower_bound(rows.begin(), rows.end(), r) - rows.begin()); };
    auto ci = [&](int c) { return static_cast<int>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin()); };
    std::size_t R = rows.size();
    std::vector<int> lo(R, 1 << 30), hi(R, -1), cnt(R, 0);
    for (auto& x : cells) {
        std::size_t r = static_cast<std::size_t>(ri(x.r));
        int c = ci(x.c);
        lo[r] = std::min(lo[r], c);
        hi[r] = std::max(hi[r], c + 1);
        ++cnt[r];
    }
    for (std::size_t r = 0; r < R; ++r)
        if (hi[r] - lo[r] != cnt[r]) throw NotBasic("cell set has a gap in a row");
    try {
        return make_skew(Partition(hi), Partition(lo));
    } catch (const InvalidPartition&) {
        throw NotBasic("cell set is not a skew diagram");
    }
}

inline bool is_basic(const SkewShape& A) {
    for (int r = 0; r < A.rows(); ++r)
        if (A.row_length(r) == 0) return false;
    for (int c = 0; c < A.cols(); ++c)
        if (A.col_length(c) == 0) return false;
    return true;
}

inline void require_basic(const SkewShape& A) {
    if (!is_basic(A)) throw NotBasic("shape has an empty row or column");
}

inline SkewShape basic_form(const SkewShape& A) { return shape_from_cells(A.cells()); }

inline std::vector<int> row_lengths(const SkewShape& A) {
    std::vector<int> v;
    for (int r = 0; r < A.rows(); ++r) v.push_back(A.row_length(r));
    return v;
}

inline std::vector<int> col_lengths(const SkewShape& A) {
    std::vector<int> v;
    for (int c = 0; c < A.cols(); ++c) v.push_back(A.col_length(c));
    return v;
}

struct Profiles {
    Partition w;  // sorted column lengths
    Partition n;  // conjugate of sorted row lengths
};

inline Profiles profiles(const SkewShape& A) {
    return {Partition::from_unsorted(col_lengths(A)),
            conjugate(Partition::from_unsorted(row_lengths(A)))};
}

// Edge-connected components, north-east first.
inline std::vector<SkewShape> components(const SkewShape& A) {
    require_basic(A);
    auto cells = A.cells();
    std::vector<int> comp(cells.size(), -1);
    auto index_of = [&](int r, int c) -> int {
        auto it = std::lower_bound(cells.begin(), cells.end(), Cell{r, c});
        if (it == cells.end() || *it != Cell{r, c}) return -1;
        return static_cast<int>(it - cells.begin());
    };
    int ncomp = 0;
    for (std::size_t s = 0; s < cells.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            auto k = stack.back();
            stack.pop_back();
            const std::array<std::pair<int, int>, 4> d{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
            for (auto [dr, dc] : d) {
                int j = index_of(cells[k].r + dr, cells[k].c + dc);
                if (j >= 0 && comp[static_cast<std::size_t>(j)] < 0) {
                    comp[static_cast<std::size_t>(j)] = ncomp;
                    stack.push_back(static_cast<std::size_t>(j));
                }
            }
        }
        ++ncomp;
    }
    // Cells are row-major, so component ids already run from the top (north-east) down.
    std::vector<std::vector<Cell>> parts(static_cast<std::size_t>(ncomp));
    for (std::size_t k = 0; k < cells.size(); ++k) parts[static_cast<std::size_t>(comp[k])].push_back(cells[k]);
    std::vector<SkewShape> out;
    for (auto& p : parts) out.push_back(shape_from_cells(p));
    return out;
}

struct ShapeFlags {
    bool connected = false;
    bool ribbon = false;
    bool vertical_strip = false;
    bool horizontal_strip = false;
    bool has_2x2_block = false;
    bool is_partition = false;
    bool is_rotated_partition = false;
};

inline bool has_2x2_block(const SkewShape& A) {
    for (int r = 0; r + 1 < A.rows(); ++r)
        for (int c = A.row_begin(r); c + 1 < A.row_end(r); ++c)
            if (A.contains(r + 1, c) && A.contains(r + 1, c + 1)) return true;
    return false;
}

inline ShapeFlags shape_predicates(const SkewShape& A) {
    require_basic(A);
    ShapeFlags f;
    f.connected = components(A).size() <= 1;
    f.has_2x2_block = has_2x2_block(A);
    f.ribbon = f.connected && !f.has_2x2_block;
    f.vertical_strip = true;
    for (int r = 0; r < A.rows(); ++r)
        if (A.row_length(r) > 1) f.vertical_strip = false;
    f.horizontal_strip = true;
    for (int c = 0; c < A.cols(); ++c)
        if (A.col_length(c) > 1) f.horizontal_strip = false;
    f.is_partition = A.inner.empty();
    f.is_rotated_partition = true;
    for (int r = 0; r < A.rows(); ++r)
        if (A.row_end(r) != A.cols()) f.is_rotated_partition = false;
    return f;
}

inline SkewShape rotate_pi(const SkewShape& A) {
    int m = A.cols(), n = A.rows();
    std::vector<int> o(static_cast<std::size_t>(n)), i(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        o[static_cast<std::size_t>(k)] = m - A.inner[n - 1 - k];
        i[static_cast<std::size_t>(k)] = m - A.outer[n - 1 - k];
    }
    return make_skew(Partition(o), Partition(i));
}

inline SkewShape conjugate_shape(const SkewShape& A) {
    return make_skew(conjugate(A.outer), conjugate(A.inner));
}

enum class Symmetry { id, pi, conj, pi_conj };

inline const char* to_string(Symmetry s) {
    switch (s) {
        case Symmetry::id: return "id";
        case Symmetry::pi: return "pi";
        case Symmetry::conj: return "conj";
        case Symmetry::pi_conj: return "pi_conj";
    }
    return "?";
}

inline SkewShape apply_symmetry(const SkewShape& A, Symmetry s) {
    switch (s) {
        case Symmetry::id: return A;
        case Symmetry::pi: return rotate_pi(A);
        case Symmetry::conj: return conjugate_shape(A);
        case Symmetry::pi_conj: return conjugate_shape(rotate_pi(A));
    }
    return A;
}

// A strictly north-east of B, sharing no row or column.
inline SkewShape direct_sum(const SkewShape& A, const SkewShape& B) {
    int shift = B.cols();
    std::vector<int> o, i;
    for (int r = 0; r < A.rows(); ++r) {
        o.push_back(A.outer[r] + shift);
        i.push_back(A.inner[r] + shift);
    }
    for (int r = 0; r < B.rows(); ++r) {
        o.push_back(B.outer[r]);
        i.push_back(B.inner[r]);
    }
    return make_skew(Partition(o), Partition(i));
}

// (u₁+v₁,…,u₁+v_n)/(u*)^π with u* = u₁ⁿ/u.
inline SkewShape bullet(const Partition& u, const Partition& v, int n) {
    if (u.length() > n || v.length() > n)
        throw LengthExceeded("partition longer than n = " + std::to_string(n));
    std::vector<int> o(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) o[static_cast<std::size_t>(k)] = u.first() + v[k];
    return make_skew(Partition(o), complement(u, u.first(), n));
}

struct VSequence {
    std::vector<std::vector<Cell>> strips;     // V_1..V_s, each top to bottom
    std::vector<std::vector<Cell>> residuals;  // cells left after V_1..V_i
    std::vector<SkewShape> residual_shapes;    // λ^i/μ (not basic in general)
};

inline VSequence v_sequence(const SkewShape& A) {
    require_basic(A);
    VSequence vs;
    std::vector<int> end(static_cast<std::size_t>(A.rows()));
    for (int r = 0; r < A.rows(); ++r) end[static_cast<std::size_t>(r)] = A.row_end(r);
    while (true) {
        std::vector<Cell> strip;
        for (int r = 0; r < A.rows(); ++r) {
            auto& e = end[static_cast<std::size_t>(r)];
            if (e > A.row_begin(r)) {
                --e;
                strip.push_back({r, e});
            }
        }
        if (strip.empty()) break;
        vs.strips.push_back(strip);
        std::vector<Cell> res;
        for (int r = 0; r < A.rows(); ++r)
            for (int c = A.row_begin(r); c < end[static_cast<std::size_t>(r)]; ++c) res.push_back({r, c});
        vs.residuals.push_back(res);
        vs.residual_shapes.push_back(make_skew(Partition(end), A.inner));
    }
    return vs;
}

// One removal performed by strip_maximal_blocks, recorded on the shape it was applied to.
struct BlockStep {
    bool column;               // full-height column (depth) or full-width row (width)
    int index;                 // column or row index in the shape before removal
    int extent;                // rows (for a column) or columns (for a row) of that shape
    std::vector<int> vanished; // rows (resp. columns) that became empty and were deleted
};

struct StripResult {
    SkewShape reduced;
    int depth_strip = 0;
    int width_strip = 0;
    std::vector<BlockStep> steps;
};

namespace detail {
inline SkewShape remove_line(const SkewShape& A, bool column, int k, std::vector<int>& vanished) {
    std::vector<Cell> cells;
    int other = column ? A.rows() : A.cols();
    std::vector<int> left(static_cast<std::size_t>(other), 0);
    for (auto x : A.cells()) {
        int along = column ? x.c : x.r;
        int across = column ? x.r : x.c;
        if (along == k) continue;
        ++left[static_cast<std::size_t>(across)];
        if (column) cells.push_back({x.r, x.c < k ? x.c : x.c - 1});
        else cells.push_back({x.r < k ? x.r : x.r - 1, x.c});
    }
    vanished.clear();
    for (int i = 0; i < other; ++i)
        if (left[static_cast<std::size_t>(i)] == 0) vanished.push_back(i);
    return shape_from_cells(cells);
}

inline SkewShape insert_line(const SkewShape& A, const BlockStep& st) {
    auto remap = [&](int i) {
        int j = i;
        for (int v : st.vanished)
            if (v <= j) ++j;
        return j;
    };
    std::vector<Cell> cells;
    for (auto x : A.cells()) {
        if (st.column) cells.push_back({remap(x.r), x.c < st.index ? x.c : x.c + 1});
        else cells.push_back({x.r < st.index ? x.r : x.r + 1, remap(x.c)});
    }
    for (int i = 0; i < st.extent; ++i) {
        if (st.column) cells.push_back({i, st.index});
        else cells.push_back({st.index, i});
    }
    return shape_from_cells(cells);
}
}  // namespace detail

// Removes full-height columns and full-width rows until none is left.
inline StripResult strip_maximal_blocks(const SkewShape& A) {
    require_basic(A);
    StripResult res;
    SkewShape cur = A;
    bool changed = true;
    while (changed && cur.size() > 0) {
        changed = false;
        for (int c = 0; c < cur.cols() && !changed; ++c) {
            if (cur.col_length(c) == cur.rows()) {
                BlockStep st{true, c, cur.rows(), {}};
                cur = detail::remove_line(cur, true, c, st.vanished);
                res.steps.push_back(std::move(st));
                ++res.depth_strip;
                changed = true;
            }
        }
        for (int r = 0; r < cur.rows() && !changed; ++r) {
            if (cur.row_length(r) == cur.cols()) {
                BlockStep st{false, r, cur.cols(), {}};
                cur = detail::remove_line(cur, false, r, st.vanished);
                res.steps.push_back(std::move(st));
                ++res.width_strip;
                changed = true;
            }
        }
    }
    res.reduced = cur;
    return res;
}

// Replays recorded removals backwards.
inline SkewShape reinsert_blocks(const SkewShape& reduced, const std::vector<BlockStep>& steps) {
    SkewShape cur = reduced;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) cur = detail::insert_line(cur, *it);
    return cur;
}

// Carries a partition of the reduced shape's support to the original shape:
// a full-height column of a shape with N rows adds a part N, a full-width row
// of a shape with M columns adds 1 to each of the first M parts.
inline Partition lift_through_blocks(Partition p, const std::vector<BlockStep>& steps) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->column) p = union_of(p, Partition{it->extent});
        else p = add(p, rectangle(1, it->extent));
    }
    return p;
}

// Column composition r = (r₁,…,r_s) of a ribbon, r₁ being the rightmost column.
struct RibbonComposition {
    std::vector<int> cols;
    int s() const { return static_cast<int>(cols.size()); }
    int total() const { return std::accumulate(cols.begin(), cols.end(), 0); }
    auto operator<=>(const RibbonComposition&) const = default;
};

inline SkewShape ribbon_shape(const RibbonComposition& r) {
    if (r.cols.empty()) throw NotRibbon("empty composition");
    for (int x : r.cols)
        if (x < 1) throw NotRibbon("column lengths must be positive");
    int s = r.s();
    std::vector<Cell> cells;
    int top = 0;
    for (int j = 0; j < s; ++j) {
        int col = s - 1 - j;
        for (int k = 0; k < r.cols[static_cast<std::size_t>(j)]; ++k) cells.push_back({top + k, col});
        top += r.cols[static_cast<std::size_t>(j)] - 1;
    }
    return shape_from_cells(cells);
}

inline RibbonComposition ribbon_codec(const SkewShape& A) {
    require_basic(A);
    auto f = shape_predicates(A);
    if (!f.ribbon) throw NotRibbon("shape is not a ribbon");
    RibbonComposition r;
    for (int c = A.cols() - 1; c >= 0; --c) r.cols.push_back(A.col_length(c));
    return r;
}

struct SubdiagramStats {
    int I;
    int vspace;
};

// S holds 1-based column indices of r.
inline SubdiagramStats ribbon_subdiagram_stats(const RibbonComposition& r, const std::set<int>& S) {
    if (S.empty()) throw EmptySubset("subset of columns is empty");
    int I = 0, sum = 0;
    for (int i : S) {
        if (i < 1 || i > r.s()) throw OutOfRange("column index out of range");
        sum += r.cols[static_cast<std::size_t>(i - 1)];
        if (S.count(i + 1)) ++I;
    }
    return {I, sum - I};
}

inline std::string to_string(const SkewShape& A) {
    if (A.inner.empty()) return to_string(A.outer);
    return to_string(A.outer) + "/" + to_string(A.inner);
}

inline std::string to_string(const RibbonComposition& r) {
    std::string s = "(";
    for (int i = 0; i < r.s(); ++i) {
        if (i) s += ',';
        s += std::to_string(r.cols[static_cast<std::size_t>(i)]);
    }
    return s + ")";
}

inline SkewShape parse_skew(std::string_view s) {
    std::size_t pos = 0;
    auto outer = parse_int_list(s, pos);
    std::vector<int> inner;
    detail::skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        inner = parse_int_list(s, pos);
    }
    detail::skip_ws(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters in shape");
    try {
        return make_skew(Partition(outer), Partition(inner));
    } catch (const InvalidPartition& e) {
        throw ParseError(e.what());
    } catch (const NotContained& e) {
        throw ParseError(e.what());
    }
}

inline RibbonComposition parse_ribbon(std::string_view s) {
    std::size_t pos = 0;
    detail::skip_ws(s, pos);
    if (s.substr(pos, 7) == "ribbon:") pos += 7;
    auto v = parse_int_list(s, pos);
    detail::skip_ws(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters in ribbon");
    if (v.empty()) throw ParseError("empty ribbon");
    for (int x : v)
        if (x < 1) throw ParseError("ribbon column lengths must be positive");
    return RibbonComposition{v};
}

}  // namespace skewlr
