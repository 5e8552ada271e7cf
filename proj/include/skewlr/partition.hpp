#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace skewlr {

// Weakly decreasing list of positive integers. Zeros are trimmed on
// construction, so two partitions are equal iff their part lists are.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw InvalidPartition("parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InvalidPartition("parts must be weakly decreasing");
        }
    }

    // Sorts and drops zeros; for multisets of lengths.
    static Partition from_unsorted(std::vector<int> v) {
        std::sort(v.begin(), v.end(), std::greater<>());
        return Partition(std::move(v));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    // 0-based; zero past the end.
    int operator[](int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    int first() const { return (*this)[0]; }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Decreasing lexicographic order.
struct LexDesc {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> c(static_cast<std::size_t>(p.first()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

inline void require_same_size(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw SizeMismatch("partitions of " + std::to_string(a.size()) + " and " +
                           std::to_string(b.size()));
}

// a ⪯ b in dominance order.
inline bool dominated_by(const Partition& a, const Partition& b) {
    require_same_size(a, b);
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

// True iff b ⋖ a: a arises from b by lifting one box, and nothing lies strictly between.
inline bool covers(const Partition& a, const Partition& b) {
    require_same_size(a, b);
    if (a == b || !dominated_by(b, a)) return false;
    // Brylawski: a covers b iff b = a with one box moved from row i to row j > i
    // where either j = i+1 or a_i = a_j + 2.
    int len = std::max(a.length(), b.length()) + 1;
    int i = -1, j = -1;
    for (int k = 0; k < len; ++k) {
        int d = a[k] - b[k];
        if (d == 0) continue;
        if (d == 1 && i < 0) i = k;
        else if (d == -1 && i >= 0 && j < 0) j = k;
        else return false;
    }
    if (i < 0 || j < 0) return false;
    return j == i + 1 || a[i] == a[j] + 2;
}

// All partitions of n in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part = -1, int max_len = -1) {
    std::vector<Partition> out;
    if (n < 0) return out;
    if (max_part < 0) max_part = n;
    if (max_len < 0) max_len = n;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

// Every ν with w ⪯ ν ⪯ n, decreasing lexicographic.
inline std::vector<Partition> dominance_interval(const Partition& w, const Partition& n) {
    require_same_size(w, n);
    if (!dominated_by(w, n)) throw NotComparable("lower end does not dominate-precede upper end");
    std::vector<Partition> out;
    // Anything above w has at most ℓ(w) parts; anything below n has first part ≤ n₁.
    for (auto& p : partitions_of(w.size(), n.first(), w.length()))
        if (dominated_by(w, p) && dominated_by(p, n)) out.push_back(std::move(p));
    return out;
}

inline Partition add(const Partition& a, const Partition& b) {
    int len = std::max(a.length(), b.length());
    std::vector<int> v(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = a[i] + b[i];
    return Partition(std::move(v));
}

inline Partition union_of(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition::from_unsorted(std::move(v));
}

// (x^n): n parts equal to x.
inline Partition rectangle(int x, int n) {
    if (x <= 0 || n <= 0) return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(n), x));
}

inline int distinct_part_sizes(const Partition& p) {
    int d = 0;
    for (int i = 0; i < p.length(); ++i)
        if (i == 0 || p[i] != p[i - 1]) ++d;
    return d;
}

struct ShapeTags {
    bool zero = false;
    bool one_line_rectangle = false;
    bool two_line_rectangle = false;
    bool rectangle = false;
    bool fat_hook = false;
    bool near_rectangle = false;
    bool hook = false;

    bool other() const { return !rectangle && !fat_hook; }
    std::vector<std::string> names() const {
        std::vector<std::string> out;
        if (zero) out.emplace_back("zero");
        if (one_line_rectangle) out.emplace_back("one-line rectangle");
        if (two_line_rectangle) out.emplace_back("two-line rectangle");
        if (rectangle) out.emplace_back("rectangle");
        if (fat_hook) out.emplace_back("fat hook");
        if (near_rectangle) out.emplace_back("near rectangle");
        if (hook) out.emplace_back("hook");
        if (other()) out.emplace_back("other");
        return out;
    }
};

namespace detail {
inline Partition delete_row(const Partition& p, int r) {
    std::vector<int> v = p.parts();
    v.erase(v.begin() + r);
    return Partition(std::move(v));
}
inline Partition delete_column(const Partition& p, int c) {
    std::vector<int> v = p.parts();
    for (int& x : v)
        if (x > c) --x;
    return Partition(std::move(v));
}
}  // namespace detail

inline ShapeTags shape_class(const Partition& p) {
    ShapeTags t;
    int d = distinct_part_sizes(p);
    t.zero = p.empty();
    t.rectangle = d <= 1;
    t.one_line_rectangle = d == 1 && (p.length() == 1 || p.first() == 1);
    t.two_line_rectangle = d == 1 && (p.length() == 2 || p.first() == 2);
    t.fat_hook = d == 2;
    if (t.fat_hook) {
        for (int r = 0; r < p.length() && !t.near_rectangle; ++r)
            if (distinct_part_sizes(detail::delete_row(p, r)) <= 1) t.near_rectangle = true;
        for (int c = 0; c < p.first() && !t.near_rectangle; ++c)
            if (distinct_part_sizes(detail::delete_column(p, c)) <= 1) t.near_rectangle = true;
        for (int c = 0; c < p.first() && !t.hook; ++c) {
            Partition q = detail::delete_column(p, c);
            if (q.length() == 1) t.hook = true;
        }
    }
    return t;
}

inline void require_fits(const Partition& p, int m, int n) {
    if (p.length() > n || p.first() > m)
        throw DoesNotFit("partition does not fit in " + std::to_string(m) + "x" + std::to_string(n));
}

// λ*_k = m − λ_{n−k+1}.
inline Partition complement(const Partition& p, int m, int n) {
    require_fits(p, m, n);
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = m - p[n - 1 - k];
    return Partition(std::move(v));
}

// Boundary path of p inside m×n, from the south-west corner to the north-east one,
// as maximal straight segment lengths.
inline std::vector<int> boundary_segments(const Partition& p, int m, int n) {
    require_fits(p, m, n);
    std::vector<int> seg;
    auto push = [&](int len) {
        if (len > 0) seg.push_back(len);
    };
    // Rows from the bottom: row index n-1 up to 0; horizontal steps between
    // consecutive row lengths, vertical runs of equal lengths.
    int x = 0;
    int k = n - 1;
    while (k >= 0) {
        int target = p[k];
        push(target - x);
        x = target;
        int run = 0;
        while (k >= 0 && p[k] == target) {
            ++run;
            --k;
        }
        push(run);
    }
    push(m - x);
    return seg;
}

inline int shortness(const Partition& p, int m, int n) {
    if (p.empty() || p == rectangle(m, n)) {
        require_fits(p, m, n);
        return std::min(m, n);
    }
    auto seg = boundary_segments(p, m, n);
    return *std::min_element(seg.begin(), seg.end());
}

inline std::string to_string(const Partition& p) {
    std::string s = "[";
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s + "]";
}

namespace detail {
inline void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}
inline int parse_int(std::string_view s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t b = i;
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1000000) throw ParseError("integer too large");
        ++i;
    }
    if (b == i) throw ParseError("expected integer at position " + std::to_string(b));
    return static_cast<int>(v);
}
}  // namespace detail

// Comma-separated integers in brackets or parentheses; `3^2` expands to 3,3.
// Parsing starts at `pos` and leaves it past the closing bracket.
inline std::vector<int> parse_int_list(std::string_view s, std::size_t& pos) {
    detail::skip_ws(s, pos);
    if (pos >= s.size() || (s[pos] != '[' && s[pos] != '('))
        throw ParseError("expected '[' or '('");
    char close = s[pos] == '[' ? ']' : ')';
    ++pos;
    std::vector<int> v;
    detail::skip_ws(s, pos);
    if (pos < s.size() && s[pos] == close) {
        ++pos;
        return v;
    }
    while (true) {
        int x = detail::parse_int(s, pos);
        detail::skip_ws(s, pos);
        int rep = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            rep = detail::parse_int(s, pos);
            detail::skip_ws(s, pos);
        }
        for (int r = 0; r < rep; ++r) v.push_back(x);
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < s.size() && s[pos] == close) {
            ++pos;
            return v;
        }
        throw ParseError("expected ',' or '" + std::string(1, close) + "'");
    }
}

inline Partition parse_partition(std::string_view s) {
    std::size_t pos = 0;
    auto v = parse_int_list(s, pos);
    detail::skip_ws(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters in partition");
    try {
        return Partition(std::move(v));
    } catch (const InvalidPartition& e) {
        throw ParseError(e.what());
    }
}

}  // namespace skewlr
