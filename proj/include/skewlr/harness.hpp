#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "classify.hpp"
#include "lr.hpp"
#include "skew.hpp"

namespace skewlr {

struct ScanBounds {
    int max_size = 1;
    int max_rows = 1;
    int max_cols = 1;
};

// Every basic shape within the bounds, once each, ordered by (size, outer, inner).
inline std::vector<SkewShape> enumerate_basic_shapes(int max_size, int max_rows, int max_cols) {
    if (max_size < 1 || max_rows < 1 || max_cols < 1) throw OutOfRange("scan bounds must be >= 1");
    std::vector<SkewShape> out;
    std::vector<int> lam, mu;
    std::function<void(int)> rec = [&](int used) {
        if (!lam.empty() && mu.back() == 0) {
            // Rows are sorted, so an empty column appears exactly when lam_{i+1} < mu_i.
            bool gap = false;
            for (std::size_t i = 0; i + 1 < lam.size(); ++i)
                if (lam[i + 1] < mu[i]) gap = true;
            if (!gap) out.push_back(SkewShape{Partition(lam), Partition(mu)});
        }
        if (static_cast<int>(lam.size()) == max_rows) return;
        int lcap = lam.empty() ? max_cols : lam.back();
        int mcap = mu.empty() ? max_cols - 1 : mu.back();
        for (int m = 0; m <= mcap; ++m)
            for (int l = m + 1; l <= lcap && used + l - m <= max_size; ++l) {
                lam.push_back(l);
                mu.push_back(m);
                rec(used + l - m);
                lam.pop_back();
                mu.pop_back();
            }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const SkewShape& a, const SkewShape& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        if (a.outer != b.outer) return LexDesc{}(b.outer, a.outer);
        return LexDesc{}(b.inner, a.inner);
    });
    return out;
}

struct Disagreement {
    std::string check;   // "main", "mf", "ribbon", "product-mf"
    std::string object;  // shape, ribbon or product in bracketed form
    std::string classifier;
    std::string oracle;
};

struct ScanReport {
    std::string check;
    ScanBounds bounds;
    long scanned = 0;
    long full = 0;
    long mf = 0;
    long mf_and_full = 0;
    std::vector<Disagreement> disagreements;
    double seconds = 0.0;
    bool ok() const { return disagreements.empty(); }
};

// Switches used by mutation tests to confirm the scan catches a broken classifier.
struct Mutation {
    std::optional<Config> disabled_config;
};

namespace detail {

struct ItemResult {
    bool full = false, mf = false;
    std::optional<Disagreement> bad;
};

template <class Item, class Fn>
ScanReport run_scan(const std::string& check, const std::vector<Item>& items, int jobs, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ItemResult> res(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) res[i] = fn(items[i]);
    };
    int n = std::max(1, jobs);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    ScanReport rep;
    rep.check = check;
    for (auto& r : res) {
        ++rep.scanned;
        rep.full += r.full;
        rep.mf += r.mf;
        rep.mf_and_full += r.full && r.mf;
        if (r.bad) rep.disagreements.push_back(*r.bad);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline int default_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

inline std::string verdict(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// Classifier verdict with an optional configuration knocked out.
inline bool mutated_match(const ConfigMatch& m, const Mutation& mut) {
    for (auto& h : m.all_matches)
        if (!mut.disabled_config || h.config != *mut.disabled_config) return true;
    return false;
}

inline ScanReport cross_validate_main(ScanBounds b, int jobs = 0, Mutation mut = {}) {
    auto shapes = enumerate_basic_shapes(b.max_size, b.max_rows, b.max_cols);
    TemplateRegistry reg(b.max_size);
    auto rep = detail::run_scan("main", shapes, detail::default_jobs(jobs), [&](const SkewShape& A) {
        detail::ItemResult r;
        auto ir = interval_report(A);
        r.full = ir.full_interval;
        r.mf = ir.multiplicity_free;
        bool oracle = r.full && r.mf;
        bool claim = mutated_match(match_full_interval_config(A, &reg), mut);
        if (oracle != claim) r.bad = Disagreement{"main", to_string(A), detail::verdict(claim), detail::verdict(oracle)};
        return r;
    });
    rep.bounds = b;
    return rep;
}

inline ScanReport cross_validate_mf(ScanBounds b, int jobs = 0) {
    auto shapes = enumerate_basic_shapes(b.max_size, b.max_rows, b.max_cols);
    auto rep = detail::run_scan("mf", shapes, detail::default_jobs(jobs), [&](const SkewShape& A) {
        detail::ItemResult r;
        auto ir = interval_report(A);
        r.full = ir.full_interval;
        r.mf = ir.multiplicity_free;
        bool claim = classify_mf(A).multiplicity_free();
        if (claim != r.mf) r.bad = Disagreement{"mf", to_string(A), detail::verdict(claim), detail::verdict(r.mf)};
        return r;
    });
    rep.bounds = b;
    return rep;
}

// Column compositions with s in [3, max_s], interior parts in [2, max_len], end parts in [1, max_len].
inline std::vector<RibbonComposition> admissible_ribbons(int max_s, int max_len) {
    if (max_s < 3) throw OutOfRange("max_s must be >= 3");
    std::vector<RibbonComposition> out;
    for (int s = 3; s <= max_s; ++s) {
        std::vector<int> c(static_cast<std::size_t>(s), 1);
        std::function<void(int)> rec = [&](int i) {
            if (i == s) {
                out.push_back(RibbonComposition{c});
                return;
            }
            int lo = (i == 0 || i == s - 1) ? 1 : 2;
            for (int v = lo; v <= max_len; ++v) {
                c[static_cast<std::size_t>(i)] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return out;
}

inline ScanReport cross_validate_ribbon(int max_s, int max_len, int jobs = 0) {
    auto ribbons = admissible_ribbons(max_s, max_len);
    auto rep = detail::run_scan("ribbon", ribbons, detail::default_jobs(jobs), [&](const RibbonComposition& rc) {
        detail::ItemResult r;
        auto ir = interval_report(ribbon_shape(rc));
        r.full = ir.full_interval;
        r.mf = ir.multiplicity_free;
        auto v = ribbon_full_support(rc);
        if (v.full != r.full) {
            std::string oracle = detail::verdict(r.full);
            if (!r.full && !ir.missing.empty()) oracle += " missing " + to_string(ir.missing.front());
            r.bad = Disagreement{"ribbon", to_string(rc), detail::verdict(v.full), oracle};
        }
        return r;
    });
    rep.bounds = {0, max_s, max_len};
    return rep;
}

// Products s_mu s_nu with |mu|, |nu| <= max_size, evaluated as the direct sum shape.
inline ScanReport cross_validate_products(int max_size, int jobs = 0, bool check_full = false) {
    std::vector<std::pair<Partition, Partition>> pairs;
    std::vector<Partition> ps;
    for (int s = 0; s <= max_size; ++s)
        for (auto& p : partitions_of(s)) ps.push_back(p);
    for (auto& a : ps)
        for (auto& b : ps) pairs.emplace_back(a, b);
    auto rep = detail::run_scan(check_full ? "product-full" : "product-mf", pairs, detail::default_jobs(jobs),
                                [&](const std::pair<Partition, Partition>& pr) {
        detail::ItemResult r;
        auto A = direct_sum(make_skew(pr.first), make_skew(pr.second));
        auto ir = interval_report(A);
        r.full = ir.full_interval;
        r.mf = ir.multiplicity_free;
        std::string obj = to_string(pr.first) + " x " + to_string(pr.second);
        if (check_full) {
            bool claim = product_full_interval(pr.first, pr.second).full;
            if (claim != r.full) r.bad = Disagreement{"product-full", obj, detail::verdict(claim), detail::verdict(r.full)};
        } else {
            bool claim = classify_product_mf(pr.first, pr.second).multiplicity_free();
            if (claim != r.mf) r.bad = Disagreement{"product-mf", obj, detail::verdict(claim), detail::verdict(r.mf)};
        }
        return r;
    });
    rep.bounds = {max_size, 0, 0};
    return rep;
}

}  // namespace skewlr
