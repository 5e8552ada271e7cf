#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <skewlr.hpp>

using namespace skewlr;
using nlohmann::json;

namespace {

json to_json(const Partition& p) { return json(p.parts()); }

template <class C>
json list_json(const C& c) {
    json a = json::array();
    for (auto& p : c) a.push_back(to_json(p));
    return a;
}

std::string join(const std::vector<Partition>& v, const char* sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + to_string(v[i]);
    return s;
}

std::string params_text(const Params& p) {
    std::string s;
    for (auto& [k, v] : p) s += " " + k + "=" + std::to_string(v);
    return s;
}

json params_json(const Params& p) {
    json o = json::object();
    for (auto& [k, v] : p) o[k] = v;
    return o;
}

std::string expansion_text(const SchurExpansion& ex) {
    std::string s;
    bool first = true;
    for (auto& [nu, c] : ex.terms) {
        if (!first) s += " + ";
        first = false;
        if (c != 1) s += std::to_string(c) + " ";
        s += "s" + to_string(nu);
    }
    return s.empty() ? "0" : s;
}

json report_json(const SkewShape& A, const SchurExpansion& ex, const IntervalReport& r) {
    json terms = json::array();
    for (auto& [nu, c] : ex.terms) terms.push_back({{"nu", to_json(nu)}, {"coeff", c}});
    return {{"schema", 1},
            {"shape", to_string(A)},
            {"w", to_json(r.w)},
            {"n", to_json(r.n)},
            {"terms", terms},
            {"support", list_json(r.support)},
            {"interval", list_json(r.interval)},
            {"missing", list_json(r.missing)},
            {"flags", {{"multiplicity_free", r.multiplicity_free}, {"full_interval", r.full_interval}}}};
}

void print_scan_text(const ScanReport& r) {
    std::printf("check %s: %ld scanned, %ld full, %ld mf, %ld mf&full, %zu disagreements\n", r.check.c_str(),
                r.scanned, r.full, r.mf, r.mf_and_full, r.disagreements.size());
    if (!r.disagreements.empty()) std::printf("  %-36s %-10s %s\n", "object", "classifier", "oracle");
    for (auto& d : r.disagreements)
        std::printf("  %-36s %-10s %s\n", d.object.c_str(), d.classifier.c_str(), d.oracle.c_str());
}

json scan_json(const ScanReport& r) {
    json ds = json::array();
    for (auto& d : r.disagreements)
        ds.push_back({{"check", d.check}, {"object", d.object}, {"classifier", d.classifier}, {"oracle", d.oracle}});
    return {{"check", r.check},
            {"bounds", {r.bounds.max_size, r.bounds.max_rows, r.bounds.max_cols}},
            {"scanned", r.scanned},
            {"full", r.full},
            {"mf", r.mf},
            {"mf_and_full", r.mf_and_full},
            {"disagreements", ds}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew Schur function supports: expansions, intervals and classifiers"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string shape_arg, ribbon_arg, mu_arg, nu_arg, check = "main", mutate;
    int jobs = 0, max_size = 9, max_rows = 7, max_cols = 7, max_s = 6, max_len = 5;

    auto* expand = app.add_subcommand("expand", "Schur expansion of a skew shape");
    expand->add_option("shape", shape_arg, "e.g. [4,4,3]/[2]")->required();
    auto* support = app.add_subcommand("support", "Support of a skew shape");
    support->add_option("shape", shape_arg)->required();
    auto* interval = app.add_subcommand("interval", "Schur interval with missing elements marked");
    interval->add_option("shape", shape_arg)->required();
    auto* classify = app.add_subcommand("classify", "Multiplicity-free cases, template match and witness");
    classify->add_option("shape", shape_arg)->required();
    auto* ribbon = app.add_subcommand("ribbon", "Full-support criterion for a column ribbon");
    ribbon->add_option("composition", ribbon_arg, "column lengths right to left, e.g. (6,2,2,2,2,7,6)")->required();
    auto* product = app.add_subcommand("product", "Classification of s_mu s_nu");
    product->add_option("mu", mu_arg)->required();
    product->add_option("nu", nu_arg)->required();
    auto* verify = app.add_subcommand("verify", "Cross-validate classifiers against the oracle");
    verify->add_option("--check", check, "main, mf, ribbon, products or products-full")
        ->check(CLI::IsMember({"main", "mf", "ribbon", "products", "products-full"}));
    verify->add_option("--max-size", max_size);
    verify->add_option("--max-rows", max_rows);
    verify->add_option("--max-cols", max_cols);
    verify->add_option("--max-s", max_s, "ribbon scan: most columns");
    verify->add_option("--max-len", max_len, "ribbon scan: longest column");
    verify->add_option("--disable", mutate, "main scan: ignore one template (mutation test)")
        ->check(CLI::IsMember({"A1", "A2", "A3", "A4", "A6", "A7"}));
    app.add_option("--jobs", jobs, "Worker threads for verify (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const bool js = format == "json";
    try {
        if (expand->parsed() || support->parsed() || interval->parsed()) {
            SkewShape A = parse_skew(shape_arg);
            auto ex = schur_expansion(A);
            auto r = interval_report(ex);
            if (js) {
                std::cout << report_json(A, ex, r).dump(2) << "\n";
            } else if (expand->parsed()) {
                std::cout << "s" << to_string(A) << " = " << expansion_text(ex) << "\n";
            } else if (support->parsed()) {
                std::cout << "support: {" << join(r.support) << "}\n";
                std::cout << "missing: {" << join(r.missing) << "}\n";
            } else {
                std::cout << "interval [" << to_string(r.w) << ", " << to_string(r.n) << "]:\n";
                for (auto it = r.interval.rbegin(); it != r.interval.rend(); ++it) {
                    bool miss = std::find(r.missing.begin(), r.missing.end(), *it) != r.missing.end();
                    std::cout << "  " << to_string(*it) << (miss ? "  * missing" : "") << "\n";
                }
            }
            return 0;
        }
        if (classify->parsed()) {
            SkewShape A = basic_form(parse_skew(shape_arg));
            auto mf = classify_mf(A);
            auto m = match_full_interval_config(A);
            auto w = detect_bad_config(A);
            if (js) {
                json out{{"schema", 1},
                         {"shape", to_string(A)},
                         {"multiplicity_free", mf.multiplicity_free()},
                         {"mf_cases", mf.cases},
                         {"mf_details", mf.details},
                         {"config", to_string(m.config)},
                         {"symmetry", to_string(m.symmetry)},
                         {"params", params_json(m.params)},
                         {"depth_blocks", m.depth_blocks},
                         {"width_blocks", m.width_blocks}};
                out["witness"] = w ? json{{"xi", to_json(w->xi)}, {"reason", to_string(w->reason)}} : json(nullptr);
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "shape: " << to_string(A) << "\n";
                std::cout << "multiplicity-free: " << (mf.multiplicity_free() ? "yes" : "no") << "\n";
                for (auto& d : mf.details) std::cout << "  " << d << "\n";
                std::cout << "config: " << to_string(m.config);
                if (m.matched())
                    std::cout << " (" << to_string(m.symmetry) << ")" << params_text(m.params) << ", blocks "
                              << m.depth_blocks << " deep, " << m.width_blocks << " wide";
                std::cout << "\n";
                if (w) std::cout << "witness: xi=" << to_string(w->xi) << " (" << to_string(w->reason) << ")\n";
                else std::cout << "witness: none\n";
            }
            return 0;
        }
        if (ribbon->parsed()) {
            auto r = parse_ribbon(ribbon_arg);
            auto v = ribbon_full_support(r);
            if (js) {
                json out{{"schema", 1}, {"ribbon", to_string(r)}, {"full", v.full}};
                if (v.witness) {
                    out["witness"] = {{"S", v.witness->S}, {"B", v.witness->B}, {"k", v.witness->k},
                                      {"p", v.witness->p}, {"xi", to_json(v.witness->xi)}};
                }
                std::cout << out.dump(2) << "\n";
            } else if (v.full) {
                std::cout << "ribbon " << to_string(r) << ": full\n";
            } else {
                auto& wt = *v.witness;
                std::string S, B;
                for (int i : wt.S) S += (S.empty() ? "" : ",") + std::to_string(i);
                for (int i : wt.B) B += (B.empty() ? "" : ",") + std::to_string(i);
                std::cout << "ribbon " << to_string(r) << ": not full, xi=" << to_string(wt.xi) << " (S={" << S
                          << "}, B={" << B << "}, k=" << wt.k << ", p=" << wt.p << ")\n";
            }
            return 0;
        }
        if (product->parsed()) {
            Partition mu = parse_partition(mu_arg), nu = parse_partition(nu_arg);
            auto pc = product_full_interval(mu, nu);
            auto mf = classify_product_mf(mu, nu);
            if (js) {
                std::cout << json{{"schema", 1},
                                  {"mu", to_json(mu)},
                                  {"nu", to_json(nu)},
                                  {"case", pc.tag},
                                  {"full_interval", pc.full},
                                  {"multiplicity_free", mf.multiplicity_free()},
                                  {"mf_cases", mf.cases}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "product s" << to_string(mu) << " s" << to_string(nu) << "\n";
                std::cout << "case: " << pc.tag << "\n";
                std::cout << "full interval: " << (pc.full ? "yes" : "no") << "\n";
                std::cout << "multiplicity-free: " << (mf.multiplicity_free() ? "yes" : "no");
                for (auto& c : mf.cases) std::cout << " " << c;
                std::cout << "\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            ScanReport r;
            if (check == "main") {
                Mutation mut;
                if (!mutate.empty()) {
                    for (auto c : {Config::A1, Config::A2, Config::A3, Config::A4, Config::A6, Config::A7})
                        if (mutate == to_string(c)) mut.disabled_config = c;
                }
                r = cross_validate_main({max_size, max_rows, max_cols}, jobs, mut);
            } else if (check == "mf") {
                r = cross_validate_mf({max_size, max_rows, max_cols}, jobs);
            } else if (check == "ribbon") {
                r = cross_validate_ribbon(max_s, max_len, jobs);
            } else {
                r = cross_validate_products(max_size, jobs, check == "products-full");
            }
            if (js) {
                json out = scan_json(r);
                out["schema"] = 1;
                std::cout << out.dump(2) << "\n";
            } else {
                print_scan_text(r);
            }
            return r.ok() ? 0 : 1;
        }
    } catch (const skewlr::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
