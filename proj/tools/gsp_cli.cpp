// Command-line front end: every subcommand prints either a human-readable
// table or (with --json) a single JSON document on stdout. Diagnostics go to
// stderr. Exit codes: 0 success, 1 domain error, 2 usage error.

#include "CLI11.hpp"
#include "json.hpp"

#include "gsp/eisenstein.hpp"
#include "gsp/hodge.hpp"
#include "gsp/ktypes.hpp"
#include "gsp/liealg.hpp"
#include "gsp/partitions.hpp"
#include "gsp/rootsystem.hpp"
#include "gsp/spin.hpp"

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

std::complex<double> parse_complex(const std::string& s) {
    // forms: "a", "a+bi", "a-bi", "bi"
    std::string t = s;
    if (!t.empty() && (t.back() == 'i' || t.back() == 'I' || t.back() == 'j')) {
        t.pop_back();
        size_t split = t.find_last_of("+-");
        if (split == std::string::npos || split == 0) {
            double im = (t.empty() || t == "+" || t == "-") ? (t == "-" ? -1.0 : 1.0)
                                                            : std::stod(t);
            return {0.0, im};
        }
        double re = std::stod(t.substr(0, split));
        std::string imtok = t.substr(split);
        double im = (imtok == "+" ? 1.0 : imtok == "-" ? -1.0 : std::stod(imtok));
        return {re, im};
    }
    return {std::stod(t), 0.0};
}

json weight_json(const std::vector<long long>& w) { return json(w); }

json decomposition_json(const gsp::Decomposition& d) {
    json arr = json::array();
    for (auto& [w, m] : d) arr.push_back(json::array({weight_json(w), m.str()}));
    return arr;
}

gsp::PrecisionSpec load_precision(const std::string& preset, const std::string& config_path) {
    gsp::PrecisionSpec prec;
    if (preset == "high") prec.target_abs_error = 1e-12;
    else if (preset != "default" && !preset.empty())
        throw CLI::ValidationError("--prec", "unknown preset (use: default, high)");
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot open config file: " + config_path);
        json cfg = json::parse(in);
        if (cfg.contains("q_terms")) prec.q_terms = cfg["q_terms"].get<int>();
        if (cfg.contains("lattice_bound")) prec.lattice_bound = cfg["lattice_bound"].get<int>();
        if (cfg.contains("target_abs_error"))
            prec.target_abs_error = cfg["target_abs_error"].get<double>();
    }
    return prec;
}

int run_partitions(long long n, long long scan_max, bool as_json) {
    json out;
    if (scan_max > 0) {
        out["scan_max"] = scan_max;
        out["exceptions"] = gsp::scan_exceptions(scan_max);
        if (as_json) {
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "no special partition exists for n =";
            for (long long e : out["exceptions"]) std::cout << ' ' << e;
            std::cout << "  (scanned 2.." << scan_max << ")\n";
        }
        return 0;
    }
    auto parts = gsp::find_special_partitions(n);
    out["n"] = n;
    out["epsilon"] = gsp::epsilon_for(n);
    out["partitions"] = json::array();
    for (auto& p : parts) out["partitions"].push_back(p.parts);
    if (!parts.empty()) {
        auto d = gsp::embedding_datum(parts.front()); // canonical: lex-smallest
        json groups = json::array();
        for (auto& g : d.groups) groups.push_back(json::array({g.m, g.degree}));
        out["groups"] = groups;
        out["d"] = d.ambient_dim;
        out["c"] = d.codim;
        out["t"] = d.twist;
        out["hv_exponent"] = d.hv_exponent;
    }
    if (as_json) {
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n = " << n << ", epsilon = " << out["epsilon"] << "\n";
        for (auto& p : parts) {
            std::cout << "  [";
            for (size_t i = 0; i < p.parts.size(); ++i)
                std::cout << (i ? "," : "") << p.parts[i];
            std::cout << "]\n";
        }
        if (!parts.empty())
            std::cout << "d = " << out["d"] << ", c = " << out["c"] << ", t = " << out["t"]
                      << "\n";
        else
            std::cout << "  (none)\n";
    }
    return 0;
}

int run_dseries(int n, const std::string& lambda_str, bool as_json) {
    gsp::Weight lambda = lambda_str.empty() ? gsp::Weight(static_cast<size_t>(n), 0)
                                            : parse_int_list(lambda_str);
    auto packet = gsp::discrete_series_packet(n, lambda);
    json arr = json::array();
    for (auto& d : packet) {
        json rec;
        rec["rep_signs"] = d.rep.signs;
        rec["hc_param"] = weight_json(d.hc_param);
        rec["min_k_type"] = weight_json(d.min_k_type);
        rec["hodge"] = json::array({d.hodge.first, d.hodge.second});
        arr.push_back(std::move(rec));
    }
    if (as_json) {
        std::cout << arr.dump() << "\n";
    } else {
        for (auto& rec : arr)
            std::cout << "HC " << rec["hc_param"].dump() << "  min K-type "
                      << rec["min_k_type"].dump() << "  Hodge " << rec["hodge"].dump() << "\n";
    }
    return 0;
}

int run_ktypes(int n, const std::string& wedge, bool table, bool as_json) {
    if (table) {
        std::cout << gsp::ktype_table(n);
        return 0;
    }
    if (wedge.empty()) throw CLI::ValidationError("ktypes", "need --wedge p,q or --table");
    auto pq = parse_int_list(wedge);
    if (pq.size() != 2) throw CLI::ValidationError("--wedge", "expected two integers p,q");
    auto dec = gsp::wedge_pq(n, static_cast<int>(pq[0]), static_cast<int>(pq[1]));
    if (as_json) {
        std::cout << decomposition_json(dec).dump() << "\n";
    } else {
        for (auto& [w, m] : dec)
            std::cout << m.str() << " x " << gsp::format_weight(w) << "\n";
    }
    return 0;
}

int run_project(int n, bool as_json) {
    if (n != 3) throw std::invalid_argument("project: only n = 3 is defined");
    auto cert = gsp::certify_projection();
    json out;
    out["scalar_A"] = cert.scalar_raise.str();
    out["scalar_B"] = cert.scalar_round_trip.str();
    out["alpha"] = cert.alpha.str();
    out["alpha_mirror"] = cert.alpha_mirror.str();
    out["iterated_square_scalar"] = cert.iterated_square_round_trip.str();
    out["gram_alpha"] = cert.gram_alpha.str();
    out["highest_weight_checks"] = {{"tau_2_2_m4", cert.hw_22m4}, {"tau_4_m2_m2", cert.hw_4m2m2}};
    if (as_json) std::cout << out.dump() << "\n";
    else
        std::cout << "raise scalar      " << out["scalar_A"].get<std::string>() << "\n"
                  << "round-trip scalar " << out["scalar_B"].get<std::string>() << "\n"
                  << "alpha             " << out["alpha"].get<std::string>() << "\n"
                  << "alpha (mirror)    " << out["alpha_mirror"].get<std::string>() << "\n"
                  << "gram alpha        " << out["gram_alpha"].get<std::string>() << "\n";
    return 0;
}

int run_hodge(int n, const std::string& lambda_str, const std::string& split, bool as_json) {
    gsp::Weight lambda = lambda_str.empty() ? gsp::Weight(static_cast<size_t>(n), 0)
                                            : parse_int_list(lambda_str);
    auto t = gsp::hodge_weights(n, lambda);
    if (!split.empty()) {
        auto ab = parse_int_list(split);
        if (ab.size() != 2) throw CLI::ValidationError("--diag-split", "expected h_plus,h_minus");
        t.diag_split = {{ab[0], ab[1]}};
    } else if (t.w % 2 == 0) {
        t.diag_split = {{t.at(t.w / 2, t.w / 2), 0}};
    }
    json out;
    out["w"] = t.w;
    json entries = json::array();
    for (auto& [pq, h] : t.h) entries.push_back(json::array({pq.first, pq.second, h}));
    out["h"] = entries;
    if (t.diag_split)
        out["diag_split"] = json::array({t.diag_split->first, t.diag_split->second});
    auto sp = gsp::orderpole_special(t, n);
    out["pole"] = {{"m0", sp.m0}, {"order", sp.order}, {"branch", sp.branch}};
    if (as_json) std::cout << out.dump() << "\n";
    else {
        std::cout << "weight " << t.w << "\n";
        for (auto& [pq, h] : t.h)
            std::cout << "  h^{" << pq.first << "," << pq.second << "} = " << h << "\n";
        std::cout << "pole at m = " << sp.m0 << " of order " << sp.order << " (branch "
                  << sp.branch << ")\n";
    }
    return 0;
}

int run_lfactor(const std::string& satake_path, const std::string& s_str, long long p_max,
                bool as_json) {
    std::ifstream in(satake_path);
    if (!in) throw std::runtime_error("cannot open satake file: " + satake_path);
    json data = json::parse(in);
    std::vector<gsp::SatakeDatum> sat;
    for (auto& rec : data) {
        gsp::SatakeDatum d;
        d.ell = rec.at("ell").get<long long>();
        const char* keys[4] = {"c0", "c1", "c2", "c3"};
        for (int i = 0; i < 4; ++i) {
            auto& v = rec.at(keys[i]);
            if (v.is_string() && v.get<std::string>() == "ram") {
                d.c[static_cast<size_t>(i)] = {};
            } else if (v.is_array()) {
                d.c[static_cast<size_t>(i)].value =
                    gsp::Cplx{v[0].get<double>(), v[1].get<double>()};
            } else {
                d.c[static_cast<size_t>(i)].value = gsp::Cplx{v.get<double>(), 0.0};
            }
        }
        sat.push_back(d);
    }
    if (p_max == 0)
        for (auto& d : sat) p_max = std::max(p_max, d.ell);
    auto s = parse_complex(s_str);
    auto res = gsp::partial_L(sat, s, p_max);
    json out;
    out["value"] = json::array({res.value.real(), res.value.imag()});
    out["tail_bound"] = res.tail_bound;
    out["factors_used"] = res.factors_used;
    if (as_json) std::cout << out.dump() << "\n";
    else
        std::cout << "L ~ " << res.value.real() << (res.value.imag() < 0 ? " - " : " + ")
                  << std::abs(res.value.imag()) << "i   (tail bound " << res.tail_bound << ", "
                  << res.factors_used << " factors)\n";
    return 0;
}

int run_klf(int N, const std::string& z_str, const std::string& preset,
            const std::string& config_path, bool as_json) {
    auto zc = parse_complex(z_str);
    gsp::UpperHalfPoint z{zc.real(), zc.imag()};
    auto prec = load_precision(preset, config_path);
    auto eis = gsp::eisenstein_value(N, z, 0.0, prec);
    double ul = gsp::u_log(N, z, 1, prec);
    auto cor = gsp::corodlog_check(N, z, prec);
    json out;
    out["eis"] = eis.value;
    out["ulog"] = ul;
    out["residual"] = std::abs(eis.value - ul);
    out["bounds"] = {{"eis_abs_error", eis.abs_error_bound},
                     {"target_abs_error", prec.target_abs_error}};
    out["dlog_residual"] = cor.residual;
    if (as_json) std::cout << out.dump() << "\n";
    else
        std::cout << "E(g_z, Phi, 0)   = " << eis.value << "\n"
                  << "log|u(Phi_f)|    = " << ul << "\n"
                  << "residual         = " << std::abs(eis.value - ul) << "\n"
                  << "dlog residual    = " << cor.residual << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symplectic discrete-series combinatorics and Spin L-factor tools"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a single JSON document on stdout");

    auto* sp = app.add_subcommand("partitions", "special partitions and embedding invariants");
    long long part_n = 0, scan_max = 0;
    sp->add_option("--n", part_n, "partition target");
    sp->add_option("--scan-max", scan_max, "scan 2..N for missing cases");

    auto* sd = app.add_subcommand("dseries", "discrete-series packet data");
    int ds_n = 3;
    std::string ds_lambda;
    sd->add_option("--n", ds_n, "rank")->required();
    sd->add_option("--lambda", ds_lambda, "comma-separated dominant weight");

    auto* sk = app.add_subcommand("ktypes", "K-type decompositions of wedge powers");
    int kt_n = 3;
    std::string kt_wedge;
    bool kt_table = false;
    sk->add_option("--n", kt_n, "rank")->required();
    sk->add_option("--wedge", kt_wedge, "bidegree p,q");
    sk->add_flag("--table", kt_table, "print the full middle-degree table");

    auto* spr = app.add_subcommand("project", "certify the wedge projection scalars");
    int pr_n = 3;
    spr->add_option("--n", pr_n, "rank (only 3)");

    auto* sh = app.add_subcommand("hodge", "Hodge numbers and Gamma-factor pole data");
    int h_n = 3;
    std::string h_lambda, h_split;
    sh->add_option("--n", h_n, "rank")->required();
    sh->add_option("--lambda", h_lambda, "comma-separated dominant weight");
    sh->add_option("--diag-split", h_split, "h_plus,h_minus for the middle diagonal");

    auto* sl = app.add_subcommand("lfactor", "truncated Spin Euler products");
    std::string satake_path, s_str = "2";
    long long p_max = 0;
    sl->add_option("--satake", satake_path, "JSON file of Satake data")->required();
    sl->add_option("--s", s_str, "evaluation point, e.g. 2+0i");
    sl->add_option("--p-max", p_max, "prime cutoff (default: largest datum)");

    auto* skl = app.add_subcommand("klf", "Kronecker limit formula check");
    int klf_N = 5;
    std::string klf_z = "0+1i", klf_prec = "default", klf_config;
    skl->add_option("--N", klf_N, "level")->required();
    skl->add_option("--z", klf_z, "upper half-plane point, e.g. 0.1+0.8i");
    skl->add_option("--prec", klf_prec, "precision preset: default | high");
    skl->add_option("--config", klf_config, "JSON file with PrecisionSpec overrides");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sp->parsed()) {
            if (scan_max == 0 && part_n == 0)
                throw CLI::ValidationError("partitions", "need --n or --scan-max");
            return run_partitions(part_n, scan_max, as_json);
        }
        if (sd->parsed()) return run_dseries(ds_n, ds_lambda, as_json);
        if (sk->parsed()) return run_ktypes(kt_n, kt_wedge, kt_table, as_json);
        if (spr->parsed()) return run_project(pr_n, as_json);
        if (sh->parsed()) return run_hodge(h_n, h_lambda, h_split, as_json);
        if (sl->parsed()) return run_lfactor(satake_path, s_str, p_max, as_json);
        if (skl->parsed()) return run_klf(klf_N, klf_z, klf_prec, klf_config, as_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
