// agcodes: command-line front end for the algebraic-surface code toolkit.
//
// Subcommands: field-table, count-points, analyze-curve, search, tally,
// build-code, min-distance, params, compare, optimal-rate, blowup-check,
// bounds. Every run writes a manifest (arguments, version, reduction
// polynomials used, timing, output digests) alongside its outputs. Data
// outputs are byte-deterministic; the manifest carries the timing.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "agcodes/blowup.hpp"
#include "agcodes/constructions.hpp"
#include "agcodes/curve_analysis.hpp"
#include "agcodes/elliptic.hpp"
#include "agcodes/json_out.hpp"
#include "agcodes/manifest.hpp"
#include "agcodes/rate_optimizer.hpp"
#include "agcodes/search.hpp"

using namespace agcodes;
using nlohmann::json;

namespace {

std::string out_dir() {
    const char* d = std::getenv("AGCODES_OUT_DIR");
    return d && *d ? d : ".";
}

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    return out_dir() + "/" + path;
}

// --curve accepts either a literal "d=..; f=..." or a file whose first
// non-empty line holds one.
PlaneCurve load_curve(const std::string& arg) {
    if (arg.rfind("d=", 0) == 0) return parse_curve(arg);
    std::ifstream is(arg);
    if (!is) throw std::invalid_argument("cannot open curve file: " + arg);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) return parse_curve(line);
    throw std::invalid_argument("no curve found in file: " + arg);
}

unsigned m_from_q(long long q) {
    for (unsigned m = 1; m <= kMaxExtensionDegree; ++m)
        if ((1ll << m) == q) return m;
    throw std::invalid_argument("q must be a power of two in 2..2048, got " + std::to_string(q));
}

std::vector<unsigned> parse_fields(const std::string& s) {
    std::vector<unsigned> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(static_cast<unsigned>(std::stoul(tok)));
    if (out.empty()) throw std::invalid_argument("--fields: empty list");
    return out;
}

// "0.1..0.9" (step 0.1) or a comma list of decimals, parsed exactly.
std::vector<Rat> parse_targets(const std::string& s) {
    auto parse_decimal = [](const std::string& t) {
        const auto dot = t.find('.');
        if (dot == std::string::npos) return Rat(std::stoll(t));
        const std::string frac = t.substr(dot + 1);
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const long long whole = dot == 0 ? 0 : std::stoll(t.substr(0, dot));
        return Rat(whole * den + std::stoll(frac), den);
    };
    std::vector<Rat> out;
    const auto range = s.find("..");
    if (range != std::string::npos) {
        const Rat lo = parse_decimal(s.substr(0, range));
        const Rat hi = parse_decimal(s.substr(range + 2));
        for (Rat r = lo; r <= hi; r = r + Rat(1, 10)) out.push_back(r);
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_decimal(tok));
    if (out.empty()) throw std::invalid_argument("--targets: empty list");
    return out;
}

std::uint64_t parse_limit(const std::string& s) {
    const auto caret = s.find('^');
    if (caret != std::string::npos) {
        const std::uint64_t base = std::stoull(s.substr(0, caret));
        const unsigned exp = static_cast<unsigned>(std::stoul(s.substr(caret + 1)));
        std::uint64_t v = 1;
        for (unsigned i = 0; i < exp; ++i) v *= base;
        return v;
    }
    return std::stoull(s);
}

struct ManifestScope {
    RunManifest mf;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    ManifestScope(const std::string& sub, int argc, char** argv) {
        mf.subcommand = sub;
        for (int i = 0; i < argc; ++i) mf.args.push_back(argv[i]);
    }
    void used_field(unsigned m) { mf.fields_used[m] = make_field(m)->reduction_string(); }
    void output(const std::string& path) { mf.record_output(path); }
    ~ManifestScope() {
        mf.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        const std::string path =
            mf.outputs.empty() ? out_dir() + "/" + mf.subcommand + "-manifest.json"
                               : mf.outputs.front().path + ".manifest.json";
        try {
            mf.write(path);
        } catch (...) {
            // manifest failures must not mask the command's own status
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codes from ruled surfaces and plane-curve search over GF(2^m)"};
    app.require_subcommand(1);

    // ---- field-table ----
    auto* cmd_field = app.add_subcommand("field-table", "print field data, optionally the mul table");
    unsigned ft_m = 3;
    bool ft_mul = false;
    std::string ft_out;
    cmd_field->add_option("--m", ft_m, "extension degree 1..11")->required();
    cmd_field->add_flag("--mul-table", ft_mul, "emit the full multiplication table (m <= 4)");
    cmd_field->add_option("--out", ft_out, "write the table as CSV to this file");

    // ---- count-points ----
    auto* cmd_count = app.add_subcommand("count-points", "count rational points of a plane curve");
    std::string cp_curve;
    unsigned cp_m = 3;
    cmd_count->add_option("--curve", cp_curve, "curve text 'd=..; f=..' or a file")->required();
    cmd_count->add_option("--m", cp_m, "extension degree")->required();

    // ---- analyze-curve ----
    auto* cmd_analyze = app.add_subcommand("analyze-curve", "full per-field curve report as JSON");
    std::string an_curve, an_out;
    unsigned an_m = 3;
    cmd_analyze->add_option("--curve", an_curve, "curve text or file")->required();
    cmd_analyze->add_option("--m", an_m, "extension degree")->required();
    cmd_analyze->add_option("--out", an_out, "also write the JSON here");

    // ---- search ----
    auto* cmd_search = app.add_subcommand("search", "orbit-reduced exhaustive curve search");
    int se_degree = 4;
    std::string se_fields, se_out, se_tally, se_resume;
    std::uint64_t se_max = 0;
    unsigned se_jobs = 1;
    cmd_search->add_option("--degree", se_degree, "curve degree 1..6")->required();
    cmd_search->add_option("--fields", se_fields, "comma list of m values")->required();
    cmd_search->add_option("--out", se_out, "results CSV")->required();
    cmd_search->add_option("--tally", se_tally, "tally CSV");
    cmd_search->add_option("--resume", se_resume, "checkpoint file (resumes when present)");
    cmd_search->add_option("--max-reps", se_max, "representative budget (0 = all)");
    cmd_search->add_option("--jobs", se_jobs, "worker threads");

    // ---- tally ----
    auto* cmd_tally = app.add_subcommand("tally", "rebuild a tally from a results CSV");
    std::string ta_results, ta_out;
    cmd_tally->add_option("--results", ta_results, "results CSV from `search`")->required();
    cmd_tally->add_option("--out", ta_out, "tally CSV")->required();

    // ---- build-code ----
    auto* cmd_build = app.add_subcommand("build-code", "emit a generator matrix as CSV");
    std::string bc_family, bc_out;
    long long bc_q = 0, bc_k = 0, bc_k1 = 0, bc_k2 = 0, bc_a = -1, bc_b = -1;
    cmd_build->add_option("--family", bc_family, "ext-rs | product | lomont1")->required();
    cmd_build->add_option("--q", bc_q, "field size (power of two)")->required();
    cmd_build->add_option("--k", bc_k, "dimension (ext-rs)");
    cmd_build->add_option("--k1", bc_k1, "first factor dimension (product)");
    cmd_build->add_option("--k2", bc_k2, "second factor dimension (product)");
    cmd_build->add_option("--a", bc_a, "divisor coefficient a (lomont1)");
    cmd_build->add_option("--b", bc_b, "divisor coefficient b (lomont1)");
    cmd_build->add_option("--out", bc_out, "output CSV")->required();

    // ---- min-distance ----
    auto* cmd_dist = app.add_subcommand("min-distance", "exact minimum distance of a generator CSV");
    std::string md_gen, md_limit = "2^24";
    unsigned md_jobs = 1;
    cmd_dist->add_option("--gen", md_gen, "generator matrix CSV")->required();
    cmd_dist->add_option("--limit", md_limit, "work limit, e.g. 2^24");
    cmd_dist->add_option("--jobs", md_jobs, "worker threads");

    // ---- params ----
    auto* cmd_params = app.add_subcommand("params", "parameter calculators for the code families");
    std::string pa_family;
    long long pa_q = 0, pa_aleph = 0, pa_a = 0, pa_b = 0, pa_e = 0, pa_g = 0, pa_k2 = 0;
    bool pa_ample = false, pa_exact = false;
    cmd_params->add_option("--family", pa_family, "lomont1|lomont2|ruled|decomposable|goppa")
        ->required();
    cmd_params->add_option("--q", pa_q, "field size");
    cmd_params->add_option("--aleph", pa_aleph, "rational point count of the base curve");
    cmd_params->add_option("--a", pa_a, "divisor coefficient a");
    cmd_params->add_option("--b", pa_b, "divisor coefficient b");
    cmd_params->add_option("--e", pa_e, "normalized invariant e");
    cmd_params->add_option("--g", pa_g, "base curve genus");
    cmd_params->add_option("--k2", pa_k2, "Goppa dimension");
    cmd_params->add_flag("--ample", pa_ample, "treat the bundle as ample (ruled)");
    cmd_params->add_flag("--exact", pa_exact, "include exact rationals");

    // ---- compare ----
    auto* cmd_compare = app.add_subcommand("compare", "best delta per rate target, per family");
    long long co_q = 256, co_aleph = 255;
    std::string co_targets = "0.1..0.9";
    std::string co_families = "rs-product,lomont1";
    std::string co_out;
    bool co_csv = false, co_exact = false;
    cmd_compare->add_option("--q", co_q, "field size");
    cmd_compare->add_option("--aleph", co_aleph, "base curve points (goppa/lomont2 families)");
    cmd_compare->add_option("--targets", co_targets, "rate targets, e.g. 0.1..0.9 or 0.25,0.5");
    cmd_compare->add_option("--families", co_families,
                            "comma list: rs-product,lomont1,goppa-product,lomont2");
    cmd_compare->add_option("--out", co_out, "write CSV here instead of stdout");
    cmd_compare->add_flag("--csv", co_csv, "CSV output (the default layout)");
    cmd_compare->add_flag("--exact", co_exact, "exact rationals instead of 6 significant figures");

    // ---- optimal-rate ----
    auto* cmd_opt = app.add_subcommand("optimal-rate", "continuous optimum and integer candidates");
    std::string op_family = "lomont2";
    long long op_q = 256, op_aleph = 255;
    double op_delta = 0.1;
    cmd_opt->add_option("--family", op_family, "lomont2 | goppa-product");
    cmd_opt->add_option("--q", op_q, "field size");
    cmd_opt->add_option("--aleph", op_aleph, "base curve points");
    cmd_opt->add_option("--delta", op_delta, "target relative distance")->required();

    // ---- blowup-check ----
    auto* cmd_blow = app.add_subcommand("blowup-check", "blow-up family feasibility trace");
    long long bl_q = 4, bl_h = 6, bl_H0L0 = 1, bl_S = 1, bl_n0 = 25, bl_lambda = 0;
    std::string bl_t = "1";
    unsigned bl_steps = 10;
    bool bl_json = false;
    cmd_blow->set_help_flag("--help", "print help");  // frees -h/--h for the lift multiplier
    cmd_blow->add_option("--q", bl_q)->required();
    cmd_blow->add_option("--h", bl_h)->required();
    cmd_blow->add_option("--t", bl_t, "comma list of t_i (last repeats)")->required();
    cmd_blow->add_option("--H0L0", bl_H0L0)->required();
    cmd_blow->add_option("--s0L0C0", bl_S)->required();
    cmd_blow->add_option("--n0", bl_n0)->required();
    cmd_blow->add_option("--lambda-max", bl_lambda);
    cmd_blow->add_option("--steps", bl_steps);
    cmd_blow->add_flag("--json", bl_json);

    // ---- bounds ----
    auto* cmd_bounds = app.add_subcommand("bounds", "GV and TVZ bound values");
    double bo_q = 256, bo_delta = 0.1;
    cmd_bounds->add_option("--q", bo_q)->required();
    cmd_bounds->add_option("--delta", bo_delta)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_field) {
            ManifestScope ms("field-table", argc, argv);
            const auto f = make_field(ft_m);
            ms.used_field(ft_m);
            std::cout << "m=" << ft_m << "\nq=" << f->q() << "\nreduction=" << f->reduction_string()
                      << " (mask 0x" << std::hex << f->reduction_mask() << std::dec << ")\n"
                      << "generator=" << f->generator() << "\n";
            if (ft_mul) {
                if (ft_m > 4) throw std::invalid_argument("--mul-table is limited to m <= 4");
                std::ostringstream table;
                table << "mul";
                for (std::uint32_t b = 0; b < f->q(); ++b) table << ',' << b;
                table << "\n";
                for (std::uint32_t a = 0; a < f->q(); ++a) {
                    table << a;
                    for (std::uint32_t b = 0; b < f->q(); ++b) table << ',' << f->mul(a, b);
                    table << "\n";
                }
                if (ft_out.empty()) {
                    std::cout << table.str();
                } else {
                    const std::string path = resolve_out(ft_out);
                    std::ofstream(path) << table.str();
                    ms.output(path);
                }
            }
        } else if (*cmd_count) {
            ManifestScope ms("count-points", argc, argv);
            const auto f = make_field(cp_m);
            ms.used_field(cp_m);
            std::cout << count_points(load_curve(cp_curve), *f) << "\n";
        } else if (*cmd_analyze) {
            ManifestScope ms("analyze-curve", argc, argv);
            const auto f = make_field(an_m);
            ms.used_field(an_m);
            const auto curve = load_curve(an_curve);
            if (curve.degree >= 2 && curve.divisible_by_variable())
                throw std::invalid_argument(
                    "curve is divisible by a variable (clearly reducible); analysis rejected");
            const auto rep = analyze_curve(curve, *f);
            const std::string text = curve_report_json(rep).dump(2) + "\n";
            std::cout << text;
            if (!an_out.empty()) {
                const std::string path = resolve_out(an_out);
                std::ofstream(path) << text;
                ms.output(path);
            }
        } else if (*cmd_search) {
            ManifestScope ms("search", argc, argv);
            SearchConfig cfg;
            cfg.degree = se_degree;
            cfg.field_ms = parse_fields(se_fields);
            cfg.max_representatives = se_max;
            cfg.jobs = se_jobs;
            if (!se_resume.empty()) cfg.checkpoint_path = resolve_out(se_resume);
            for (unsigned m : cfg.field_ms) ms.used_field(m);
            const auto res = run_search(cfg);
            const std::string out_path = resolve_out(se_out);
            {
                std::ofstream os(out_path);
                write_search_csv(os, res.rows);
            }
            ms.output(out_path);
            if (!se_tally.empty()) {
                const std::string tally_path = resolve_out(se_tally);
                {
                    std::ofstream os(tally_path);
                    write_tally_csv(os, res.tally);
                }
                ms.output(tally_path);
            }
            std::cout << "representatives=" << res.representatives_processed << "/"
                      << res.representatives_total << (res.truncated ? " (TRUNCATED by budget)" : "")
                      << "\n";
        } else if (*cmd_tally) {
            ManifestScope ms("tally", argc, argv);
            std::ifstream is(resolve_out(ta_results));
            if (!is) throw std::invalid_argument("cannot open " + ta_results);
            const auto t = tally_from_csv(is);
            const std::string path = resolve_out(ta_out);
            {
                std::ofstream os(path);
                write_tally_csv(os, t);
            }
            ms.output(path);
        } else if (*cmd_build) {
            ManifestScope ms("build-code", argc, argv);
            const unsigned m = m_from_q(bc_q);
            ms.used_field(m);
            auto field = make_field(m);
            GeneratorMatrix g;
            if (bc_family == "ext-rs") {
                if (bc_k <= 0) throw std::invalid_argument("ext-rs needs --k");
                g = extended_rs(field, bc_k);
            } else if (bc_family == "product") {
                if (bc_k1 <= 0 || bc_k2 <= 0) throw std::invalid_argument("product needs --k1 --k2");
                g = product_code(extended_rs(field, bc_k1), extended_rs(field, bc_k2));
            } else if (bc_family == "lomont1") {
                if (bc_a < 0 || bc_b < 0) throw std::invalid_argument("lomont1 needs --a --b");
                g = lomont1_generator(field, bc_a, bc_b);
            } else {
                throw std::invalid_argument("unknown family: " + bc_family);
            }
            const std::string path = resolve_out(bc_out);
            {
                std::ofstream os(path);
                write_generator_csv(os, g);
            }
            ms.output(path);
            std::cout << "wrote [" << g.n << "," << g.k << "] generator to " << path << "\n";
        } else if (*cmd_dist) {
            ManifestScope ms("min-distance", argc, argv);
            std::ifstream is(resolve_out(md_gen));
            if (!is) throw std::invalid_argument("cannot open " + md_gen);
            const auto g = read_generator_csv(is);
            ms.used_field(g.field->m());
            std::cout << min_distance_exhaustive(g, parse_limit(md_limit), md_jobs) << "\n";
        } else if (*cmd_params) {
            ManifestScope ms("params", argc, argv);
            json j;
            if (pa_family == "lomont1") {
                j = code_params_json(lomont1_params(pa_q, pa_a, pa_b, pa_e), pa_exact);
            } else if (pa_family == "lomont2") {
                j = code_params_json(lomont2_params(pa_q, pa_aleph, pa_a, pa_b), pa_exact);
            } else if (pa_family == "goppa") {
                j = code_params_json(goppa_params(pa_aleph, pa_k2), pa_exact);
            } else if (pa_family == "ruled") {
                const auto r = ruled_params({pa_q, pa_g, pa_aleph, pa_e, pa_a, pa_b, 2, pa_ample});
                j = {{"n", r.n},
                     {"d_bound", r.d_bound},
                     {"l", r.l},
                     {"kappa_ceil", r.kappa_ceil},
                     {"k", nullptr},
                     {"k_note", r.k_note}};
            } else if (pa_family == "decomposable") {
                const auto r = decomposable_params(pa_q, pa_g, pa_e, pa_aleph, pa_a, pa_b);
                j = {{"n", r.n},
                     {"k", r.k},
                     {"k_is_lower_bound", r.k_is_lower_bound},
                     {"uncertified_terms", r.uncertified_terms},
                     {"d_bound", r.d_bound}};
            } else {
                throw std::invalid_argument("unknown family: " + pa_family);
            }
            j["family"] = pa_family;
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_compare) {
            ManifestScope ms("compare", argc, argv);
            const auto targets = parse_targets(co_targets);
            std::vector<Family> fams;
            {
                std::stringstream ss(co_families);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    const auto f = family_from_name(tok);
                    if (!f) throw std::invalid_argument("unknown family: " + tok);
                    fams.push_back(*f);
                }
            }
            std::ostringstream os;
            os << "target";
            for (const auto fam : fams) {
                const char* n = family_name(fam);
                os << ',' << n << "_p1," << n << "_p2," << n << "_rate," << n << "_delta";
            }
            os << "\n";
            std::vector<std::vector<RatePoint>> per_family;
            for (const auto fam : fams)
                per_family.push_back(best_pair_table(co_q, co_aleph, fam, targets));
            for (std::size_t t = 0; t < targets.size(); ++t) {
                os << to_decimal(targets[t], 6);
                for (std::size_t fi = 0; fi < fams.size(); ++fi) {
                    const auto& r = per_family[fi][t];
                    os << ',' << r.p1 << ',' << r.p2 << ','
                       << (co_exact ? r.rate.to_string() : to_decimal(r.rate, 6)) << ','
                       << (co_exact ? r.delta.to_string() : to_decimal(r.delta, 6));
                }
                os << "\n";
            }
            (void)co_csv;  // the layout is CSV either way
            if (co_out.empty()) {
                std::cout << os.str();
            } else {
                const std::string path = resolve_out(co_out);
                std::ofstream(path) << os.str();
                ms.output(path);
            }
        } else if (*cmd_opt) {
            ManifestScope ms("optimal-rate", argc, argv);
            json j;
            auto points_json = rate_points_json;
            if (op_family == "lomont2") {
                const auto o = lomont2_optimum(op_q, op_aleph, op_delta);
                j = {{"family", "lomont2"},
                     {"b0", o.b0},
                     {"a0", o.a0},
                     {"candidates", points_json(o.candidates)}};
            } else if (op_family == "goppa-product" || op_family == "rs-product") {
                const auto o = product_optimum(op_q, op_aleph, op_delta);
                j = {{"family", "goppa-product"},
                     {"k2", o.k2},
                     {"k1", o.k1},
                     {"candidates", points_json(o.candidates)}};
            } else {
                throw std::invalid_argument("optimal-rate supports lomont2 and goppa-product");
            }
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_blow) {
            ManifestScope ms("blowup-check", argc, argv);
            FamilyConfig cfg;
            cfg.q = bl_q;
            cfg.h = bl_h;
            cfg.H0L0 = bl_H0L0;
            cfg.s0L0C0 = bl_S;
            cfg.n0 = bl_n0;
            cfg.lambda_max = bl_lambda;
            {
                std::stringstream ss(bl_t);
                std::string tok;
                while (std::getline(ss, tok, ',')) cfg.t.push_back(std::stoll(tok));
            }
            const auto cond = check_conditions(cfg);
            const auto trace = m_sequence(cfg, bl_steps);
            if (bl_json) {
                std::cout << blowup_json(cond, trace).dump(2) << "\n";
            } else {
                std::cout << cond.diagnostics << "\n";
                for (const auto& s : trace.steps)
                    std::cout << "i=" << s.i << " H.L=" << s.hl.to_string()
                              << " m=" << s.m.to_string() << " n=" << s.n.to_string()
                              << (s.ok ? "" : "  [FAIL: need 0 <= m < n]") << "\n";
            }
        } else if (*cmd_bounds) {
            ManifestScope ms("bounds", argc, argv);
            std::cout << "gv=" << gv_bound(bo_q, bo_delta) << "\ntvz=" << tvz_bound(bo_q, bo_delta)
                      << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
