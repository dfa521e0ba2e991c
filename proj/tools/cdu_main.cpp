// Command-line front end: field setup, spectrum/uniformity computation,
// verification sweeps, and experiment reproduction, with machine-readable
// JSON-lines or CSV output. Exit codes: 0 = success / all checks passed,
// 1 = a verification failed, 2 = usage or input error. Data goes to stdout
// (or --out); progress and diagnostics go to stderr only.

#include "cdu/catalog.hpp"
#include "cdu/cdiff.hpp"
#include "cdu/circle.hpp"
#include "cdu/field.hpp"
#include "cdu/niho.hpp"
#include "cdu/quad.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

using nlohmann::ordered_json;

namespace {

using namespace cdu;

struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) {
            throw std::invalid_argument("cannot open output file: " + path);
        }
        os = &file;
    }
    void line(const std::string& s) { *os << s << '\n'; }
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out;
    out.reserve(s.size() + 2);
    out += '"';
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

// c selector: a single hex element, or one of the named sets "all",
// "circle" (mu \ {1}), "non-circle" (complement of mu, 0 included).
std::vector<Elem> select_c(const Field& f, const std::string& sel) {
    if (sel == "all") {
        std::vector<Elem> out(f.order());
        std::iota(out.begin(), out.end(), Elem{0});
        return out;
    }
    if (sel == "circle" || sel == "non-circle") {
        if (!f.even_degree()) {
            throw std::invalid_argument("selector '" + sel +
                                        "' needs even degree n");
        }
        std::vector<Elem> out;
        for (Elem c = 0; c < f.order(); ++c) {
            const bool member = on_circle(f, c);
            if (sel == "circle" ? (member && c != 1) : !member) {
                out.push_back(c);
            }
        }
        return out;
    }
    return {parse_elem(sel, f)};
}

// lines[i] = fn(i) computed by `jobs` workers; the caller emits in index
// order, so output bytes never depend on the parallelism degree.
std::vector<std::string> parallel_lines(
    std::size_t count, unsigned jobs,
    const std::function<std::string(std::size_t)>& fn) {
    std::vector<std::string> lines(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) lines[i] = fn(i);
        return lines;
    }
    const auto workers =
        static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count;
                     i = next.fetch_add(1)) {
                    lines[i] = fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return lines;
}

Field make_field(unsigned n, const std::string& poly_hex) {
    return poly_hex.empty() ? Field(n) : Field(n, parse_hex(poly_hex));
}

struct CommonOpts {
    std::string format = "json";
    std::string out;
    unsigned jobs = 1;
};

int run_field_info(unsigned n, const std::string& poly_hex,
                   const CommonOpts& o) {
    const Field f = make_field(n, poly_hex);
    std::vector<unsigned> divs;
    for (unsigned t = 1; t <= n; ++t) {
        if (n % t == 0) divs.push_back(t);
    }
    Sink sink;
    sink.open(o.out);
    if (o.format == "csv") {
        sink.line("n,poly_hex,order,subfield_degrees,m,circle_size");
        std::string ds;
        for (unsigned t : divs) {
            if (!ds.empty()) ds += ' ';
            ds += std::to_string(t);
        }
        std::ostringstream row;
        row << n << ',' << to_hex(f.reduction_poly()) << ',' << f.order()
            << ',' << ds << ',';
        if (f.even_degree()) {
            row << f.m() << ',' << ((std::uint64_t{1} << f.m()) + 1);
        } else {
            row << ',';
        }
        sink.line(row.str());
    } else {
        ordered_json j;
        j["n"] = n;
        j["poly_hex"] = to_hex(f.reduction_poly());
        j["order"] = f.order();
        j["subfield_degrees"] = divs;
        if (f.even_degree()) {
            j["m"] = f.m();
            j["circle_size"] = (std::uint64_t{1} << f.m()) + 1;
        }
        sink.line(j.dump());
    }
    return 0;
}

int run_spectrum(unsigned n, const std::string& poly_hex, std::uint64_t d,
                 const std::string& c_sel, const CommonOpts& o) {
    const Field f = make_field(n, poly_hex);
    const PowerFunc F = make_power(f, d);
    const auto cs = select_c(f, c_sel);
    const bool csv = o.format == "csv";
    const auto lines = parallel_lines(cs.size(), o.jobs, [&](std::size_t i) {
        const SpectrumReport rep = spectrum(F, cs[i]);
        if (csv) {
            std::string s;
            for (Elem b = 0; b < f.order(); ++b) {
                s += to_hex(rep.c);
                s += ',';
                s += to_hex(b);
                s += ',';
                s += std::to_string(rep.counts[b]);
                s += '\n';
            }
            s.pop_back();
            return s;
        }
        ordered_json j;
        j["c"] = to_hex(rep.c);
        j["uniformity"] = rep.uniformity;
        j["a0_gcd"] = rep.a0_gcd;
        std::map<std::uint32_t, std::uint32_t> tally;
        for (std::uint32_t cnt : rep.counts) ++tally[cnt];
        ordered_json h = ordered_json::object();
        for (const auto& [cnt, mult] : tally) h[std::to_string(cnt)] = mult;
        j["histogram"] = h;
        j["pcn"] = rep.pcn;
        j["apcn"] = rep.apcn;
        return j.dump();
    });
    Sink sink;
    sink.open(o.out);
    if (csv) sink.line("c_hex,b_hex,count");
    for (const auto& L : lines) sink.line(L);
    return 0;
}

int run_cdu(unsigned n, const std::string& poly_hex, std::uint64_t d,
            const std::string& c_sel, const CommonOpts& o) {
    const Field f = make_field(n, poly_hex);
    const PowerFunc F = make_power(f, d);
    const auto cs = select_c(f, c_sel);
    const bool csv = o.format == "csv";
    const auto lines = parallel_lines(cs.size(), o.jobs, [&](std::size_t i) {
        const std::uint32_t u = cdu_general(f, F.table, cs[i]);
        if (csv) return to_hex(cs[i]) + ',' + std::to_string(u);
        ordered_json j;
        j["c"] = to_hex(cs[i]);
        j["uniformity"] = u;
        return j.dump();
    });
    Sink sink;
    sink.open(o.out);
    if (csv) sink.line("c_hex,uniformity");
    for (const auto& L : lines) sink.line(L);
    return 0;
}

int run_polar(unsigned n, const std::string& poly_hex, const std::string& x_hex,
              const CommonOpts& o) {
    const Field f = make_field(n, poly_hex);
    const Elem x = parse_elem(x_hex, f);
    const PolarForm pf = polar_decompose(f, x);
    Sink sink;
    sink.open(o.out);
    if (o.format == "csv") {
        sink.line("x_hex,alpha_hex,u_hex");
        sink.line(to_hex(x) + ',' + to_hex(pf.alpha) + ',' + to_hex(pf.u));
    } else {
        ordered_json j;
        j["x"] = to_hex(x);
        j["alpha"] = to_hex(pf.alpha);
        j["u"] = to_hex(pf.u);
        sink.line(j.dump());
    }
    return 0;
}

int run_quad_roots(unsigned n, const std::string& poly_hex, unsigned r,
                   const std::string& a_hex, const std::string& b_hex,
                   const std::string& c_hex, const CommonOpts& o) {
    const Field f = make_field(n, poly_hex);
    const QuadPoly q{r, parse_elem(a_hex, f), parse_elem(b_hex, f),
                     parse_elem(c_hex, f)};
    const auto roots = roots_in_field(f, q);
    std::vector<Elem> circle_roots;
    if (f.even_degree()) circle_roots = roots_in_circle(f, q);
    Sink sink;
    sink.open(o.out);
    if (o.format == "csv") {
        sink.line("root_hex,on_circle");
        for (Elem x : roots) {
            std::string oc;
            if (f.even_degree()) oc = on_circle(f, x) ? "true" : "false";
            sink.line(to_hex(x) + ',' + oc);
        }
    } else {
        ordered_json j;
        j["n"] = n;
        j["r"] = r;
        j["a"] = to_hex(q.a);
        j["b"] = to_hex(q.b);
        j["c"] = to_hex(q.c);
        ordered_json rs = ordered_json::array();
        for (Elem x : roots) rs.push_back(to_hex(x));
        j["roots"] = rs;
        j["root_count"] = roots.size();
        if (f.even_degree()) {
            ordered_json crs = ordered_json::array();
            for (Elem x : circle_roots) crs.push_back(to_hex(x));
            j["circle_roots"] = crs;
        }
        sink.line(j.dump());
    }
    return 0;
}

int run_verify_theorem1(const std::vector<unsigned>& ms,
                        const std::vector<unsigned>& ks,
                        unsigned structural_max_m, const CommonOpts& o) {
    struct Task {
        NihoParams p;
        Elem c;
    };
    struct Rec {
        bool is_skip;
        unsigned m, k;
        std::string reason;
        std::size_t task_index;
    };
    std::vector<Task> tasks;
    std::vector<Rec> plan;
    for (unsigned m : ms) {
        for (unsigned k : ks) {
            NihoParams p;
            try {
                p = make_params(m, k);
            } catch (const std::invalid_argument& e) {
                plan.push_back({true, m, k, e.what(), 0});
                continue;
            }
            const Field f(p.n);
            std::size_t count = 0;
            for (Elem c : unit_circle(f)) {
                if (c == 1) continue;
                plan.push_back({false, m, k, "", tasks.size()});
                tasks.push_back({p, c});
                ++count;
            }
            std::cerr << "verify-theorem1: m=" << m << " k=" << k << " d=" << p.d
                      << " (" << count << " c values"
                      << (p.m <= structural_max_m ? ", structural+brute"
                                                  : ", brute only")
                      << ")\n";
        }
    }

    const bool csv = o.format == "csv";
    std::vector<char> passed(tasks.size(), 0);
    const auto lines = parallel_lines(tasks.size(), o.jobs, [&](std::size_t i) {
        const auto& [p, c] = tasks[i];
        const Field f(p.n);
        const PowerFunc F = make_power(f, p.d);
        const std::uint32_t brute = spectrum(F, c).uniformity;
        const auto expected = static_cast<std::uint32_t>((1u << p.g) + 1);
        const bool structural_on = p.m <= structural_max_m;
        std::uint32_t structural = 0;
        if (structural_on) structural = structural_uniformity(f, p, c);
        const bool pass =
            brute == expected && (!structural_on || structural == expected);
        passed[i] = pass ? 1 : 0;
        if (csv) {
            std::ostringstream s;
            s << p.m << ',' << p.k << ',' << p.s << ',' << p.d << ','
              << to_hex(c) << ',';
            if (structural_on) s << structural;
            s << ',' << brute << ',' << expected << ','
              << (pass ? "true" : "false") << ',';
            return s.str();
        }
        ordered_json j;
        j["m"] = p.m;
        j["k"] = p.k;
        j["s"] = p.s;
        j["d"] = p.d;
        j["c_hex"] = to_hex(c);
        if (structural_on) {
            j["structural_uniformity"] = structural;
        } else {
            j["structural_uniformity"] = nullptr;
        }
        j["brute_uniformity"] = brute;
        j["expected"] = expected;
        j["pass"] = pass;
        return j.dump();
    });

    Sink sink;
    sink.open(o.out);
    if (csv) {
        sink.line(
            "m,k,s,d,c_hex,structural_uniformity,brute_uniformity,expected,"
            "pass,note");
    }
    for (const auto& r : plan) {
        if (r.is_skip) {
            if (csv) {
                sink.line(std::to_string(r.m) + ',' + std::to_string(r.k) +
                          ",,,,,,,," + csv_escape(r.reason));
            } else {
                ordered_json j;
                j["m"] = r.m;
                j["k"] = r.k;
                j["skip"] = r.reason;
                sink.line(j.dump());
            }
        } else {
            sink.line(lines[r.task_index]);
        }
    }
    const bool all_pass =
        std::all_of(passed.begin(), passed.end(), [](char v) { return v; });
    return all_pass ? 0 : 1;
}

int run_verify_table1(unsigned n_max, const CommonOpts& o) {
    const CatalogReport rep = verify_catalog(n_max);
    Sink sink;
    sink.open(o.out);
    std::size_t asserted = 0, recorded_failures = 0, asserted_failures = 0;
    for (const auto& e : rep.entries) {
        if (e.asserted) {
            ++asserted;
            if (!e.pass) ++asserted_failures;
        } else if (!e.pass) {
            ++recorded_failures;
        }
    }
    if (o.format == "csv") {
        sink.line("row,n,d,c_hex,observed,expect_lo,expect_hi,asserted,pass,note");
        for (const auto& e : rep.entries) {
            std::ostringstream s;
            s << e.row << ',' << e.n << ',' << e.d << ',' << to_hex(e.c) << ','
              << e.observed << ',' << e.expect_lo << ',' << e.expect_hi << ','
              << (e.asserted ? "true" : "false") << ','
              << (e.pass ? "true" : "false") << ',' << csv_escape(e.note);
            sink.line(s.str());
        }
    } else {
        for (const auto& r : rep.rows) {
            ordered_json j;
            j["row"] = r.id;
            j["description"] = r.description;
            j["note"] = r.note;
            sink.line(j.dump());
        }
        for (const auto& e : rep.entries) {
            ordered_json j;
            j["row"] = e.row;
            j["n"] = e.n;
            j["d"] = e.d;
            j["c_hex"] = to_hex(e.c);
            j["observed"] = e.observed;
            j["expect_lo"] = e.expect_lo;
            j["expect_hi"] = e.expect_hi;
            j["asserted"] = e.asserted;
            j["pass"] = e.pass;
            j["note"] = e.note;
            sink.line(j.dump());
        }
        ordered_json j;
        j["all_pass"] = rep.all_pass;
        j["entries"] = rep.entries.size();
        j["asserted"] = asserted;
        j["asserted_failures"] = asserted_failures;
        j["recorded_failures"] = recorded_failures;
        sink.line(j.dump());
    }
    return rep.all_pass ? 0 : 1;
}

int run_remark_experiments(unsigned m, unsigned k, const std::string& c_sel,
                           const CommonOpts& o) {
    const NihoParams p = make_params(m, k, /*experimental=*/m % 2 == 0);
    const Field f(p.n);
    const auto cs = select_c(f, c_sel);
    const ExperimentReport rep = experiment_sweep(f, p, cs);
    Sink sink;
    sink.open(o.out);
    if (o.format == "csv") {
        sink.line("c_hex,uniformity,in_circle");
        for (const auto& r : rep.records) {
            sink.line(to_hex(r.c) + ',' + std::to_string(r.uniformity) + ',' +
                      (r.in_circle ? "true" : "false"));
        }
    } else {
        for (const auto& r : rep.records) {
            ordered_json j;
            j["c_hex"] = to_hex(r.c);
            j["uniformity"] = r.uniformity;
            j["in_circle"] = r.in_circle;
            sink.line(j.dump());
        }
        ordered_json j;
        j["m"] = p.m;
        j["k"] = p.k;
        j["d"] = p.d;
        j["has_claim"] = rep.has_claim;
        j["expected_set"] = rep.expected_set;
        j["all_in_expected"] = rep.all_in_expected;
        sink.line(j.dump());
    }
    return rep.has_claim && !rep.all_in_expected ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "c-differential uniformity of power functions over binary fields"};
    app.require_subcommand(1);

    unsigned n = 0, r = 0;
    unsigned m_single = 0, k_single = 0;
    std::uint64_t d = 0;
    std::string poly_hex, c_sel, x_hex, a_hex, b_hex, c_hex;
    std::vector<unsigned> m_list, k_list;
    unsigned structural_max_m = 5;
    unsigned n_max = 8;
    CommonOpts common;

    const auto add_common = [&](CLI::App* sc, bool with_jobs) {
        sc->add_option("--format", common.format, "json (lines) or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sc->add_option("--out", common.out,
                       "write the data stream to this file instead of stdout");
        if (with_jobs) {
            sc->add_option("--jobs", common.jobs,
                           "worker threads; output is byte-identical for any "
                           "value")
                ->check(CLI::Range(1u, 64u));
        }
    };
    const auto add_poly = [&](CLI::App* sc) {
        sc->add_option("--poly", poly_hex,
                       "reduction polynomial (hex bitvector); default: "
                       "lexicographically smallest irreducible");
    };

    auto* sc_fi =
        app.add_subcommand("field-info", "describe a field F_{2^n}");
    sc_fi->add_option("--n", n, "field degree")->required();
    add_poly(sc_fi);
    add_common(sc_fi, false);

    auto* sc_sp = app.add_subcommand(
        "spectrum", "per-c histogram of F(x+1)+cF(x) and the uniformity");
    sc_sp->add_option("--n", n, "field degree")->required();
    sc_sp->add_option("--d", d, "exponent of F(x) = x^d (decimal)")
        ->required();
    sc_sp->add_option("--c", c_sel,
                      "hex value, or one of all | circle | non-circle")
        ->required();
    add_poly(sc_sp);
    add_common(sc_sp, true);

    auto* sc_cdu = app.add_subcommand(
        "cdu", "uniformity by full (a, b) scan (definition-level cross-check)");
    sc_cdu->add_option("--n", n, "field degree")->required();
    sc_cdu->add_option("--d", d, "exponent of F(x) = x^d (decimal)")
        ->required();
    sc_cdu->add_option("--c", c_sel,
                       "hex value, or one of all | circle | non-circle")
        ->required();
    add_poly(sc_cdu);
    add_common(sc_cdu, true);

    auto* sc_vt = app.add_subcommand(
        "verify-theorem1",
        "structural vs brute-force uniformity of x^(s(2^m-1)+1) over all "
        "circle c != 1");
    sc_vt->add_option("--m", m_list, "comma-separated odd m values")
        ->required()
        ->delimiter(',');
    sc_vt->add_option("--k", k_list, "comma-separated k values")
        ->required()
        ->delimiter(',');
    sc_vt->add_option("--structural-max-m", structural_max_m,
                      "run the structural solver only for m up to this bound "
                      "(the circle-pair scan is quadratic in 2^m)");
    add_common(sc_vt, true);

    auto* sc_tb = app.add_subcommand(
        "verify-table1",
        "brute-force the catalog of low-uniformity power functions");
    sc_tb->add_option("--n", n_max, "largest field degree checked (default 8)");
    add_common(sc_tb, false);

    auto* sc_re = app.add_subcommand(
        "remark-experiments",
        "uniformity sweeps outside the theorem's scope (even m, or c off the "
        "circle)");
    sc_re->add_option("--m", m_single, "subfield degree m (even allowed)")
        ->required();
    sc_re->add_option("--k", k_single, "exponent parameter k")->required();
    sc_re->add_option("--c", c_sel,
                      "hex value, or one of all | circle | non-circle")
        ->required();
    add_common(sc_re, false);

    auto* sc_po = app.add_subcommand(
        "polar", "polar decomposition x = alpha * u (even n)");
    sc_po->add_option("--n", n, "field degree (even)")->required();
    add_poly(sc_po);
    sc_po->add_option("x", x_hex, "element to decompose (hex)")->required();
    add_common(sc_po, false);

    auto* sc_qr = app.add_subcommand(
        "quad-roots", "roots of monic x^(2^r+1) + a x^(2^r) + b x + c");
    sc_qr->add_option("--n", n, "field degree")->required();
    add_poly(sc_qr);
    sc_qr->add_option("r", r, "Frobenius power r >= 1")->required();
    sc_qr->add_option("a", a_hex, "coefficient a (hex)")->required();
    sc_qr->add_option("b", b_hex, "coefficient b (hex)")->required();
    sc_qr->add_option("c", c_hex, "coefficient c (hex)")->required();
    add_common(sc_qr, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_fi->parsed()) return run_field_info(n, poly_hex, common);
        if (sc_sp->parsed()) return run_spectrum(n, poly_hex, d, c_sel, common);
        if (sc_cdu->parsed()) return run_cdu(n, poly_hex, d, c_sel, common);
        if (sc_vt->parsed()) {
            return run_verify_theorem1(m_list, k_list, structural_max_m,
                                       common);
        }
        if (sc_tb->parsed()) return run_verify_table1(n_max, common);
        if (sc_re->parsed()) {
            return run_remark_experiments(m_single, k_single, c_sel, common);
        }
        if (sc_po->parsed()) return run_polar(n, poly_hex, x_hex, common);
        if (sc_qr->parsed()) {
            return run_quad_roots(n, poly_hex, r, a_hex, b_hex, c_hex, common);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable: a subcommand is required
}
