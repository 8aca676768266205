// splitscan: exact splitting-field toolkit and prime-scan harness.
//
// Subcommands: factor | roots | primitive-element | verify | scan |
//              schur | family | lemma1-bound
// Exit status is nonzero iff a scan found violations or an operation
// failed; see the README for the output formats.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "splitscan/criterion.hpp"
#include "splitscan/report_io.hpp"
#include "splitscan/splitfield.hpp"
#include "splitscan/zfactor.hpp"
#include "splitscan/zpoly.hpp"

namespace {

using namespace splitscan;
using nlohmann::ordered_json;

struct Options {
    std::string format = "human";  // human | json | csv
    std::string out;               // output path ("" = stdout)
    std::uint64_t p_max = 100000;
    int count = 10;
    int k = 3;
    unsigned precision = 128;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::uint64_t segment_size = 1u << 20;
};

splitfield::SplitFieldConfig field_config(const Options& opt) {
    splitfield::SplitFieldConfig cfg;
    cfg.precision_bits = opt.precision;
    cfg.factor.seed = opt.seed;
    return cfg;
}

/// Writes to --out when given, stdout otherwise.
void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream f(opt.out, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
    f << text << '\n';
}

int cmd_factor(const std::string& poly_text, const Options& opt) {
    IntPoly a = parse_poly(poly_text);
    zfactor::FactorConfig cfg;
    cfg.seed = opt.seed;
    zfactor::Factorization f = zfactor::factor_q(a, cfg);
    emit(opt, opt.format == "json" ? io::factorization_json(f) : io::factorization_string(f));
    return 0;
}

int cmd_roots(const std::string& poly_text, const Options& opt) {
    IntPoly a = parse_poly(poly_text);
    auto roots = splitfield::isolate_roots(a, opt.precision);
    if (opt.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& [r, mult] : roots) {
            ordered_json e;
            e["index"] = r.index;
            e["re"] = r.disk.re.get_d();
            e["im"] = r.disk.im.get_d();
            e["radius"] = r.disk.rad.get_d();
            e["multiplicity"] = mult;
            j.push_back(e);
        }
        emit(opt, j.dump(2));
    } else {
        std::string s;
        for (const auto& [r, mult] : roots) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "root %d: %.17g + %.17gi  (radius <= %.3g, multiplicity %d)",
                          r.index, r.disk.re.get_d(), r.disk.im.get_d(), r.disk.rad.get_d(), mult);
            if (!s.empty()) s += '\n';
            s += buf;
        }
        emit(opt, s);
    }
    return 0;
}

int cmd_primitive_element(const std::string& poly_text, const Options& opt) {
    IntPoly a = parse_poly(poly_text);
    splitfield::PrimitiveElement pe = splitfield::primitive_element(a, field_config(opt));
    if (opt.format == "json") {
        emit(opt, io::primitive_element_json(pe));
    } else {
        std::string s = "phi      = " + to_string(pe.phi);
        s += "\nmin poly = " + to_string(pe.min_poly);
        s += "\ndegree   = " + std::to_string(pe.degree());
        s += "\nweights  =";
        for (long w : pe.weights) s += " " + std::to_string(w);
        char buf[96];
        std::snprintf(buf, sizeof buf, "\nbeta     ~ %.17g + %.17gi", pe.beta.re.get_d(), pe.beta.im.get_d());
        s += buf;
        emit(opt, s);
    }
    return 0;
}

std::string human_report(const criterion::ScanReport& rep) {
    std::string s = "phi        = " + to_string(rep.phi);
    s += "\nP          = " + to_string(rep.p_poly);
    s += "\nB          = " + rep.bad_bound.get_str() + "  (primes <= B excluded)";
    s += "\np_max      = " + std::to_string(rep.p_max);
    s += "\nprimes     = " + std::to_string(rep.n_primes());
    s += "\nsplit      = " + std::to_string(rep.n_split());
    if (!rep.records.empty()) {
        criterion::DensityStats st = criterion::density_stats(rep);
        char buf[96];
        std::snprintf(buf, sizeof buf, "\nsplit frac = %.6f  (1/deg P = %.6f)", st.split_fraction, st.expected);
        s += buf;
    }
    s += "\nviolations = " + std::to_string(rep.violations.size());
    for (const auto& v : rep.violations)
        s += "\n  p=" + std::to_string(v.p) +
             (v.kind == criterion::ViolationKind::phi_vs_root ? "  phi-splits vs P-has-root"
                                                              : "  P-has-root vs P-splits");
    return s;
}

/// Runs a scan with the output conventions shared by `scan` and `verify`:
/// CSV streams incrementally (a long run interrupted midway still leaves
/// all completed records on disk); the JSON summary is written last.
int run_scan(const IntPoly& phi, const IntPoly& p_poly, const Options& opt, criterion::ScanReport& rep) {
    criterion::ScanOptions sopt;
    sopt.threads = opt.threads;
    sopt.segment_size = opt.segment_size;

    std::ofstream csv_file;
    bool csv = opt.format == "csv";
    std::ostream* csv_out = nullptr;
    if (csv) {
        if (!opt.out.empty()) {
            csv_file.open(opt.out, std::ios::trunc);
            if (!csv_file) throw std::runtime_error("cannot open output file: " + opt.out);
            csv_out = &csv_file;
        } else {
            csv_out = &std::cout;
        }
        *csv_out << io::csv_header() << '\n';
        sopt.sink = [csv_out](const criterion::PrimeRecord& r) { *csv_out << io::csv_line(r) << '\n' << std::flush; };
    }

    rep = criterion::scan(phi, p_poly, opt.p_max, sopt);

    if (opt.format == "json") {
        emit(opt, io::report_json(rep));
    } else if (csv) {
        // Summary goes alongside the CSV so a finished run is detectable.
        if (!opt.out.empty()) {
            std::ofstream jf(opt.out + ".json", std::ios::trunc);
            jf << io::report_json(rep) << '\n';
        }
    } else {
        emit(opt, human_report(rep));
    }
    return rep.violations.empty() ? 0 : 1;
}

int cmd_scan(const std::string& phi_text, const std::string& p_text, const Options& opt) {
    criterion::ScanReport rep;
    return run_scan(parse_poly(phi_text), parse_poly(p_text), opt, rep);
}

int cmd_verify(const std::string& poly_text, const Options& opt) {
    IntPoly phi = parse_poly(poly_text);
    splitfield::PrimitiveElement pe = splitfield::primitive_element(phi, field_config(opt));
    if (opt.format == "human") {
        std::cout << "min poly P = " << to_string(pe.min_poly) << "  (degree " << pe.degree() << ")\n";
    }
    criterion::ScanReport rep;
    int rc = run_scan(phi, pe.min_poly, opt, rep);
    auto witnesses = criterion::schur_search(pe.min_poly, opt.count);
    bool ok = criterion::cross_check(witnesses, rep);
    if (opt.format == "human") {
        std::cout << "schur primes (" << witnesses.size() << "):";
        for (const auto& w : witnesses) std::cout << ' ' << w.q.get_str();
        std::cout << "\ncross-check: " << (ok ? "ok" : "FAILED") << '\n';
    }
    if (!ok) return 1;
    return rc;
}

int cmd_schur(const std::string& poly_text, const Options& opt) {
    IntPoly p = parse_poly(poly_text);
    auto witnesses = criterion::schur_search(p, opt.count);
    if (opt.format == "json") {
        emit(opt, io::schur_json(witnesses));
    } else {
        std::string s;
        for (const auto& w : witnesses) {
            if (!s.empty()) s += '\n';
            s += "q=" + w.q.get_str() + "  divides P(" + w.m.get_str() + ") = " + w.value.get_str();
        }
        emit(opt, s);
    }
    return 0;
}

int cmd_family(const std::string& poly_text, const Options& opt) {
    IntPoly phi = parse_poly(poly_text);
    auto members = splitfield::family(phi, opt.k, field_config(opt));
    if (opt.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& pe : members) j.push_back(ordered_json::parse(io::primitive_element_json(pe)));
        emit(opt, j.dump(2));
    } else {
        std::string s;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!s.empty()) s += '\n';
            s += "P_" + std::to_string(i) + " = " + to_string(members[i].min_poly) + "  (degree " +
                 std::to_string(members[i].degree()) + ")";
        }
        emit(opt, s);
    }
    return 0;
}

int cmd_lemma1_bound(const std::string& r_text, const std::string& s_text, const Options& opt) {
    mpz_class lambda = zpoly::bezout_bound(parse_poly(r_text), parse_poly(s_text));
    if (opt.format == "json") {
        ordered_json j;
        j["lambda"] = lambda.get_str();
        emit(opt, j.dump(2));
    } else {
        emit(opt, "lambda = " + lambda.get_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"splitscan: splitting-field primitive elements and the prime splitting criterion"};
    app.require_subcommand(1);

    Options opt;
    std::string poly, poly2;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"human", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", opt.out, "Write output to this file instead of stdout");
        sub->add_option("--seed", opt.seed, "Randomized-algorithm seed (fixed default for reproducibility)")
            ->capture_default_str();
        sub->add_option("--precision", opt.precision, "Initial root-isolation precision in bits")
            ->capture_default_str();
    };

    CLI::App* factor = app.add_subcommand("factor", "Factor a polynomial over Q");
    factor->add_option("poly", poly, "Polynomial, e.g. \"X^4+4\" or \"[4,0,0,0,1]\"")->required();
    add_common(factor);

    CLI::App* roots = app.add_subcommand("roots", "Certified complex roots");
    roots->add_option("poly", poly)->required();
    add_common(roots);

    CLI::App* pe = app.add_subcommand("primitive-element", "Primitive element of the splitting field");
    pe->add_option("poly", poly)->required();
    add_common(pe);

    CLI::App* verify = app.add_subcommand("verify", "Full pipeline: primitive element, scan, Schur cross-check");
    verify->add_option("poly", poly)->required();
    verify->add_option("--p-max", opt.p_max, "Scan primes up to this bound")->capture_default_str();
    verify->add_option("--count", opt.count, "Number of Schur witnesses")->capture_default_str();
    verify->add_option("--threads", opt.threads, "Worker threads for the scan")->capture_default_str();
    verify->add_option("--segment-size", opt.segment_size, "Sieve segment size")->capture_default_str();
    add_common(verify);

    CLI::App* scan = app.add_subcommand("scan", "Scan primes for given phi and P");
    scan->add_option("phi", poly)->required();
    scan->add_option("P", poly2)->required();
    scan->add_option("--p-max", opt.p_max)->capture_default_str();
    scan->add_option("--threads", opt.threads)->capture_default_str();
    scan->add_option("--segment-size", opt.segment_size)->capture_default_str();
    add_common(scan);

    CLI::App* schur = app.add_subcommand("schur", "Prime divisors of P(m), m = 0, 1, -1, ...");
    schur->add_option("poly", poly)->required();
    schur->add_option("--count", opt.count)->capture_default_str();
    add_common(schur);

    CLI::App* family = app.add_subcommand("family", "Distinct primitive-element polynomials for one phi");
    family->add_option("poly", poly)->required();
    family->add_option("--k", opt.k, "Number of family members")->capture_default_str();
    add_common(family);

    CLI::App* lemma1 = app.add_subcommand("lemma1-bound", "Bezout bound: gcd(R(t), S(t)) | lambda for all t");
    lemma1->add_option("R", poly)->required();
    lemma1->add_option("S", poly2)->required();
    add_common(lemma1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (factor->parsed()) return cmd_factor(poly, opt);
        if (roots->parsed()) return cmd_roots(poly, opt);
        if (pe->parsed()) return cmd_primitive_element(poly, opt);
        if (verify->parsed()) return cmd_verify(poly, opt);
        if (scan->parsed()) return cmd_scan(poly, poly2, opt);
        if (schur->parsed()) return cmd_schur(poly, opt);
        if (family->parsed()) return cmd_family(poly, opt);
        if (lemma1->parsed()) return cmd_lemma1_bound(poly, poly2, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
