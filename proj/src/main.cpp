// salemscope: certify Salem polynomials, expand power polynomials, scan the
// coefficient inequality, and estimate its asymptotic hit probability.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "salemscope/acceptance.hpp"
#include "salemscope/errors.hpp"
#include "salemscope/intpoly.hpp"
#include "salemscope/jsonio.hpp"
#include "salemscope/powerpoly.hpp"
#include "salemscope/probability.hpp"
#include "salemscope/roots.hpp"
#include "salemscope/salem.hpp"

namespace {

using salemscope::IntPolynomial;

int default_workers() {
    if (const char* env = std::getenv("SALEMSCOPE_WORKERS")) return std::max(1, std::atoi(env));
    return 1;
}

std::string csv_double(double v) {
    if (!std::isfinite(v)) return "";
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

struct PolyOptions {
    std::string text;
    bool half = false;

    IntPolynomial parse() const { return IntPolynomial::parse(text, half); }
};

void add_poly_options(CLI::App* cmd, PolyOptions& opts) {
    cmd->add_option("--poly", opts.text,
                    "polynomial coefficients, ascending, space-separated (e.g. \"1 -1 -1 -1 1\")")
        ->required();
    cmd->add_flag("--half", opts.half,
                  "treat --poly as the first half a_0..a_{d/2} of a self-reciprocal polynomial");
}

void add_output_option(CLI::App* cmd, std::string& output, const std::string& csv_columns) {
    cmd->add_option("--output", output, "report format; csv columns: " + csv_columns)
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
}

// ---- pown ----------------------------------------------------------------
int run_pown(const PolyOptions& poly_opts, long n, const std::string& output) {
    const IntPolynomial p = poly_opts.parse();
    const salemscope::PowerPolyResult res = salemscope::power_min_poly(p, n);
    if (output == "json") {
        print_json(to_json(res));
    } else if (output == "csv") {
        std::cout << "k,coefficient\n";
        for (int k = 0; k <= res.poly.degree(); ++k)
            std::cout << k << "," << res.poly.coeff(k).get_str() << "\n";
    } else {
        std::cout << "P_" << n << " = " << res.poly.to_string() << "\n";
    }
    return 0;
}

// ---- certify ---------------------------------------------------------------
int run_certify(const PolyOptions& poly_opts, const std::string& method, long max_n,
                const std::string& output) {
    const IntPolynomial p = poly_opts.parse();
    salemscope::CertificateReport report;
    if (method == "power")
        report = salemscope::certify_power_criterion(p, max_n);
    else if (method == "direct")
        report = salemscope::certify_direct(p);
    else
        report = salemscope::certify_both(p, max_n);

    if (output == "json") {
        print_json(to_json(report));
    } else if (output == "csv") {
        std::cout << "n,b_ok,c_ok,ratio,root_est\n";
        for (const auto& b : report.bounds)
            std::cout << b.n << "," << b.b_ok << "," << b.c_ok << "," << csv_double(b.ratio)
                      << "," << csv_double(b.root_est) << "\n";
    } else {
        std::cout << "verdict: " << to_string(report.verdict) << "\n"
                  << "method: " << to_string(report.method) << "\n";
        if (report.witness_n) std::cout << "witness n: " << *report.witness_n << "\n";
        if (report.unimodular_count >= 0)
            std::cout << "unimodular roots: " << report.unimodular_count << "\n";
        if (report.roots_above_one >= 0)
            std::cout << "roots above 1: " << report.roots_above_one << "\n";
        std::cout << "cyclotomic-free: " << (report.cyclotomic_free ? "yes" : "no") << "\n";
        if (std::isfinite(report.tau_estimate))
            std::cout << "tau estimate: " << std::setprecision(17) << report.tau_estimate
                      << "\n";
        if (!report.failure_reason.empty())
            std::cout << "reason: " << report.failure_reason << "\n";
    }
    return 0;
}

// ---- scan ------------------------------------------------------------------
int run_scan(const PolyOptions& poly_opts, long n_from, long n_to, const std::string& output) {
    const IntPolynomial p = poly_opts.parse();
    const salemscope::FrequencyResult fr = salemscope::empirical_frequency(p, n_from, n_to);
    if (!fr.salem_verified)
        std::cerr << "warning: input did not certify as a Salem polynomial; "
                     "the hit frequency has no asymptotic meaning\n";
    if (output == "json") {
        print_json(to_json(fr));
    } else if (output == "csv") {
        std::cout << "n\n";
        for (long n : fr.hits) std::cout << n << "\n";
    } else {
        std::cout << "hits in [" << fr.n_from << ", " << fr.n_to << "]:";
        for (long n : fr.hits) std::cout << " " << n;
        std::cout << "\nfrequency: " << fr.frequency << "\n";
    }
    return 0;
}

// ---- prob ------------------------------------------------------------------
int run_prob(int degree, const std::string& method, long m, double big_d, double abs_tol,
             bool full, int workers, const std::string& csv_hits, const std::string& output) {
    salemscope::ProbEstimate est;
    if (method == "exact") {
        if (degree != 4) throw salemscope::BadDegreeError("exact method supports degree 4 only");
        est = salemscope::prob_d4();
    } else if (method == "integral") {
        if (degree != 6)
            throw salemscope::BadDegreeError("integral method supports degree 6 only");
        est = salemscope::prob_d6_integral(abs_tol);
    } else {
        est = salemscope::prob_grid(degree, m, big_d, !full, workers, csv_hits);
    }

    if (output == "json") {
        print_json(to_json(est));
    } else if (output == "csv") {
        std::cout << "d,method,value,m,h,D,symmetry_factor,N_c,total,error_estimate\n"
                  << est.d << "," << to_string(est.method) << "," << csv_double(est.value) << ","
                  << est.m << "," << csv_double(est.h) << "," << csv_double(est.big_d) << ","
                  << est.symmetry_factor << "," << est.n_c << "," << csv_double(est.total) << ","
                  << csv_double(est.error_estimate) << "\n";
    } else {
        std::cout << "p_" << est.d << " ~ " << std::setprecision(10) << est.value << " ("
                  << to_string(est.method) << ")\n";
    }
    return 0;
}

// ---- analyze ----------------------------------------------------------------
int run_analyze(const PolyOptions& poly_opts, long max_n, const std::string& output) {
    const IntPolynomial p = poly_opts.parse();
    const double tau = salemscope::tau_estimate(p);
    const bool periodic = salemscope::detect_cyclotomic_by_periodicity(p);

    struct Row {
        salemscope::BoundCheckRecord rec;
        bool hit = false;
    };
    std::vector<Row> rows;
    salemscope::PowerScan scan(p);
    IntPolynomial prev;
    for (long n = 1; n <= max_n; ++n) {
        const salemscope::PowerPolyResult res = scan.next();
        Row row;
        row.rec = salemscope::growth_checks_with_tau(tau, n, res.poly, n > 1 ? &prev : nullptr);
        row.hit = res.poly.degree() == p.degree() && res.poly.is_reciprocal() &&
                  salemscope::vieira_condition(res.poly, 1).satisfied;
        rows.push_back(std::move(row));
        prev = res.poly;
    }

    if (output == "json") {
        nlohmann::json records = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j = to_json(row.rec);
            j["vieira_hit"] = row.hit;
            records.push_back(std::move(j));
        }
        print_json({{"poly", to_json(p)},
                    {"tau_estimate", std::isfinite(tau) ? nlohmann::json(tau) : nullptr},
                    {"periodic", periodic},
                    {"records", std::move(records)}});
    } else if (output == "csv") {
        std::cout << "n,b_ok,c_ok,ratio,root_est,vieira_hit\n";
        for (const auto& row : rows)
            std::cout << row.rec.n << "," << row.rec.b_ok << "," << row.rec.c_ok << ","
                      << csv_double(row.rec.ratio) << "," << csv_double(row.rec.root_est) << ","
                      << row.hit << "\n";
    } else {
        std::cout << "polynomial: " << p.to_string() << "\n"
                  << "tau estimate: " << std::setprecision(17) << tau << "\n"
                  << "periodic (all roots of unity): " << (periodic ? "yes" : "no") << "\n"
                  << "hits:";
        for (const auto& row : rows)
            if (row.hit) std::cout << " " << row.rec.n;
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"salemscope: Salem polynomial certification via power polynomials"};
    app.require_subcommand(1);
    int workers = default_workers();
    app.add_option("--workers", workers, "data-parallel width for scan/prob")
        ->check(CLI::Range(1L, 1000000000L))
        ->capture_default_str();

    // pown
    auto* pown = app.add_subcommand("pown", "expand P_n, the characteristic polynomial of C^n");
    pown->fallthrough();
    PolyOptions pown_poly;
    long pown_n = 1;
    std::string pown_output = "json";
    add_poly_options(pown, pown_poly);
    pown->add_option("--n", pown_n, "power exponent")->required()
        ->check(CLI::Range(1L, 1000000000L));
    add_output_option(pown, pown_output, "k,coefficient");

    // certify
    auto* certify = app.add_subcommand("certify", "certify a Salem polynomial");
    certify->fallthrough();
    PolyOptions certify_poly;
    std::string certify_method = "both";
    long certify_max_n = 100;
    std::string certify_output = "json";
    add_poly_options(certify, certify_poly);
    certify->add_option("--method", certify_method, "power | direct | both")
        ->check(CLI::IsMember({"power", "direct", "both"}))
        ->capture_default_str();
    certify->add_option("--max-n", certify_max_n, "largest exponent the power criterion scans")
        ->check(CLI::Range(1L, 1000000000L))
        ->capture_default_str();
    add_output_option(certify, certify_output, "n,b_ok,c_ok,ratio,root_est");

    // scan
    auto* scan = app.add_subcommand("scan", "list exponents whose P_n passes the inequality");
    scan->fallthrough();
    PolyOptions scan_poly;
    long scan_from = 1, scan_to = 100;
    std::string scan_output = "json";
    add_poly_options(scan, scan_poly);
    scan->add_option("--from", scan_from, "first exponent")->capture_default_str();
    scan->add_option("--to", scan_to, "last exponent")->required();
    add_output_option(scan, scan_output, "n (one hit per row)");

    // prob
    auto* prob = app.add_subcommand("prob", "estimate the asymptotic hit probability p_d");
    prob->fallthrough();
    int prob_degree = 4;
    std::string prob_method = "grid";
    long prob_m = 2000;
    double prob_big_d = 1e9;
    double prob_abs_tol = 1e-7;
    bool prob_full = false;
    std::string prob_csv_hits;
    std::string prob_output = "json";
    prob->add_option("--degree", prob_degree, "even degree, 4..12")->required();
    prob->add_option("--method", prob_method, "exact (d=4) | integral (d=6) | grid")
        ->check(CLI::IsMember({"exact", "integral", "grid"}))
        ->capture_default_str();
    prob->add_option("--m", prob_m, "grid steps per axis over [0, pi]")->capture_default_str();
    prob->add_option("--D", prob_big_d, "large real root standing in for tau^n")
        ->capture_default_str();
    prob->add_option("--abs-tol", prob_abs_tol, "absolute tolerance of the integral method")
        ->capture_default_str();
    prob->add_flag("--full", prob_full,
                   "scan the full torus grid instead of the symmetry-restricted boxes");
    prob->add_option("--csv-hits", prob_csv_hits,
                     "write hit tuples t1..tH as CSV to this file (grid method)");
    add_output_option(prob, prob_output,
                      "d,method,value,m,h,D,symmetry_factor,N_c,total,error_estimate");

    // analyze
    auto* analyze = app.add_subcommand(
        "analyze", "per-n growth bounds, root estimates, inequality hits, periodicity");
    analyze->fallthrough();
    PolyOptions analyze_poly;
    long analyze_max_n = 50;
    std::string analyze_output = "json";
    add_poly_options(analyze, analyze_poly);
    analyze->add_option("--max-n", analyze_max_n, "scan exponents 1..max_n")
        ->check(CLI::Range(1L, 1000000000L))
        ->capture_default_str();
    add_output_option(analyze, analyze_output, "n,b_ok,c_ok,ratio,root_est,vieira_hit");

    // corpus
    auto* corpus_cmd =
        app.add_subcommand("corpus", "run the acceptance suite against the embedded golden data");
    corpus_cmd->fallthrough();
    std::vector<int> corpus_ids;
    corpus_cmd->add_option("criteria", corpus_ids, "criterion ids to run (default: all ten)")
        ->check(CLI::Range(1, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    try {
        if (pown->parsed()) return run_pown(pown_poly, pown_n, pown_output);
        if (certify->parsed())
            return run_certify(certify_poly, certify_method, certify_max_n, certify_output);
        if (scan->parsed()) return run_scan(scan_poly, scan_from, scan_to, scan_output);
        if (prob->parsed())
            return run_prob(prob_degree, prob_method, prob_m, prob_big_d, prob_abs_tol,
                            prob_full, workers, prob_csv_hits, prob_output);
        if (analyze->parsed()) return run_analyze(analyze_poly, analyze_max_n, analyze_output);
        if (corpus_cmd->parsed())
            return salemscope::run_acceptance(corpus_ids, workers, std::cout) == 0 ? 0 : 1;
    } catch (const salemscope::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
