// Command-line front end: exact enumeration tables, verification suites and
// point evaluation of the state-sum functions.  Exit codes: 0 all good,
// 1 verification failure, 2 usage or domain error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "icekernel/bruteforce.hpp"
#include "icekernel/errors.hpp"
#include "icekernel/fourier.hpp"
#include "icekernel/ik.hpp"
#include "icekernel/rational_poly.hpp"
#include "icekernel/refined.hpp"
#include "icekernel/spectral.hpp"
#include "icekernel/verify.hpp"

namespace {

using icekernel::AsmClass;
using icekernel::BigInt;
using icekernel::BigRat;
using icekernel::RationalPoly;
using icekernel::RefinedTable;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("cannot parse order range '" + text + "' (expected N or LO..HI)");
    }
}

std::vector<int> orders_in(const Range& r, bool even_only, int min_order) {
    if (r.lo > r.hi) throw UsageError("empty order range");
    if (r.lo < min_order) {
        std::ostringstream os;
        os << "orders below " << min_order << " are not defined here";
        throw UsageError(os.str());
    }
    if (r.hi > 64) throw UsageError("order ranges above 64 are not supported");
    std::vector<int> out;
    for (int n = r.lo; n <= r.hi; ++n) {
        if (even_only && n % 2 != 0) {
            if (r.lo == r.hi) throw UsageError("half-turn tables exist for even orders only");
            continue;
        }
        out.push_back(n);
    }
    if (out.empty()) throw UsageError("no valid orders in range");
    return out;
}

std::string format_double(double v, const char* fmt = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

// JSON numbers stay exact only up to 64-bit integers; larger counts are
// emitted as decimal strings.
json json_count(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

// Render a rational-coefficient polynomial as "(integer polynomial)/den".
std::string over_common_denominator(const RationalPoly& p) {
    BigInt den = 1;
    for (const BigRat& c : p.coeffs())
        den = boost::multiprecision::lcm(den, icekernel::rat_den(c));
    const RationalPoly scaled = p * BigRat(den);
    if (den == 1) return scaled.to_string();
    return "(" + scaled.to_string() + ")/" + den.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw UsageError("cannot open output file '" + out_path + "'");
    os << text;
}

// ---------------------------------------------------------------- table ----

struct TableRequest {
    std::string kind;                 // A, A_refined, H, H_refined, genpoly
    std::string letter;               // genpoly only: A, H or B
    Range range;
};

TableRequest parse_table_args(const std::string& kind, const std::vector<std::string>& rest) {
    TableRequest req;
    req.kind = kind;
    if (kind == "genpoly") {
        if (rest.size() != 2 || (rest[0] != "A" && rest[0] != "H" && rest[0] != "B"))
            throw UsageError("usage: table genpoly {A|H|B} <order-range>");
        req.letter = rest[0];
        req.range = parse_range(rest[1]);
    } else {
        if (rest.size() != 1) throw UsageError("usage: table " + kind + " <order-range>");
        req.range = parse_range(rest[0]);
    }
    return req;
}

std::string render_table(const TableRequest& req, const std::string& format) {
    const bool refined = req.kind == "A_refined" || req.kind == "H_refined";
    const bool half_turn = req.kind == "H" || req.kind == "H_refined" ||
                           (req.kind == "genpoly" && req.letter == "H");
    const int min_order = (req.kind == "genpoly" && req.letter == "B") ? 2 : (half_turn ? 2 : 1);
    const std::vector<int> orders = orders_in(req.range, half_turn, min_order);

    if (req.kind == "genpoly") {
        if (format == "csv") throw UsageError("csv output covers counts tables only");
        json arr = json::array();
        std::ostringstream text;
        for (int n : orders) {
            const RationalPoly p = req.letter == "A"   ? icekernel::gen_poly_A(n)
                                   : req.letter == "H" ? icekernel::gen_poly_H(n)
                                                       : icekernel::gen_poly_B(n);
            const std::string display = over_common_denominator(p);
            if (format == "json") {
                BigInt den = 1;
                for (const BigRat& c : p.coeffs())
                    den = boost::multiprecision::lcm(den, icekernel::rat_den(c));
                json numerators = json::array();
                for (const BigRat& c : p.coeffs())
                    numerators.push_back(json_count(icekernel::rat_num(c * BigRat(den))));
                arr.push_back({{"order", n},
                               {"class", "genpoly_" + req.letter},
                               {"numerators", numerators},
                               {"denominator", json_count(den)},
                               {"display", display}});
            } else {
                if (orders.size() > 1) text << "order " << n << ": ";
                text << display << "\n";
            }
        }
        if (format == "json")
            return (orders.size() == 1 ? arr[0] : arr).dump(2) + "\n";
        return text.str();
    }

    json arr = json::array();
    std::ostringstream text, csv;
    csv << "order,class,r,count\n";
    for (int n : orders) {
        RefinedTable t;
        if (refined)
            t = half_turn ? icekernel::refined_ht_table(n) : icekernel::refined_asm_table(n);
        const BigInt total =
            refined ? t.total() : (half_turn ? icekernel::ht_total(n) : icekernel::asm_total(n));

        json counts = json::array();
        for (std::size_t r = 0; refined && r < t.counts.size(); ++r)
            counts.push_back(json_count(t.counts[r]));
        arr.push_back({{"order", n},
                       {"class", req.kind},
                       {"counts", counts},
                       {"total", json_count(total)}});

        if (refined) {
            text << "order " << n << ": ";
            for (std::size_t r = 0; r < t.counts.size(); ++r)
                text << (r ? "," : "") << t.counts[r].str();
            text << " (total " << total.str() << ")\n";
            for (std::size_t r = 0; r < t.counts.size(); ++r)
                csv << n << "," << req.kind << "," << r + 1 << "," << t.counts[r].str() << "\n";
        } else {
            csv << n << "," << req.kind << ",," << total.str() << "\n";
        }
    }
    if (!refined) {
        for (std::size_t k = 0; k < orders.size(); ++k) {
            if (k) text << ",";
            const int n = orders[k];
            text << (half_turn ? icekernel::ht_total(n) : icekernel::asm_total(n)).str();
        }
        text << "\n";
    }

    if (format == "json") return (orders.size() == 1 ? arr[0] : arr).dump(2) + "\n";
    if (format == "csv") return csv.str();
    return text.str();
}

// --------------------------------------------------------------- verify ----

std::string render_verify(const std::string& suite, const icekernel::VerifyOptions& opts,
                          const std::vector<icekernel::CheckResult>& results,
                          const std::string& format) {
    if (format == "json") {
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back({{"name", r.name},
                              {"residual", r.residual},
                              {"tolerance", r.tolerance},
                              {"pass", r.pass},
                              {"detail", r.detail}});
        const json report = {{"suite", suite},
                             {"seed", opts.seed},
                             {"checks", checks},
                             {"pass", icekernel::all_passed(results)}};
        return report.dump(2) + "\n";
    }
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : results) {
        passed += r.pass;
        char line[256];
        std::snprintf(line, sizeof line, "%s  %-52s residual=%.3e  tol=%.3e  %s\n",
                      r.pass ? "PASS" : "FAIL", r.name.c_str(), r.residual, r.tolerance,
                      r.detail.c_str());
        os << line;
    }
    os << "suite " << suite << ": " << (passed == results.size() ? "PASS" : "FAIL") << " ("
       << passed << "/" << results.size() << " checks)\n";
    return os.str();
}

// ----------------------------------------------------------------- eval ----

std::vector<double> parse_param_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw UsageError("cannot parse parameter value '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("--u needs a comma-separated list of values");
    return out;
}

std::string render_eval(const std::string& what, int n, double eta,
                        const std::vector<double>& u, bool bruteforce, int brute_cap,
                        const std::string& format) {
    if (n < 1) throw UsageError("--n must be at least 1");
    if (static_cast<int>(u.size()) != 2 * n) {
        std::ostringstream os;
        os << "--u needs exactly " << 2 * n << " values at order " << n;
        throw UsageError(os.str());
    }
    if (bruteforce && what != "Z")
        throw UsageError("--bruteforce applies to the state sum Z only");

    double value = 0.0;
    if (what == "Z" || what == "V") {
        icekernel::SpectralConfig cfg;
        cfg.eta = eta;
        cfg.u = u;
        value = bruteforce              ? icekernel::partition_bruteforce(cfg, brute_cap)
                : (what == "Z")         ? icekernel::ik_determinant(cfg)
                                        : icekernel::kuperberg_companion(cfg);
    } else {
        const std::vector<double> fixed(u.begin() + 1, u.end());
        const icekernel::CPoly p = what == "f" ? icekernel::f_poly(fixed, eta)
                                               : icekernel::g_poly(fixed, eta);
        value = p.evaluate(u.front()).real();
    }

    if (format == "json") {
        const json report = {
            {"what", what}, {"order", n}, {"eta", eta}, {"params", u}, {"value", value}};
        return report.dump(2) + "\n";
    }
    return format_double(value) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* threads = std::getenv("ICEKERNEL_THREADS")) {
        const int k = std::atoi(threads);
        if (k > 0) omp_set_num_threads(k);
    }
#endif

    CLI::App app{"Exact enumeration tables and verified state-sum kernels for the\n"
                 "square-ice model with domain-wall boundaries."};
    app.require_subcommand(1);

    std::string format = "text", out_path;
    std::uint64_t seed = 1;
    double tol = 0.0;
    int brute_cap = 7;
    std::string regime = "double";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "Write the report to this file instead of stdout");
    app.add_option("--seed", seed, "Seed for randomized checks");
    app.add_option("--tol", tol, "Override the built-in tolerance of inexact checks")
        ->check(CLI::PositiveNumber);
    app.add_option("--brute-cap", brute_cap, "Largest order the enumeration oracle may visit")
        ->check(CLI::Range(1, 8));
    app.add_option("--regime", regime, "Coefficient arithmetic for the slice chain")
        ->check(CLI::IsMember({"double", "exact"}));

    auto* table = app.add_subcommand("table", "Print enumeration tables");
    table->fallthrough();
    std::string table_kind;
    std::vector<std::string> table_rest;
    table->add_option("kind", table_kind, "A, A_refined, H, H_refined or genpoly")
        ->required()
        ->check(CLI::IsMember({"A", "A_refined", "H", "H_refined", "genpoly"}));
    table->add_option("args", table_rest, "[genpoly letter] and order range (N or LO..HI)")
        ->expected(-1);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->fallthrough();
    std::string suite;
    int max_order = 0;
    verify->add_option("suite", suite, "determinants, fourier, recurrences, refined or all")
        ->required()
        ->check(CLI::IsMember({"determinants", "fourier", "recurrences", "refined", "all"}));
    verify->add_option("--n", max_order, "Cap the largest order the suite visits")
        ->check(CLI::Range(1, 10));

    auto* eval = app.add_subcommand("eval", "Evaluate a state-sum function at a point");
    eval->fallthrough();
    std::string what, u_text;
    int eval_n = 0;
    double eval_eta = icekernel::kCriticalEta;
    bool use_bruteforce = false;
    eval->add_option("what", what, "Z, V, f or g")
        ->required()
        ->check(CLI::IsMember({"Z", "V", "f", "g"}));
    eval->add_option("--n", eval_n, "Order")->required();
    eval->add_option("--eta", eval_eta, "Crossing parameter in radians (default 2*pi/3)");
    eval->add_option("--u", u_text,
                     "Comma-separated parameters: rows then columns for Z/V; evaluation "
                     "point then pinned values for f/g")
        ->required();
    eval->add_flag("--bruteforce", use_bruteforce, "Evaluate Z by enumeration instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*table) {
            emit(render_table(parse_table_args(table_kind, table_rest), format), out_path);
            return 0;
        }
        if (*verify) {
            if (format == "csv") throw UsageError("csv output covers counts tables only");
            icekernel::VerifyOptions opts;
            opts.seed = seed;
            opts.tol = tol;
            opts.max_order = max_order;
            opts.brute_cap = brute_cap;
            opts.exact_regime = regime == "exact";
            const auto results = icekernel::verify_suite(suite, opts);
            emit(render_verify(suite, opts, results, format), out_path);
            return icekernel::all_passed(results) ? 0 : 1;
        }
        if (format == "csv") throw UsageError("csv output covers counts tables only");
        emit(render_eval(what, eval_n, eval_eta, parse_param_list(u_text), use_bruteforce,
                         brute_cap, format),
             out_path);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const icekernel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
