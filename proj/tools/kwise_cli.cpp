#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kwise/certificate_io.hpp"
#include "kwise/errors.hpp"
#include "kwise/extremal.hpp"
#include "kwise/kwise_dist.hpp"
#include "kwise/real.hpp"
#include "kwise/relaxed.hpp"
#include "kwise/suites.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace kwise;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitBudget = 3;

Rational parse_p(const std::string& text) {
    Rational p = Rational::from_string(text);
    if (p <= Rational(0) || p >= Rational(1)) {
        throw std::invalid_argument("p must lie strictly between 0 and 1, got " + text);
    }
    return p;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << text;
}

struct ComputeArgs {
    long n = 0;
    int k = 0;
    std::string p;
    std::string method = "primal";
    std::string out;
    std::uint64_t max_candidates = 10'000'000;
    unsigned threads = 0;
};

int run_compute(const ComputeArgs& args) {
    const BinomialSpec spec(args.n, parse_p(args.p));
    if (args.k < 1 || args.k > spec.n) {
        std::cerr << "error: k exceeds n or is below 1\n";
        return kExitUsage;
    }
    DualSearchOptions search;
    search.max_candidates = args.max_candidates;
    search.threads = args.threads;

    const bool want_dual = args.method == "dual" || args.method == "both";
    if (want_dual && (args.k % 2 != 0 || args.k > spec.n - 1)) {
        std::cerr << "error: the dual search needs even k with k <= n-1\n";
        return kExitUsage;
    }

    std::optional<ExtremalCertificate> primal, dual;
    if (args.method == "primal" || args.method == "both") {
        primal = compute_M_primal(spec, args.k);
    }
    if (want_dual) {
        dual = compute_M_dual_search(spec, args.k, search);
    }

    const ExtremalCertificate& main_cert = primal ? *primal : *dual;
    const CertificateChecks checks = verify_certificate(main_cert);
    Json out = Json::parse(certificate_json(main_cert, checks));
    out["method"] = args.method;

    bool consistent = checks.all();
    if (primal && dual) {
        const CertificateChecks dual_checks = verify_certificate(*dual);
        out["dual"] = Json::parse(certificate_json(*dual, dual_checks));
        const bool agree = primal->value == dual->value;
        out["agreement"] = agree;
        consistent = consistent && agree && dual_checks.all();
    }

    write_output(out.dump(2) + "\n", args.out);
    return consistent ? kExitOk : kExitInconsistent;
}

struct ScanArgs {
    std::string ns, ks, ps;
    std::string out;
    bool decimal = false;
};

int run_scan(const ScanArgs& args) {
    std::vector<long> ns;
    for (const auto& s : split_list(args.ns)) ns.push_back(std::stol(s));
    std::vector<int> ks;
    for (const auto& s : split_list(args.ks)) ks.push_back(std::stoi(s));
    std::vector<Rational> ps;
    for (const auto& s : split_list(args.ps)) ps.push_back(parse_p(s));
    if (ns.empty() || ks.empty() || ps.empty()) {
        std::cerr << "error: scan needs nonempty --ns, --ks and --ps\n";
        return kExitUsage;
    }
    std::sort(ns.begin(), ns.end());
    std::sort(ks.begin(), ks.end());
    std::sort(ps.begin(), ps.end());

    std::ostringstream csv;
    csv << "n,k,p,M,M_tilde,ratio,degenerate,regime";
    if (args.decimal) csv << ",M_dec,M_tilde_dec,ratio_dec";
    csv << ",status\n";

    for (long n : ns) {
        for (int k : ks) {
            for (const Rational& p : ps) {
                csv << n << "," << k << "," << p.str() << ",";
                std::string row, status = "ok";
                try {
                    const BinomialSpec spec(n, p);
                    if (k < 1 || k > n) throw std::invalid_argument("k out of range");
                    if (k % 2 == 0) {
                        const SandwichReport rep = sandwich_report(spec, k);
                        std::ostringstream fields;
                        fields << rep.M.str() << "," << rep.M_tilde.str() << ","
                               << rep.ratio.str() << "," << (rep.degenerate ? 1 : 0)
                               << "," << regime_name(rep.regime);
                        if (args.decimal) {
                            fields << "," << real_str(to_real(rep.M), 15) << ","
                                   << real_str(to_real(rep.M_tilde), 15) << ","
                                   << real_str(to_real(rep.ratio), 15);
                        }
                        row = fields.str();
                    } else {
                        const ExtremalCertificate cert = compute_M_primal(spec, k);
                        std::ostringstream fields;
                        fields << cert.value.str() << ",,," << (cert.degenerate ? 1 : 0)
                               << ",na";
                        if (args.decimal) {
                            fields << "," << real_str(to_real(cert.value), 15) << ",,";
                        }
                        row = fields.str();
                    }
                } catch (const std::exception& e) {
                    std::ostringstream fields;
                    fields << ",,,,";
                    if (args.decimal) fields << ",,,";
                    row = fields.str();
                    status = std::string("error:") + e.what();
                    for (auto& c : status) {
                        if (c == ',' || c == '\n') c = ';';
                    }
                }
                csv << row << "," << status << "\n";
            }
        }
    }
    write_output(csv.str(), args.out);
    return kExitOk;
}

struct PolyArgs {
    long n = 0;
    int k = 0;
    std::string p;
    long samples = 0;
    std::string out;
    bool decimal = false;
    std::uint64_t max_candidates = 10'000'000;
    unsigned threads = 0;
};

int run_poly(const PolyArgs& args) {
    const BinomialSpec spec(args.n, parse_p(args.p));
    if (args.k % 2 != 0 || args.k < 2 || args.k > spec.n - 1) {
        std::cerr << "error: poly needs even k with 2 <= k <= n-1\n";
        return kExitUsage;
    }
    if (args.samples < 2) {
        std::cerr << "error: poly needs at least 2 samples\n";
        return kExitUsage;
    }
    DualSearchOptions search;
    search.max_candidates = args.max_candidates;
    search.threads = args.threads;
    const ExtremalCertificate cert = compute_M_dual_search(spec, args.k, search);

    std::ostringstream csv;
    csv << "x,P";
    if (args.decimal) csv << ",x_dec,P_dec";
    csv << "\n";
    const Rational step = Rational(spec.n) / Rational(args.samples - 1);
    for (long i = 0; i < args.samples; ++i) {
        const Rational x = Rational(i) * step;
        const Rational value = cert.dual_poly(x);
        csv << x.str() << "," << value.str();
        if (args.decimal) {
            csv << "," << real_str(to_real(x), 15) << "," << real_str(to_real(value), 15);
        }
        csv << "\n";
    }

    Json meta;
    meta["n"] = spec.n;
    meta["k"] = args.k;
    meta["p"] = spec.p.str();
    meta["M"] = cert.value.str();
    meta["zeros"] = cert.dual_zeros;
    Json coeffs = Json::array();
    for (const Rational& c : cert.dual_poly.coeffs()) coeffs.push_back(c.str());
    meta["coeffs"] = std::move(coeffs);
    meta["degenerate"] = cert.degenerate;

    // CSV is the main artifact; the zero list rides on the other stream so
    // plotting pipelines stay clean either way.
    if (args.out.empty()) {
        std::cout << csv.str();
        std::cerr << meta.dump(2) << "\n";
    } else {
        write_output(csv.str(), args.out);
        std::cout << meta.dump(2) << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string suite;
    long max_n = 14;
    long max_m = 40;
    int max_d = 10;
    long monic_max_m = 30;
    int monics = 500;
    std::string ks = "2,4,6,8";
    std::string ps = "1/2,1/3,3/10,2/3";
    std::string ns = "10,20,50,100,200";
    int configs_per_cell = 200;
    std::uint64_t seed = 1;
    int cases = 1000;
    std::string out;
    unsigned threads = 0;
    bool cap_ns_at_max_n = false;
};

int run_verify(const VerifyArgs& args) {
    SweepOptions sweep;
    sweep.max_n = args.max_n;
    sweep.ks.clear();
    for (const auto& s : split_list(args.ks)) sweep.ks.push_back(std::stoi(s));
    sweep.ps.clear();
    for (const auto& s : split_list(args.ps)) sweep.ps.push_back(parse_p(s));
    sweep.configs_per_cell = args.configs_per_cell;
    sweep.seed = args.seed;
    sweep.threads = args.threads;

    SuiteReport report;
    if (args.suite == "duality") {
        report = duality_suite(sweep);
    } else if (args.suite == "sandwich") {
        report = sandwich_suite(sweep);
    } else if (args.suite == "kwise") {
        report = kwise_suite(sweep);
    } else if (args.suite == "chebyshev") {
        report = chebyshev_suite(args.max_m, args.max_d, args.monic_max_m, args.monics,
                                 args.seed);
    } else if (args.suite == "perturbation") {
        report = perturbation_suite(sweep);
    } else if (args.suite == "probshift") {
        std::vector<long> ns;
        for (const auto& s : split_list(args.ns)) ns.push_back(std::stol(s));
        if (args.cap_ns_at_max_n) {
            // --max-n without an explicit grid: clip the default grid,
            // keeping at least max_n itself
            std::vector<long> clipped;
            for (long n : ns) {
                if (n <= args.max_n) clipped.push_back(n);
            }
            if (clipped.empty() || clipped.back() != args.max_n) {
                clipped.push_back(args.max_n);
            }
            ns = std::move(clipped);
        }
        report = probshift_suite(ns, sweep.ps);
    } else if (args.suite == "expectation") {
        report = expectation_suite(args.cases, args.seed);
    } else {
        std::cerr << "error: unknown suite '" << args.suite << "'\n";
        return kExitUsage;
    }

    Json out;
    out["suite"] = report.suite;
    out["pass"] = report.all_pass();
    out["failures"] = report.failures();
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
        Json item;
        item["check"] = c.check;
        item["params"] = c.params;
        item["pass"] = c.pass;
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    out["checks"] = std::move(checks);
    write_output(out.dump(2) + "\n", args.out);
    return report.all_pass() ? kExitOk : kExitInconsistent;
}

struct SampleArgs {
    long n = 0;
    int k = 0;
    std::string p;
    long count = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_sample(const SampleArgs& args) {
    const BinomialSpec spec(args.n, parse_p(args.p));
    if (args.k < 1 || args.k > spec.n) {
        std::cerr << "error: k exceeds n or is below 1\n";
        return kExitUsage;
    }
    if (args.count < 1) {
        std::cerr << "error: sample count must be positive\n";
        return kExitUsage;
    }
    const ExtremalCertificate cert = compute_M_primal(spec, args.k);
    const SymmetricJoint joint = lift_to_joint(cert.distribution);
    const std::vector<std::string> lines =
        sample(joint, args.seed, static_cast<size_t>(args.count));
    std::ostringstream body;
    for (const auto& line : lines) body << line << "\n";
    write_output(body.str(), args.out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations around the maximal AND probability of "
                 "k-wise independent bits"};
    app.require_subcommand(1);

    unsigned precision_bits = 256;
    app.add_option("--precision-bits", precision_bits,
                   "working precision for the approximate-side reals");

    ComputeArgs compute_args;
    CLI::App* compute = app.add_subcommand(
        "compute", "exact M(n,k,p) with a machine-checkable certificate");
    compute->add_option("--n", compute_args.n, "number of bits")->required();
    compute->add_option("--k", compute_args.k, "independence order")->required();
    compute->add_option("--p", compute_args.p, "marginal, e.g. 1/2 or 0.3")->required();
    compute->add_option("--method", compute_args.method, "primal | dual | both")
        ->check(CLI::IsMember({"primal", "dual", "both"}));
    compute->add_option("--out", compute_args.out, "write JSON here instead of stdout");
    compute->add_option("--max-candidates", compute_args.max_candidates,
                        "dual-search enumeration budget");
    compute->add_option("--threads", compute_args.threads, "worker threads (0 = auto)");

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan", "CSV of M and tilde_M over a grid");
    scan->add_option("--ns", scan_args.ns, "comma-separated n values")->required();
    scan->add_option("--ks", scan_args.ks, "comma-separated k values")->required();
    scan->add_option("--ps", scan_args.ps, "comma-separated marginals")->required();
    scan->add_option("--out", scan_args.out, "write CSV here instead of stdout");
    scan->add_flag("--decimal", scan_args.decimal, "append 15-digit decimal columns");

    PolyArgs poly_args;
    CLI::App* poly = app.add_subcommand(
        "poly", "sample the optimal dual polynomial for plotting");
    poly->add_option("--n", poly_args.n, "number of bits")->required();
    poly->add_option("--k", poly_args.k, "independence order (even)")->required();
    poly->add_option("--p", poly_args.p, "marginal")->required();
    poly->add_option("--samples", poly_args.samples, "number of sample points")->required();
    poly->add_option("--out", poly_args.out, "write CSV here; metadata then goes to stdout");
    poly->add_flag("--decimal", poly_args.decimal, "append decimal columns");
    poly->add_option("--max-candidates", poly_args.max_candidates,
                     "dual-search enumeration budget");
    poly->add_option("--threads", poly_args.threads, "worker threads (0 = auto)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", verify_args.suite,
                       "duality | sandwich | kwise | chebyshev | perturbation | "
                       "probshift | expectation")
        ->required();
    CLI::Option* verify_max_n =
        verify->add_option("--max-n", verify_args.max_n, "sweep bound on n");
    verify->add_option("--max-m", verify_args.max_m, "chebyshev: bound on M");
    verify->add_option("--max-d", verify_args.max_d, "chebyshev: bound on d");
    verify->add_option("--monic-max-m", verify_args.monic_max_m,
                       "chebyshev: bound on M for the random monic check");
    verify->add_option("--monics", verify_args.monics,
                       "chebyshev: random monic polynomials per cell");
    verify->add_option("--ks", verify_args.ks, "sweep k values");
    verify->add_option("--ps", verify_args.ps, "sweep marginals");
    CLI::Option* verify_ns =
        verify->add_option("--ns", verify_args.ns, "probshift: n values");
    verify->add_option("--configs-per-cell", verify_args.configs_per_cell,
                       "perturbation: random configurations per cell");
    verify->add_option("--seed", verify_args.seed, "seed for randomized checks");
    verify->add_option("--cases", verify_args.cases, "expectation: random cases");
    verify->add_option("--out", verify_args.out, "write JSON here instead of stdout");
    verify->add_option("--threads", verify_args.threads, "worker threads (0 = auto)");

    SampleArgs sample_args;
    CLI::App* sample_cmd = app.add_subcommand(
        "sample", "draw bitstrings from the extremal k-wise distribution");
    sample_cmd->add_option("--n", sample_args.n, "number of bits")->required();
    sample_cmd->add_option("--k", sample_args.k, "independence order")->required();
    sample_cmd->add_option("--p", sample_args.p, "marginal")->required();
    sample_cmd->add_option("--count", sample_args.count, "number of samples")->required();
    sample_cmd->add_option("--seed", sample_args.seed, "PRNG seed");
    sample_cmd->add_option("--out", sample_args.out, "write samples here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    verify_args.cap_ns_at_max_n = verify_max_n->count() > 0 && verify_ns->count() == 0;

    try {
        kwise::set_precision_bits(precision_bits);
        if (compute->parsed()) return run_compute(compute_args);
        if (scan->parsed()) return run_scan(scan_args);
        if (poly->parsed()) return run_poly(poly_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (sample_cmd->parsed()) return run_sample(sample_args);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
