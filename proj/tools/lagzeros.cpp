// Command-line front end: zeros, combination zeros, interlacing checks,
// reproduction of the printed zero lists, and seeded parameter sweeps.
//
// Exit status: 0 all checks pass, 1 a mathematical check failed,
// 2 usage or hypothesis error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lagzeros/lagzeros.hpp"

namespace {

using namespace lagzeros;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

std::string fmt(double v, int prec = 10) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    return buf;
}

void print_zero_list(std::ostream& os, const std::string& format, const ZeroSet& z) {
    if (format == "json") {
        os << nlohmann::json(z.values).dump() << '\n';
    } else if (format == "csv") {
        for (std::size_t i = 0; i < z.size(); ++i) os << (i ? "," : "") << format_real(z[i]);
        os << '\n';
    } else {
        os << "  k  zero\n";
        for (std::size_t i = 0; i < z.size(); ++i) {
            char line[64];
            std::snprintf(line, sizeof line, "%3zu  %.10g\n", i + 1, z[i]);
            os << line;
        }
    }
}

std::string describe(const InterlacingReport& r) {
    std::string s(to_string(r.verdict));
    s += " (pattern " + std::string(to_string(r.pattern)) + ", min gap " + fmt(r.min_gap, 4) + ")";
    if (r.violation) s += ", first violation at (" + std::to_string(r.violation->a) + "," + std::to_string(r.violation->b) + ")";
    return s;
}

std::string list(const ZeroSet& z) {
    std::string s = "{";
    for (std::size_t i = 0; i < z.size(); ++i) s += (i ? ", " : "") + fmt(z[i], 6);
    return s + "}";
}

int run_theorem(const std::string& which, int n, double alpha, double t, double coeff) {
    if (which == "R" || which == "S") {
        const auto rep = which == "R" ? check_theorem_R(n, alpha, t, coeff) : check_theorem_S(n, alpha, t, coeff);
        const std::string combo = which + "_" + std::to_string(n) + "^{" + fmt(alpha) + "," + fmt(t) + "}";
        const std::string second = which == "R" ? "L_" + std::to_string(n) : "L_" + std::to_string(n - 1);
        std::cout << "zeros of " << combo << " (coeff " << fmt(coeff) << "): " << list(rep.combination) << '\n';
        if (rep.reduced_degree) std::cout << "note: reduced degree, leading terms cancel (coeff = -1)\n";
        std::cout << "  vs L_" << n << "^{" << fmt(alpha) << "}: " << describe(rep.vs_first) << '\n';
        std::cout << "  vs " << second << "^{" << fmt(alpha + t) << "}: " << describe(rep.vs_second) << '\n';
        std::cout << (rep.holds() ? "PASS" : "FAIL") << '\n';
        return rep.holds() ? exit_ok : exit_check_failed;
    }
    if (which == "chain") {
        const auto r = check_chain(n, alpha, t);
        std::cout << "x = zeros of L_" << n << "^{" << fmt(alpha) << "}: " << list(r.x) << '\n'
                  << "y = zeros of L_" << n - 1 << "^{" << fmt(alpha) << "}: " << list(r.y) << '\n'
                  << "t = zeros of L_" << n - 1 << "^{" << fmt(alpha + t) << "}: " << list(r.shifted) << '\n'
                  << "X = zeros of L_" << n - 1 << "^{" << fmt(alpha + 2) << "}: " << list(r.X) << '\n';
        if (!r.holds) {
            std::cout << "chain broken at k=" << r.k << ": " << r.inequality << " fails (" << fmt(r.lhs) << " vs "
                      << fmt(r.rhs) << ")\nFAIL\n";
            return exit_check_failed;
        }
        std::cout << "x_k < y_k < t_k < X_k < x_{k+1} for k = 1.." << n - 1 << "\nPASS\n";
        return exit_ok;
    }
    if (which == "negative") {
        bool all = true;
        for (const auto& c : check_negative_claims()) {
            std::cout << (c.confirmed() ? "confirmed  " : "DISCREPANT ") << c.id << ": " << c.description
                      << " expected " << to_string(c.expected) << ", got " << describe(c.report) << '\n';
            all = all && c.confirmed();
        }
        std::cout << (all ? "PASS" : "FAIL") << '\n';
        return all ? exit_ok : exit_check_failed;
    }
    std::cerr << "unknown theorem '" << which << "' (expected R, S, chain or negative)\n";
    return exit_usage;
}

int run_repro(const std::string& format) {
    const auto fixtures = reproduce_paper_fixtures();
    const auto claims = check_negative_claims();
    bool ok = true;
    for (const auto& r : fixtures) ok = ok && r.pass;
    for (const auto& c : claims) ok = ok && c.confirmed();

    if (format == "json") {
        auto j = nlohmann::json::object();
        j["fixtures"] = nlohmann::json::array();
        for (const auto& r : fixtures)
            j["fixtures"].push_back({{"id", r.id},
                                     {"computed", r.computed},
                                     {"reference", r.reference},
                                     {"max_relative_deviation", r.max_relative_deviation},
                                     {"pass", r.pass}});
        j["claims"] = nlohmann::json::array();
        for (const auto& c : claims) {
            nlohmann::json cj{{"id", c.id},
                              {"expected", to_string(c.expected)},
                              {"verdict", to_string(c.report.verdict)},
                              {"confirmed", c.confirmed()}};
            if (c.report.violation) cj["violation"] = {c.report.violation->a, c.report.violation->b};
            j["claims"].push_back(cj);
        }
        j["pass"] = ok;
        std::cout << j.dump(2) << '\n';
        return ok ? exit_ok : exit_check_failed;
    }

    std::size_t passed = 0;
    for (const auto& r : fixtures) {
        passed += r.pass;
        std::cout << (r.pass ? "pass " : "FAIL ") << r.id << "  max rel dev " << fmt(r.max_relative_deviation, 3)
                  << "  " << r.description << '\n';
        std::cout << "     computed  ";
        for (double v : r.computed) std::cout << ' ' << fmt(v, 6);
        std::cout << "\n     reference ";
        for (double v : r.reference) std::cout << ' ' << fmt(v, 6);
        std::cout << '\n';
    }
    std::cout << passed << "/" << fixtures.size() << " zero fixtures pass (relative tolerance "
              << fmt(repro_relative_tolerance) << ")\n";
    for (const auto& c : claims)
        std::cout << (c.confirmed() ? "confirmed  " : "DISCREPANT ") << c.id << ": expected " << to_string(c.expected)
                  << ", got " << describe(c.report) << '\n';
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? exit_ok : exit_check_failed;
}

int run_sweep_cmd(const std::string& config_path, const std::string& format, unsigned threads, bool expect) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "cannot open config '" << config_path << "'\n";
        return exit_usage;
    }
    const SweepConfig config = parse_sweep_config(in);
    const auto records = run_sweep(config, threads);

    std::ofstream file;
    if (!config.out.empty()) {
        file.open(config.out, std::ios::binary);
        if (!file) {
            std::cerr << "cannot write '" << config.out << "'\n";
            return exit_usage;
        }
    }
    std::ostream& os = config.out.empty() ? std::cout : file;
    if (format == "csv") {
        write_csv(os, records);
    } else if (format == "json") {
        write_json(os, records);
    } else {
        write_table(os, records);
    }

    if (!expect) return exit_ok;
    bool all = true;
    for (const auto& r : records) {
        if (r.verdict == Verdict::interlaces) continue;
        all = false;
        std::cerr << "not interlacing: family=" << to_string(r.family) << " n=" << r.n << " alpha=" << format_real(r.alpha)
                  << " t=" << format_real(r.t) << " coeff=" << format_real(r.coeff) << " target=" << to_string(r.target)
                  << " verdict=" << to_string(r.verdict) << '\n';
    }
    return all ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeros and interlacing of Laguerre polynomials and their linear combinations"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"human", "json", "csv"};

    int n = 0;
    double alpha = 0.0, t = 0.0, coeff = 0.0;
    std::string format = "human", family = "R", theorem, config_path;
    unsigned threads = 1;
    bool expect = false;

    auto* zeros = app.add_subcommand("zeros", "Zeros of L_n^alpha");
    zeros->add_option("--n", n, "Degree")->required();
    zeros->add_option("--alpha", alpha, "Laguerre parameter (> -1)")->required();
    zeros->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* combo = app.add_subcommand("combo-zeros", "Zeros of R_n^{alpha,t} or S_n^{alpha,t}");
    combo->add_option("--family", family, "R or S")->required()->check(CLI::IsMember({"R", "S"}));
    combo->add_option("--n", n)->required();
    combo->add_option("--alpha", alpha)->required();
    combo->add_option("--t", t, "Parameter shift")->required();
    combo->add_option("--coeff", coeff, "Coefficient a (R) or b (S), nonzero")->required();
    combo->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* check = app.add_subcommand("check", "Check an interlacing statement");
    check->add_option("--theorem", theorem, "R, S, chain or negative")
        ->required()
        ->check(CLI::IsMember({"R", "S", "chain", "negative"}));
    check->add_option("--n", n);
    check->add_option("--alpha", alpha);
    check->add_option("--t", t);
    check->add_option("--coeff", coeff);

    auto* repro = app.add_subcommand("repro-paper", "Reproduce the printed zero lists and interlacing claims");
    repro->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    auto* sweep = app.add_subcommand("sweep", "Seeded parameter sweep");
    sweep->add_option("--config", config_path, "key=value config file")->required();
    sweep->add_option("--format", format)->check(CLI::IsMember(formats));
    sweep->add_option("--threads", threads, "Worker threads (output order is unaffected)");
    sweep->add_flag("--expect-interlacing", expect, "Exit 1 unless every record interlaces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*zeros) {
            print_zero_list(std::cout, format, laguerre_zeros(n, alpha));
            return exit_ok;
        }
        if (*combo) {
            const CombinationSpec spec(parse_family(family), {n, alpha, t, coeff});
            const ZeroSet z = combination_zeros(spec);
            if (format == "json") {
                std::cout << nlohmann::json{{"zeros", z.values},
                                            {"complete", z.complete},
                                            {"effective_degree", spec.effective_degree()},
                                            {"tolerance", z.tolerance}}
                                 .dump()
                          << '\n';
            } else if (format == "csv") {
                std::cout << (z.complete ? "true" : "false");
                for (double v : z.values) std::cout << ',' << format_real(v);
                std::cout << '\n';
            } else {
                if (spec.reduced_degree())
                    std::cout << "note: reduced degree " << spec.effective_degree()
                              << " (leading terms cancel for coeff = -1)\n";
                print_zero_list(std::cout, format, z);
                std::cout << "complete: " << (z.complete ? "yes" : "no") << " (" << z.size() << " of "
                          << spec.effective_degree() << " zeros)\n";
            }
            return exit_ok;
        }
        if (*check) return run_theorem(theorem, n, alpha, t, coeff);
        if (*repro) return run_repro(format);
        if (*sweep) return run_sweep_cmd(config_path, format, threads, expect);
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}
