#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypercat/asymptotics.hpp"
#include "hypercat/closed_form.hpp"
#include "hypercat/combinatorics.hpp"
#include "hypercat/oracle.hpp"
#include "hypercat/series.hpp"
#include "hypercat/verify.hpp"

namespace {

using hypercat::Natural;
using json = nlohmann::json;

std::ostream& output_stream(const std::string& out_file, std::ofstream& file) {
    if (out_file.empty())
        return std::cout;
    file.open(out_file);
    if (!file)
        throw std::runtime_error("cannot open output file: " + out_file);
    return file;
}

std::string format_sig12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

Natural compute_value(unsigned long n, unsigned long k, std::string method,
                      unsigned long max_walk_kn) {
    if (method == "auto")
        method = (k * n <= 6) ? "walks" : "series";
    if (method == "closed")
        return hypercat::hypergraph_catalan_closed(n, k);
    if (method == "series")
        return n == 0 ? Natural(1) : hypercat::ck_series(k, n + 1).natural_coeff(n + 1);
    if (method == "lagrange")
        return n == 0 ? Natural(1) : hypercat::lagrange_extract(n, k);
    if (method == "trees")
        return hypercat::oracle_by_trees(n, k);
    if (method == "walks")
        return hypercat::brute_force_walks(n, k, max_walk_kn);
    throw CLI::ValidationError("--method", "unknown method: " + method);
}

int cmd_table(const std::vector<unsigned long>& k_set, unsigned long n_max,
              const std::string& format, const std::string& out_file) {
    std::ofstream file;
    std::ostream& out = output_stream(out_file, file);
    json rows = json::array();
    if (format == "csv")
        out << "k,n,c\n";
    for (unsigned long k : k_set) {
        const hypercat::TruncatedSeries c = hypercat::ck_series(k, n_max + 1);
        for (unsigned long n = 0; n <= n_max; ++n) {
            const std::string value = hypercat::to_decimal(c.natural_coeff(n + 1));
            if (format == "csv")
                out << k << "," << n << "," << value << "\n";
            else
                rows.push_back({{"k", k}, {"n", n}, {"c", value}});
        }
    }
    if (format == "json")
        out << rows.dump(2) << "\n";
    return out.good() ? 0 : 1;
}

int cmd_ratio(unsigned long k, const std::vector<unsigned long>& ns, const std::string& format,
              const std::string& out_file) {
    const hypercat::RatioReport report = hypercat::ratio_report(k, ns);
    std::ofstream file;
    std::ostream& out = output_stream(out_file, file);
    if (format == "csv") {
        out << "k,n,ratio,abs_delta\n";
        for (const auto& row : report.rows)
            out << k << "," << row.n << "," << format_sig12(row.ratio) << ","
                << format_sig12(std::abs(row.ratio - 1.0)) << "\n";
    } else {
        json rows = json::array();
        for (const auto& row : report.rows)
            rows.push_back({{"k", k},
                            {"n", row.n},
                            {"ratio", format_sig12(row.ratio)},
                            {"abs_delta", format_sig12(std::abs(row.ratio - 1.0))}});
        out << rows.dump(2) << "\n";
    }
    return out.good() ? 0 : 1;
}

int cmd_verify(const std::string& level) {
    const auto checks =
        level == "full" ? hypercat::verify::run_full() : hypercat::verify::run_quick();
    for (const auto& check : checks) {
        std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name << "  ("
                  << format_sig12(check.seconds) << "s)";
        if (!check.detail.empty())
            std::cout << "  " << check.detail;
        std::cout << "\n";
    }
    return hypercat::verify::all_passed(checks) ? 0 : 1;
}

int cmd_star(unsigned long k, unsigned long n, unsigned long m, bool sum_check) {
    if (sum_check) {
        const auto [partial_sum, limit] = hypercat::star_sum_k2_check(n);
        std::cout << format_sig12(partial_sum) << " -> " << format_sig12(limit) << "\n";
        return 0;
    }
    std::cout << hypercat::to_decimal(hypercat::star_count_exact({n, m, k})) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph Catalan numbers: exact computation and verification"};
    app.require_subcommand(1);

    unsigned long k = 2, n = 0, m = 0, n_max = 10, max_walk_kn = 8;
    std::vector<unsigned long> k_set, ns;
    std::string method = "auto", format = "csv", out_file, level = "quick";
    bool star_sum = false;

    auto* compute = app.add_subcommand("compute", "print one exact value c_n^(k)");
    compute->add_option("-k", k, "tour multiplicity")->required();
    compute->add_option("-n", n, "edge count of the tree")->required();
    compute->add_option("--method", method, "closed|series|lagrange|trees|walks|auto");
    compute->add_option("--max-walk-steps", max_walk_kn,
                        "k*n bound for the walk oracle (warning: exponential above 8)");

    auto* table = app.add_subcommand("table", "emit a (k, n, c) table");
    table->add_option("-k", k_set, "one or more k values")->required()->expected(-1);
    table->add_option("-n", n_max, "largest n")->required();
    table->add_option("--format", format, "csv|json");
    table->add_option("--out", out_file, "write to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run the cross-route verification suites");
    verify->add_option("--level", level, "quick|full");

    auto* ratio = app.add_subcommand("ratio", "exact-vs-asymptotic ratio report");
    ratio->add_option("-k", k, "tour multiplicity")->required();
    ratio->add_option("--ns", ns, "comma separated n values")->required()->delimiter(',');
    ratio->add_option("--format", format, "csv|json");
    ratio->add_option("--out", out_file, "write to a file instead of stdout");

    auto* star = app.add_subcommand("star", "exact star-like tour counts s_k(n,m)");
    star->add_option("-k", k, "tour multiplicity (k >= 2)")->required();
    star->add_option("-n", n, "edge count")->required();
    star->add_option("-m", m, "number of degree-2 vertices");
    star->add_flag("--sum", star_sum, "k=2 star-like partial sum against e^(3/2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) {
            if (max_walk_kn > 8 && method == "walks")
                std::cerr << "warning: walk oracle beyond k*n = 8 may take very long\n";
            std::cout << hypercat::to_decimal(compute_value(n, k, method, max_walk_kn)) << "\n";
            return 0;
        }
        if (table->parsed())
            return cmd_table(k_set, n_max, format, out_file);
        if (verify->parsed())
            return cmd_verify(level);
        if (ratio->parsed())
            return cmd_ratio(k, ns, format, out_file);
        if (star->parsed())
            return cmd_star(k, n, m, star_sum);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
