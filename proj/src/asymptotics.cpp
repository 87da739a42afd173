#include "hypercat/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypercat/closed_form.hpp"
#include "hypercat/combinatorics.hpp"
#include "hypercat/series.hpp"

namespace hypercat {

double ln_natural(const Natural& value) {
    hc_check(sgn(value) > 0, "ln_natural: need a positive value");
    signed long exponent;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

Natural star_count_exact(const StarParams& p) {
    if (!p.valid())
        throw std::domain_error("star_count_exact: requires k >= 2 and n - m >= 3");
    const Natural big_vertex = departure_count(p.n - p.m, p.k);  // X
    const Natural chain_vertex = departure_count(2, p.k);        // Y
    Natural chain_power;
    mpz_pow_ui(chain_power.get_mpz_t(), chain_vertex.get_mpz_t(), p.m);

    // rootings at the big vertex or a leaf ...
    Ratio total(factorial(p.n - 1), factorial(p.m) * factorial(p.n - p.m - 1));
    total.canonicalize();
    // ... plus rootings at one of the m chain vertices
    if (p.m >= 1) {
        Ratio chain_root(factorial(p.n - 1), factorial(p.m - 1) * factorial(p.n - p.m));
        chain_root.canonicalize();
        total += chain_root;
    }
    total *= 2 * chain_power * big_vertex;
    return to_natural(total);
}

namespace {

constexpr double kPi = 3.14159265358979323846;

double log_factorial(unsigned long n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

double asymptotic_log_value(unsigned long n, unsigned long k) {
    hc_check(n >= 1 && k >= 1, "asymptotic_log_value: need n >= 1, k >= 1");
    const double dn = static_cast<double>(n);
    const double dk = static_cast<double>(k);
    if (k == 1)
        return dn * std::log(4.0) - 0.5 * std::log(kPi * dn * dn * dn);
    if (k == 2)
        return std::log(2.0) + 0.5 * (3.0 - std::log(kPi * dn)) + dn * std::log(2.0) +
               log_factorial(n);
    return std::log(2.0) + 0.5 * (std::log(dk) - (dk - 1.0) * std::log(2.0 * kPi * dn)) +
           dn * (dk * std::log(dk) - log_factorial(k)) + (dk - 1.0) * log_factorial(n);
}

double gunnells_log_value(unsigned long n, unsigned long k) {
    hc_check(n >= 1, "gunnells_log_value: need n >= 1");
    if (k < 3 || k % 2 == 0)
        throw std::domain_error("gunnells_log_value: only odd k >= 3 is supported");
    const double dn = static_cast<double>(n);
    const double dk = static_cast<double>(k);
    double log_binom_product = 0.0;
    for (unsigned long j = 2; j <= k - 1; j += 2)
        log_binom_product += ln_natural(binomial(j, 2));
    return std::log(2.0) + log_binom_product - (2.0 * dk - 3.0) / 2.0 * std::log(dk) -
           (dk - 1.0) / 2.0 * std::log(kPi * dn) +
           (dn + 1.0) * (dk * std::log(dk) - log_factorial(k)) + (dk - 1.0) * log_factorial(n);
}

RatioReport ratio_report(unsigned long k, std::vector<unsigned long> ns) {
    hc_check(!ns.empty(), "ratio_report: need at least one n");
    std::sort(ns.begin(), ns.end());
    const unsigned long max_n = ns.back();
    hc_check(ns.front() >= 1, "ratio_report: need n >= 1");
    const TruncatedSeries c = ck_series(k, max_n + 1);

    RatioReport report;
    report.k = k;
    for (unsigned long n : ns) {
        RatioRow row;
        row.n = n;
        row.log_exact = ln_natural(c.natural_coeff(n + 1));
        row.log_asym = asymptotic_log_value(n, k);
        row.ratio = std::exp(row.log_exact - row.log_asym);
        report.rows.push_back(row);
    }
    for (std::size_t i = 1; i < report.rows.size(); ++i)
        report.abs_delta_changes.push_back(std::abs(report.rows[i].ratio - 1.0) -
                                           std::abs(report.rows[i - 1].ratio - 1.0));
    return report;
}

std::pair<double, double> star_sum_k2_check(unsigned long n) {
    hc_check(n >= 4, "star_sum_k2_check: need n >= 4");
    const unsigned long m_limit = std::min<unsigned long>(
        static_cast<unsigned long>(std::cbrt(static_cast<double>(n))), n - 3);
    Natural sum = 0;
    for (unsigned long m = 0; m <= m_limit; ++m)
        sum += star_count_exact({n, m, 2});
    Ratio ratio(sum, star_count_exact({n, 0, 2}));
    ratio.canonicalize();
    return {ratio.get_d(), std::exp(1.5)};
}

bool rerooting_check(unsigned long n, unsigned long m,
                     const std::map<unsigned long, unsigned long>& part_counts) {
    unsigned long vertices = 0, children = 0;
    for (const auto& [i, ni] : part_counts) {
        hc_check(i >= 1, "rerooting_check: outdegrees must be >= 1");
        vertices += ni;
        children += i * ni;
    }
    hc_check(m >= 1 && m <= n - 1, "rerooting_check: need 1 <= m <= n-1");
    hc_check(vertices == m && children == n - 1,
             "rerooting_check: counts must satisfy sum(n_i) = m, sum(i*n_i) = n-1");

    Ratio count_product = 1;  // product of n_i! over the base counts
    for (const auto& [i, ni] : part_counts)
        count_product *= factorial(ni);

    // RHS: (m/n) * n! / ((n-m)! * prod n_i!)
    Ratio rhs(m * factorial(n), 1);
    rhs /= Ratio(n, 1);
    rhs /= factorial(n - m);
    rhs /= count_product;

    // LHS: root degree l reroots away one vertex of outdegree l-1.
    Ratio lhs = 0;
    for (unsigned long l = 2; l <= n - m + 1; ++l) {
        const auto it = part_counts.find(l - 1);
        if (it == part_counts.end() || it->second == 0)
            continue;
        Ratio term(l * factorial(n), 1);
        term /= Ratio(n, 1);
        term /= factorial(n - m + 1);
        term /= count_product;
        term *= factorial(it->second);
        term /= factorial(it->second - 1);
        lhs += term;
    }
    return lhs <= rhs;
}

}  // namespace hypercat
