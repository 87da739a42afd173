#pragma once

#include <map>
#include <vector>

#include "hypercat/exact.hpp"

namespace hypercat {

// Natural log of an exact nonnegative integer, from its binary mantissa and
// exponent; relative error well below 1e-12 even for astronomically large
// values.
double ln_natural(const Natural& value);

struct StarParams {
    unsigned long n = 0;
    unsigned long m = 0;
    unsigned long k = 2;

    // The two-term consolidated count is only injective for n - m >= 3.
    bool valid() const { return k >= 2 && n >= m + 3; }
};

// Exact number of k-tours over all rooted star-like trees with one vertex of
// degree n-m and m vertices of degree 2. Throws std::domain_error outside
// the validity domain.
Natural star_count_exact(const StarParams& p);

// ln of the growth formula for c_n^(k) (separate shapes for k = 1, 2, >= 3).
double asymptotic_log_value(unsigned long n, unsigned long k);

// ln of the conjectured odd-k expression; algebraically equal to
// asymptotic_log_value for odd k >= 3. Even k is rejected.
double gunnells_log_value(unsigned long n, unsigned long k);

struct RatioRow {
    unsigned long n = 0;
    double log_exact = 0;  // ln c_n^(k) from the exact count
    double log_asym = 0;   // ln of the growth formula
    double ratio = 0;      // exp(log_exact - log_asym)
};

struct RatioReport {
    unsigned long k = 0;
    std::vector<RatioRow> rows;             // sorted by n
    std::vector<double> abs_delta_changes;  // |ratio-1| steps between rows
};

// Exact counts via the series route, compared in log space against the
// growth formula for each requested n.
RatioReport ratio_report(unsigned long k, std::vector<unsigned long> ns);

// (sum_{m <= n^(1/3)} s_2(n,m) / s_2(n,0), e^(3/2)); the first component
// approaches the second as n grows.
std::pair<double, double> star_sum_k2_check(unsigned long n);

// Exact check of the rerooting inequality for root degrees 2..n-m+1 against
// m/n times the root-degree-1 multinomial. part_counts maps outdegree i >= 1
// to its multiplicity n_i and must satisfy sum(n_i) = m, sum(i*n_i) = n-1.
bool rerooting_check(unsigned long n, unsigned long m,
                     const std::map<unsigned long, unsigned long>& part_counts);

}  // namespace hypercat
