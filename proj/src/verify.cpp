#include "hypercat/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "hypercat/asymptotics.hpp"
#include "hypercat/closed_form.hpp"
#include "hypercat/combinatorics.hpp"
#include "hypercat/oracle.hpp"
#include "hypercat/series.hpp"

namespace hypercat::verify {

namespace {

using CheckBody = std::function<bool(std::ostringstream&)>;

Check run_check(const std::string& name, double budget_seconds, const CheckBody& body) {
    Check check;
    check.name = name;
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    try {
        check.passed = body(detail);
    } catch (const std::exception& e) {
        check.passed = false;
        detail << " exception: " << e.what();
    }
    check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.passed && check.seconds > budget_seconds) {
        check.passed = false;
        detail << " exceeded " << budget_seconds << "s budget";
    }
    check.detail = detail.str();
    return check;
}

bool triple_agreement(unsigned long max_kn, unsigned long max_k, std::ostringstream& detail) {
    for (unsigned long k = 1; k <= max_k; ++k) {
        for (unsigned long n = 1; k * n <= max_kn; ++n) {
            const Natural walks = brute_force_walks(n, k, max_kn);
            const Natural trees = oracle_by_trees(n, k);
            const Natural closed = hypergraph_catalan_closed(n, k);
            const Natural series = ck_series(k, n + 1).natural_coeff(n + 1);
            if (walks != trees || walks != closed || walks != series) {
                detail << "mismatch at n=" << n << " k=" << k << ": walks=" << walks
                       << " trees=" << trees << " closed=" << closed << " series=" << series;
                return false;
            }
        }
    }
    detail << "all routes agree for k*n <= " << max_kn;
    return true;
}

bool catalan_specialization(unsigned long max_n, std::ostringstream& detail) {
    const TruncatedSeries c = ck_series(1, max_n + 1);
    for (unsigned long n = 0; n <= max_n; ++n) {
        if (c.natural_coeff(n + 1) != catalan(n)) {
            detail << "series k=1 disagrees with catalan at n=" << n;
            return false;
        }
    }
    detail << "c_n^(1) = catalan(n) for n <= " << max_n;
    return true;
}

bool known_small_values(std::ostringstream& detail) {
    struct Frozen {
        unsigned long n, k;
        const char* value;
    };
    // confirmed by the brute-force walk oracle before freezing
    const Frozen frozen[] = {{2, 2, "6"}, {3, 2, "57"}, {2, 3, "20"},
                             {1, 1, "1"}, {1, 2, "1"},  {1, 3, "1"},
                             {1, 4, "1"}, {1, 5, "1"},  {1, 6, "1"}};
    for (const auto& f : frozen) {
        const Natural expected(f.value);
        const Natural walked = brute_force_walks(f.n, f.k, 12);
        if (walked != expected) {
            detail << "c_" << f.n << "^(" << f.k << ") = " << walked << ", expected " << f.value;
            return false;
        }
    }
    detail << "regression constants confirmed by the walk oracle";
    return true;
}

bool functional_equation(unsigned long max_k, std::size_t order, std::ostringstream& detail) {
    for (unsigned long k = 1; k <= max_k; ++k) {
        const auto report = verify_functional_equation(k, order);
        if (!report.ok) {
            const auto& m = report.mismatches.front();
            detail << "k=" << k << " first mismatch at x^" << m.x_degree << " z^" << m.z_degree
                   << ": lhs=" << m.lhs << " rhs=" << m.rhs;
            return false;
        }
    }
    detail << "functional equation holds to order " << order << " for k <= " << max_k;
    return true;
}

// Exhaustive star-like count over plane trees: exactly one vertex of degree
// n-m, m vertices of degree 2, and n-m leaves.
Natural star_count_by_enumeration(unsigned long n, unsigned long m, unsigned long k) {
    Natural sum = 0;
    for_each_plane_tree(n + 1, [&](const PlaneTree& tree) {
        unsigned long big = 0, chain = 0, leaves = 0;
        for (unsigned v = 0; v < tree.vertex_count(); ++v) {
            const unsigned d = tree.degree(v);
            if (d == n - m)
                ++big;
            else if (d == 2)
                ++chain;
            else if (d == 1)
                ++leaves;
        }
        if (big == 1 && chain == m && leaves == n - m)
            sum += tours_on_tree(tree, k);
    });
    return sum;
}

bool star_counts(unsigned long max_n, std::ostringstream& detail) {
    if (star_count_exact({3, 0, 2}) != 30 || star_count_exact({4, 1, 2}) != 360) {
        detail << "pinned star values disagree";
        return false;
    }
    for (unsigned long k = 2; k <= 3; ++k) {
        for (unsigned long n = 3; n <= max_n; ++n) {
            for (unsigned long m = 0; m + 3 <= n; ++m) {
                const Natural formula = star_count_exact({n, m, k});
                const Natural enumerated = star_count_by_enumeration(n, m, k);
                if (formula != enumerated) {
                    detail << "s_" << k << "(" << n << "," << m << "): formula=" << formula
                           << " enumeration=" << enumerated;
                    return false;
                }
            }
        }
    }
    detail << "star-like counts match enumeration for n <= " << max_n << ", k in {2,3}";
    return true;
}

bool gunnells_identity(std::ostringstream& detail) {
    for (unsigned long k : {3ul, 5ul, 7ul}) {
        for (unsigned long n : {1ul, 10ul, 100ul}) {
            const double diff = std::abs(gunnells_log_value(n, k) - asymptotic_log_value(n, k));
            if (!(diff < 1e-10)) {
                detail << "k=" << k << " n=" << n << " |log diff|=" << diff;
                return false;
            }
        }
    }
    detail << "odd-k conjectured form matches the growth formula in log space";
    return true;
}

// Realized n=400 ratios, frozen from the first validated run.
struct FrozenRatio {
    unsigned long k;
    double ratio;
};
constexpr FrozenRatio kFrozenRatio400[] = {
    {1, 0.997194562498},
    {2, 1.01117310837},
    {3, 1.0050267653},
    {4, 0.999239624328},
};

bool asymptotic_convergence(std::ostringstream& detail) {
    for (const auto& frozen : kFrozenRatio400) {
        const auto report = ratio_report(frozen.k, {50, 100, 200, 400});
        for (std::size_t i = 1; i < report.rows.size(); ++i) {
            const double prev = std::abs(report.rows[i - 1].ratio - 1.0);
            const double cur = std::abs(report.rows[i].ratio - 1.0);
            if (!(cur < prev)) {
                detail << "k=" << frozen.k << ": |ratio-1| not strictly decreasing at n="
                       << report.rows[i].n;
                return false;
            }
        }
        const double final_ratio = report.rows.back().ratio;
        if (!(final_ratio > 0.5 && final_ratio < 2.0)) {
            detail << "k=" << frozen.k << ": n=400 ratio " << final_ratio << " outside (0.5, 2)";
            return false;
        }
        if (frozen.ratio != 0.0 &&
            std::abs(final_ratio - frozen.ratio) > 1e-9 * std::abs(frozen.ratio)) {
            detail.precision(17);
            detail << "k=" << frozen.k << ": n=400 ratio " << final_ratio
                   << " drifted from frozen " << frozen.ratio;
            return false;
        }
    }
    detail << "|ratio-1| strictly decreasing over n in {50,100,200,400} for k <= 4";
    return true;
}

bool star_dominance(std::ostringstream& detail) {
    const TruncatedSeries c = ck_series(3, 19);
    Ratio previous;
    bool have_previous = false;
    for (unsigned long n : {6ul, 10ul, 14ul, 18ul}) {
        const Natural total = c.natural_coeff(n + 1);
        const Natural star = star_count_exact({n, 0, 3});
        Ratio rel(total - star, star);
        rel.canonicalize();
        if (have_previous && !(rel < previous)) {
            detail << "relative star deficit not decreasing at n=" << n;
            return false;
        }
        previous = rel;
        have_previous = true;
    }
    detail << "k=3 star share of c_n grows monotonically over n in {6,10,14,18}";
    return true;
}

bool rerooting_exhaustive(unsigned long max_n, std::ostringstream& detail) {
    for (unsigned long n = 2; n <= max_n; ++n) {
        bool ok = true;
        // every multiset of outdegrees >= 1 summing to n-1
        for_each_profile(n, 1, [&](const DegreeProfile& profile) {
            if (!ok)
                return;
            const unsigned long m = profile.internal_count();
            if (m < 1 || m > n - 1)
                return;
            if (!rerooting_check(n, m, profile.counts)) {
                detail << "inequality fails at n=" << n << " m=" << m;
                ok = false;
            }
        });
        if (!ok)
            return false;
    }
    detail << "rerooting inequality holds for all inputs with n <= " << max_n;
    return true;
}

bool bijection_round_trip(unsigned long max_kn, std::ostringstream& detail) {
    for (unsigned long k = 1; k <= max_kn; ++k) {
        for (unsigned long n = 1; k * n <= max_kn; ++n) {
            bool ok = true;
            brute_force_walks(n, k, max_kn, [&](const Walk& walk) {
                if (!ok)
                    return;
                auto [tree, seqs] = decompose_walk(walk, k);
                if (reconstruct_walk(tree, std::move(seqs)) != walk)
                    ok = false;
            });
            if (!ok) {
                detail << "round trip broke a walk at n=" << n << " k=" << k;
                return false;
            }
        }
    }
    detail << "reconstruct(decompose(W)) = W for every enumerated tour with k*n <= " << max_kn;
    return true;
}

}  // namespace

std::vector<Check> run_quick() {
    std::vector<Check> checks;
    checks.push_back(run_check("triple-route-agreement", 60, [](std::ostringstream& d) {
        return triple_agreement(6, 6, d);
    }));
    checks.push_back(run_check("catalan-specialization", 30, [](std::ostringstream& d) {
        return catalan_specialization(50, d);
    }));
    checks.push_back(run_check("functional-equation", 30, [](std::ostringstream& d) {
        return functional_equation(3, 5, d);
    }));
    checks.push_back(run_check("rerooting-inequality", 30, [](std::ostringstream& d) {
        return rerooting_exhaustive(8, d);
    }));
    return checks;
}

std::vector<Check> run_full() {
    std::vector<Check> checks;
    checks.push_back(run_check("triple-route-agreement", 60, [](std::ostringstream& d) {
        return triple_agreement(8, 4, d);
    }));
    checks.push_back(run_check("catalan-specialization", 10, [](std::ostringstream& d) {
        return catalan_specialization(300, d);
    }));
    checks.push_back(run_check("known-small-values", 5, known_small_values));
    checks.push_back(run_check("functional-equation", 30, [](std::ostringstream& d) {
        return functional_equation(3, 6, d);
    }));
    checks.push_back(run_check("star-like-counts", 60, [](std::ostringstream& d) {
        return star_counts(8, d);
    }));
    checks.push_back(run_check("gunnells-odd-k-identity", 1, gunnells_identity));
    checks.push_back(run_check("asymptotic-convergence", 2400, asymptotic_convergence));
    checks.push_back(run_check("star-dominance", 60, star_dominance));
    checks.push_back(run_check("rerooting-inequality", 60, [](std::ostringstream& d) {
        return rerooting_exhaustive(12, d);
    }));
    checks.push_back(run_check("bijection-round-trip", 30, [](std::ostringstream& d) {
        return bijection_round_trip(6, d);
    }));
    return checks;
}

bool all_passed(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

}  // namespace hypercat::verify
