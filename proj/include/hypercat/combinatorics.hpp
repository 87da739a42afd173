#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hypercat/exact.hpp"

namespace hypercat {

Natural factorial(unsigned long n);

Natural binomial(unsigned long n, unsigned long k);

// (i*k)! / (k!)^i -- the multinomial coefficient with i equal blocks of size k.
Natural block_multinomial(unsigned long blocks, unsigned long block_size);

Natural catalan(unsigned long n);

// Degree data of a rooted plane tree with n+1 vertices: root degree plus the
// multiplicities of non-root vertices by child count. Only nonzero counts for
// outdegree >= 1 are stored; the leaf count n_0 is implied by sum(n_i) = n.
struct DegreeProfile {
    unsigned long n = 0;
    unsigned long root_degree = 0;
    std::map<unsigned long, unsigned long> counts;  // outdegree i >= 1 -> n_i

    unsigned long internal_count() const;  // sum of stored n_i
    unsigned long leaf_count() const;      // n_0
    bool valid() const;                    // both linear constraints hold
};

// Visits every profile in T_n(l) exactly once. Iteration is over partitions
// of n-l in reverse-lexicographic order, so results are reproducible.
void for_each_profile(unsigned long n, unsigned long root_degree,
                      const std::function<void(const DegreeProfile&)>& visit);

std::vector<DegreeProfile> profiles(unsigned long n, unsigned long root_degree);

// Number of rooted plane trees realizing a profile: (l/n) * n!/(n_0! n_1! ...).
// The rational must reduce to an integer; a remainder signals a broken profile.
Natural tree_count(const DegreeProfile& profile);

}  // namespace hypercat
