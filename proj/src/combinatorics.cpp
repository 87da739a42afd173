#include "hypercat/combinatorics.hpp"

#include <mutex>

namespace hypercat {

namespace {

std::mutex factorial_mutex;
std::vector<Natural> factorial_table = {Natural(1)};

}  // namespace

Natural factorial(unsigned long n) {
    std::lock_guard<std::mutex> lock(factorial_mutex);
    while (factorial_table.size() <= n) {
        const auto m = factorial_table.size();
        factorial_table.push_back(factorial_table.back() * static_cast<unsigned long>(m));
    }
    return factorial_table[n];
}

Natural binomial(unsigned long n, unsigned long k) {
    if (k > n)
        return 0;
    Natural result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

Natural block_multinomial(unsigned long blocks, unsigned long block_size) {
    hc_check(block_size >= 1, "block_multinomial: block size must be positive");
    Natural result = factorial(blocks * block_size);
    const Natural kfact = factorial(block_size);
    for (unsigned long i = 0; i < blocks; ++i) {
        hc_check(mpz_divisible_p(result.get_mpz_t(), kfact.get_mpz_t()),
                 "block_multinomial: not divisible");
        result /= kfact;
    }
    return result;
}

Natural catalan(unsigned long n) {
    Natural b = binomial(2 * n, n);
    hc_check(mpz_divisible_ui_p(b.get_mpz_t(), n + 1), "catalan: not divisible");
    return b / (n + 1);
}

unsigned long DegreeProfile::internal_count() const {
    unsigned long total = 0;
    for (const auto& [i, ni] : counts)
        total += ni;
    return total;
}

unsigned long DegreeProfile::leaf_count() const { return n - internal_count(); }

bool DegreeProfile::valid() const {
    if (root_degree < 1 || root_degree > n)
        return false;
    unsigned long vertices = 0, children = 0;
    for (const auto& [i, ni] : counts) {
        if (i < 1 || ni < 1)
            return false;
        vertices += ni;
        children += i * ni;
    }
    // leaves make up the rest of the n non-root vertices
    return vertices <= n && children == n - root_degree;
}

void for_each_profile(unsigned long n, unsigned long root_degree,
                      const std::function<void(const DegreeProfile&)>& visit) {
    hc_check(root_degree >= 1 && root_degree <= n, "for_each_profile: need 1 <= l <= n");
    const unsigned long total = n - root_degree;

    // Partitions of n - l in reverse-lexicographic order; part i adds one
    // vertex with i children. n_0 is implied.
    std::vector<unsigned long> parts;
    DegreeProfile profile;
    profile.n = n;
    profile.root_degree = root_degree;

    std::function<void(unsigned long, unsigned long)> rec =
        [&](unsigned long remaining, unsigned long max_part) {
            if (remaining == 0) {
                profile.counts.clear();
                for (unsigned long p : parts)
                    ++profile.counts[p];
                visit(profile);
                return;
            }
            for (unsigned long p = std::min(remaining, max_part); p >= 1; --p) {
                parts.push_back(p);
                rec(remaining - p, p);
                parts.pop_back();
            }
        };
    rec(total, total == 0 ? 1 : total);
}

std::vector<DegreeProfile> profiles(unsigned long n, unsigned long root_degree) {
    std::vector<DegreeProfile> out;
    for_each_profile(n, root_degree, [&](const DegreeProfile& p) { out.push_back(p); });
    return out;
}

Natural tree_count(const DegreeProfile& profile) {
    hc_check(profile.valid(), "tree_count: invalid profile");
    Ratio value(profile.root_degree, profile.n);
    value.canonicalize();
    Ratio multinomial(factorial(profile.n));
    multinomial /= factorial(profile.leaf_count());
    for (const auto& [i, ni] : profile.counts)
        multinomial /= factorial(ni);
    value *= multinomial;
    return to_natural(value);
}

}  // namespace hypercat
