#include "hypercat/closed_form.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hypercat {

Natural departure_count(unsigned long degree, unsigned long k) {
    hc_check(degree >= 1 && k >= 1, "departure_count: need degree >= 1, k >= 1");
    Natural result = block_multinomial(degree, k);
    const Natural dfact = factorial(degree);
    hc_check(mpz_divisible_p(result.get_mpz_t(), dfact.get_mpz_t()),
             "departure_count: not divisible");
    return result / dfact;
}

Natural tours_on_profile(const DegreeProfile& profile, unsigned long k) {
    hc_check(profile.valid(), "tours_on_profile: invalid profile");
    hc_check(k >= 1, "tours_on_profile: need k >= 1");
    Natural result = departure_count(profile.root_degree, k);
    for (const auto& [i, ni] : profile.counts) {
        Natural per_vertex = departure_count(i + 1, k);
        Natural power;
        mpz_pow_ui(power.get_mpz_t(), per_vertex.get_mpz_t(), ni);
        result *= power;
    }
    return result;
}

Natural root_degree_count(unsigned long n, unsigned long j, unsigned long k) {
    hc_check(j >= 1 && j <= n, "root_degree_count: need 1 <= j <= n");
    Natural sum = 0;
    for_each_profile(n, j, [&](const DegreeProfile& profile) {
        sum += tree_count(profile) * tours_on_profile(profile, k);
    });
    return sum;
}

unsigned configured_thread_count() {
    if (const char* env = std::getenv("HYPERCAT_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    return 1;
}

Natural hypergraph_catalan_closed(unsigned long n, unsigned long k) {
    hc_check(k >= 1, "hypergraph_catalan_closed: need k >= 1");
    if (n == 0)
        return 1;
    const unsigned workers = std::min<unsigned>(configured_thread_count(), n);
    if (workers <= 1) {
        Natural sum = 0;
        for (unsigned long l = 1; l <= n; ++l)
            sum += root_degree_count(n, l, k);
        return sum;
    }
    // Summands are independent naturals, so any reduction order is fine.
    std::vector<Natural> partial(workers, Natural(0));
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (unsigned long l = 1 + w; l <= n; l += workers)
                partial[w] += root_degree_count(n, l, k);
        });
    }
    for (auto& t : threads)
        t.join();
    Natural sum = 0;
    for (const auto& p : partial)
        sum += p;
    return sum;
}

}  // namespace hypercat
