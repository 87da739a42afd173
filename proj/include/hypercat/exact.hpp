#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hypercat {

// All exact counts live in Natural; intermediate rational weights in Ratio.
// Ratio values from gmpxx are kept canonical (reduced, positive denominator).
using Natural = mpz_class;
using Ratio = mpq_class;

class check_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

inline void hc_check(bool ok, const char* what) {
    if (!ok)
        throw check_error(what);
}

// Exact conversion Ratio -> Natural; throws if the value has a remainder or
// is negative. Used wherever a rational intermediate must collapse to a count.
inline Natural to_natural(const Ratio& q) {
    hc_check(q.get_den() == 1, "rational value is not an integer");
    hc_check(sgn(q.get_num()) >= 0, "negative value where a count was expected");
    return q.get_num();
}

inline std::string to_decimal(const Natural& n) { return n.get_str(); }

}  // namespace hypercat
