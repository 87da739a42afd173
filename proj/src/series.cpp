#include "hypercat/series.hpp"

#include <algorithm>

#include "hypercat/closed_form.hpp"
#include "hypercat/combinatorics.hpp"

namespace hypercat {

TruncatedSeries TruncatedSeries::constant(std::size_t order, const Ratio& value) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    TruncatedSeries out(order);
    const std::size_t upto = std::min(order, this->order());
    for (std::size_t i = 0; i <= upto; ++i)
        out.coeffs_[i] = coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::shifted_up() const {
    TruncatedSeries out(order());
    for (std::size_t i = 1; i <= order(); ++i)
        out.coeffs_[i] = coeffs_[i - 1];
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    TruncatedSeries out(std::min(order(), other.order()));
    for (std::size_t i = 0; i <= out.order(); ++i)
        out.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    TruncatedSeries out(std::min(order(), other.order()));
    for (std::size_t i = 0; i <= out.order(); ++i)
        out.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    TruncatedSeries out(std::min(order(), other.order()));
    Ratio term;
    for (std::size_t i = 0; i <= out.order(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= out.order(); ++j) {
            if (other.coeffs_[j] == 0)
                continue;
            term = coeffs_[i] * other.coeffs_[j];
            out.coeffs_[i + j] += term;
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Ratio& factor) const {
    TruncatedSeries out(order());
    for (std::size_t i = 0; i <= order(); ++i)
        out.coeffs_[i] = coeffs_[i] * factor;
    return out;
}

TruncatedSeries TruncatedSeries::derivative() const {
    TruncatedSeries out(order());
    for (std::size_t i = 1; i <= order(); ++i)
        out.coeffs_[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return out;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
    hc_check(inner.coeff(0) == 0, "compose: inner series must have no constant term");
    const std::size_t n = std::min(order(), inner.order());
    TruncatedSeries in = inner.truncated(n);
    TruncatedSeries result = TruncatedSeries::constant(n, coeffs_[std::min(n, order())]);
    for (std::size_t i = std::min(n, order()); i-- > 0;) {
        result = result * in;
        result.coeffs_[0] += coeffs_[i];
    }
    return result;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    hc_check(coeffs_[0] != 0, "reciprocal: constant term is zero");
    TruncatedSeries out(order());
    const Ratio inv0 = 1 / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
        Ratio acc = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            if (coeffs_[j] == 0)
                continue;
            acc += coeffs_[j] * out.coeffs_[n - j];
        }
        out.coeffs_[n] = -acc * inv0;
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned long exponent) const {
    TruncatedSeries result = TruncatedSeries::constant(order(), 1);
    TruncatedSeries base = *this;
    while (exponent > 0) {
        if (exponent & 1)
            result = result * base;
        exponent >>= 1;
        if (exponent)
            base = base * base;
    }
    return result;
}

Natural TruncatedSeries::natural_coeff(std::size_t i) const {
    hc_check(i <= order(), "natural_coeff: index beyond truncation order");
    return to_natural(coeffs_[i]);
}

TruncatedSeries phi_series(unsigned long k, std::size_t order) {
    hc_check(k >= 1, "phi_series: need k >= 1");
    TruncatedSeries phi(order);
    for (std::size_t i = 0; i <= order; ++i)
        phi.set_coeff(i, Ratio(departure_count(i + 1, k)));
    return phi;
}

TruncatedSeries h_series(unsigned long k, std::size_t order) {
    hc_check(k >= 1, "h_series: need k >= 1");
    TruncatedSeries h(order);
    h.set_coeff(0, 1);
    for (std::size_t i = 1; i <= order; ++i)
        h.set_coeff(i, Ratio(departure_count(i, k)));
    return h;
}

TruncatedSeries solve_A(unsigned long k, std::size_t order) {
    hc_check(order >= 1, "solve_A: need order >= 1");
    const TruncatedSeries phi = phi_series(k, order);
    const TruncatedSeries dphi = phi.derivative();

    // Newton iteration on F(A) = A - z*phi(A); correct order doubles per step.
    TruncatedSeries a(1);
    a.set_coeff(1, 1);
    std::size_t correct = 1;
    while (correct < order) {
        const std::size_t next = std::min(2 * correct, order);
        a = a.truncated(next);
        const TruncatedSeries residual = a - phi.truncated(next).compose(a).shifted_up();
        const TruncatedSeries jacobian =
            TruncatedSeries::constant(next, 1) - dphi.truncated(next).compose(a).shifted_up();
        a = a - residual * jacobian.reciprocal();
        correct = next;
    }
    hc_check((a - phi.compose(a).shifted_up()).is_zero(), "solve_A: nonzero residual");
    return a;
}

TruncatedSeries ck_series(unsigned long k, std::size_t order) {
    const TruncatedSeries a = solve_A(k, order);
    TruncatedSeries c = h_series(k, order).compose(a).shifted_up();
    for (std::size_t i = 1; i <= order; ++i)
        c.natural_coeff(i);  // every count must come out an integer
    return c;
}

Natural lagrange_extract(unsigned long n, unsigned long k) {
    hc_check(n >= 1 && k >= 1, "lagrange_extract: need n >= 1, k >= 1");
    const std::size_t order = n - 1;
    const TruncatedSeries hprime = h_series(k, order + 1).derivative().truncated(order);
    const TruncatedSeries phi_pow = phi_series(k, order).pow(n);
    Ratio value = (hprime * phi_pow).coeff(order);
    value /= static_cast<unsigned long>(n);
    return to_natural(value);
}

Ratio BiSeries::coeff(std::size_t x_degree, std::size_t z_degree) const {
    if (z_degree >= by_z_degree.size())
        return 0;
    const auto& poly = by_z_degree[z_degree];
    if (x_degree >= poly.size())
        return 0;
    return poly[x_degree];
}

namespace {

// LHS of the functional equation: C_k(x,z) = sum c_{j,n} x^(kj)/(kj)! z^(n+1),
// with c_{0,0} = 1 for the single-vertex tree.
BiSeries build_ck_bivariate(unsigned long k, std::size_t order) {
    BiSeries lhs;
    lhs.order = order;
    lhs.by_z_degree.assign(order + 1, {});
    if (order >= 1)
        lhs.by_z_degree[1].assign(1, Ratio(1));
    for (std::size_t n = 1; n + 1 <= order; ++n) {
        auto& poly = lhs.by_z_degree[n + 1];
        poly.assign(k * n + 1, Ratio(0));
        for (unsigned long j = 1; j <= n; ++j) {
            Ratio c(root_degree_count(n, j, k));
            c /= factorial(k * j);
            poly[k * j] = c;
        }
    }
    return lhs;
}

}  // namespace

FunctionalEquationReport verify_functional_equation(unsigned long k, std::size_t order) {
    hc_check(k >= 1 && order >= 2, "verify_functional_equation: need k >= 1, order >= 2");
    const BiSeries lhs = build_ck_bivariate(k, order);

    // Laplace step: L(z) = L_{t=1}((t^(k-1)/(k-1)!) C_k(t,z)) collapses the
    // t-variable; the term c_{j,n} picks up (kj+k-1)!/((kj)!(k-1)!).
    TruncatedSeries laplace(order);
    const Natural km1_fact = factorial(k - 1);
    for (std::size_t b = 0; b <= order; ++b) {
        Ratio acc = 0;
        for (std::size_t a = 0; a < lhs.by_z_degree[b].size(); ++a) {
            if (lhs.by_z_degree[b][a] == 0)
                continue;
            Ratio weight(factorial(a + k - 1), km1_fact);
            weight.canonicalize();
            acc += lhs.by_z_degree[b][a] * weight;
        }
        laplace.set_coeff(b, acc);
    }

    // RHS = z * sum_m (x^(km)/(k!^m m!)) L(z)^m.
    BiSeries rhs;
    rhs.order = order;
    rhs.by_z_degree.assign(order + 1, {});
    for (std::size_t b = 0; b <= order; ++b)
        rhs.by_z_degree[b].assign(b == 0 ? 1 : k * (b - 1) + 1, Ratio(0));
    if (order >= 1)
        rhs.by_z_degree[1][0] = 1;
    TruncatedSeries lpow = TruncatedSeries::constant(order, 1);
    const Natural kfact = factorial(k);
    Ratio denom = 1;
    for (std::size_t m = 1; k * m <= k * (order - 1); ++m) {
        lpow = lpow * laplace;
        denom /= kfact;
        denom /= static_cast<unsigned long>(m);
        for (std::size_t b = m; b + 1 <= order; ++b) {
            if (k * m < rhs.by_z_degree[b + 1].size())
                rhs.by_z_degree[b + 1][k * m] = lpow.coeff(b) * denom;
        }
    }

    FunctionalEquationReport report;
    for (std::size_t b = 0; b <= order; ++b) {
        const std::size_t max_x = std::max(lhs.by_z_degree[b].size(), rhs.by_z_degree[b].size());
        for (std::size_t a = 0; a < max_x; ++a) {
            const Ratio left = lhs.coeff(a, b);
            const Ratio right = rhs.coeff(a, b);
            if (left != right)
                report.mismatches.push_back({a, b, left, right});
        }
    }
    report.ok = report.mismatches.empty();
    return report;
}

}  // namespace hypercat
