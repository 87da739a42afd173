#pragma once

#include <cstddef>
#include <vector>

#include "hypercat/exact.hpp"

namespace hypercat {

// Formal power series with exact rational coefficients, truncated at a fixed
// order. All arithmetic is closed at the smaller order of the operands.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    static TruncatedSeries constant(std::size_t order, const Ratio& value);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Ratio& coeff(std::size_t i) const { return coeffs_[i]; }
    void set_coeff(std::size_t i, Ratio value) { coeffs_[i] = std::move(value); }
    bool is_zero() const;

    TruncatedSeries truncated(std::size_t order) const;
    TruncatedSeries shifted_up() const;  // multiply by z, drop the top term

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries scaled(const Ratio& factor) const;
    TruncatedSeries derivative() const;

    // f.compose(g) with g(0) = 0, by Horner over f's coefficients.
    TruncatedSeries compose(const TruncatedSeries& inner) const;

    // Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries reciprocal() const;

    // Truncated power by repeated squaring.
    TruncatedSeries pow(unsigned long exponent) const;

    // Coefficient that must be a nonnegative integer (throws otherwise).
    Natural natural_coeff(std::size_t i) const;

  private:
    std::vector<Ratio> coeffs_;  // exactly order+1 entries
};

// phi(u) = sum_i departure_count(i+1, k) u^i.
TruncatedSeries phi_series(unsigned long k, std::size_t order);

// H(u) = sum_i departure_count(i, k) u^i (constant term 1).
TruncatedSeries h_series(unsigned long k, std::size_t order);

// The unique series with A(0) = 0 and A = z*phi(A) mod z^(N+1). The residual
// A - z*phi(A) is checked to vanish before returning.
TruncatedSeries solve_A(unsigned long k, std::size_t order);

// C_k(z) = z*H(A(z)); c_n^(k) = [z^(n+1)] C_k(z). Integrality of every
// extracted coefficient is asserted.
TruncatedSeries ck_series(unsigned long k, std::size_t order);

// c_n^(k) by Lagrange inversion: (1/n) [u^(n-1)] H'(u) phi(u)^n.
Natural lagrange_extract(unsigned long n, unsigned long k);

// Bivariate series in x and z used by the functional-equation check:
// for each z-degree b <= order, a dense polynomial in x.
struct BiSeries {
    std::size_t order = 0;
    std::vector<std::vector<Ratio>> by_z_degree;  // [b][a] = coeff of x^a z^b

    Ratio coeff(std::size_t x_degree, std::size_t z_degree) const;
};

struct MonomialMismatch {
    std::size_t x_degree = 0;
    std::size_t z_degree = 0;
    Ratio lhs;
    Ratio rhs;
};

struct FunctionalEquationReport {
    bool ok = false;
    std::vector<MonomialMismatch> mismatches;
};

// Checks C_k(x,z) = z*exp((x^k/k!) * L_{t=1}((t^(k-1)/(k-1)!) C_k(t,z)))
// on every monomial with z-degree <= order. The left side is assembled from
// the root-degree slices of the closed-form sum; those slices are complete
// for every z-degree up to the truncation, so all compared monomials are
// fully determined (the Laplace step never needs coefficients beyond them).
FunctionalEquationReport verify_functional_equation(unsigned long k, std::size_t order);

}  // namespace hypercat
