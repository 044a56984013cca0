#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pattern_lab/rational.hpp"

namespace pattern_lab::poly_lab {

/// Univariate polynomial over the rationals. Coefficients ascending by
/// degree, trailing zeros trimmed; the zero polynomial is the empty list.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }
    static RationalPolynomial constant(const Rational& c) {
        return RationalPolynomial(std::vector<Rational>{c});
    }
    /// c * x^d
    static RationalPolynomial monomial(const Rational& c, int d) {
        std::vector<Rational> v(d + 1, Rational(0));
        v[d] = c;
        return RationalPolynomial(std::move(v));
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(int d) const {
        return (d < 0 || d >= static_cast<int>(coeffs_.size())) ? Rational(0) : coeffs_[d];
    }
    Rational leading_coefficient() const {
        if (is_zero()) throw domain_error("leading_coefficient: zero polynomial");
        return coeffs_.back();
    }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RationalPolynomial derivative() const;

    /// Exact division by x; throws consistency_error when the constant term
    /// is nonzero (used to clear 1/n factors that must cancel).
    RationalPolynomial divide_by_x() const;

    /// Content-free integer form: coefficients scaled by the positive
    /// rational that makes them coprime integers (leading sign preserved).
    std::vector<BigInt> primitive_integer_coefficients() const;

    std::string to_string(const std::string& var = "n") const;

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p);
    RationalPolynomial operator-() const;
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

/// quotient/remainder of exact polynomial division.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);

/// Monic gcd (1 for coprime inputs; 0 only if both are 0).
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// p / gcd(p, p'): same distinct roots, all simple.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

/// Yun decomposition: p = lc * prod_i f_i^i with the f_i squarefree and
/// pairwise coprime; returns f_1, f_2, ... (possibly constant 1 entries).
std::vector<RationalPolynomial> squarefree_decomposition(const RationalPolynomial& p);

/// Unique interpolating polynomial through distinct nodes (exact Lagrange).
RationalPolynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// Falling-factorial product (x - a)(x - a - 1)...(x - a - (j-1)) / j!,
/// i.e. binomial C(x - a, j) as a polynomial in x.
RationalPolynomial binomial_poly(const Rational& a, int j);

}  // namespace pattern_lab::poly_lab
