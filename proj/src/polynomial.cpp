#include "pattern_lab/polynomial.hpp"

namespace pattern_lab::poly_lab {

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a + (-b);
}

RationalPolynomial RationalPolynomial::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
    std::vector<Rational> c(p.coeffs_.size());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] = s * p.coeffs_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Rational(int(i)) * coeffs_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::divide_by_x() const {
    if (is_zero()) return {};
    if (!coeffs_.front().is_zero())
        throw consistency_error("divide_by_x: nonzero constant term " + coeffs_.front().to_string());
    return RationalPolynomial(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

std::vector<BigInt> RationalPolynomial::primitive_integer_coefficients() const {
    if (is_zero()) return {};
    BigInt lcm_den = 1;
    for (const auto& c : coeffs_)
        lcm_den = boost::multiprecision::lcm(lcm_den, c.denominator());
    std::vector<BigInt> ints;
    ints.reserve(coeffs_.size());
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        BigInt v = c.numerator() * (lcm_den / c.denominator());
        g = boost::multiprecision::gcd(g, v);
        ints.push_back(std::move(v));
    }
    for (auto& v : ints) v /= g;
    return ints;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[d];
        if (c.is_zero()) continue;
        if (!s.empty()) s += c.is_negative() ? " - " : " + ";
        else if (c.is_negative()) s += "-";
        const Rational a = c.is_negative() ? -c : c;
        const bool unit = (a == Rational(1)) && d > 0;
        if (!unit) s += a.to_short_string();
        if (d > 0) {
            if (!unit) s += "*";
            s += var;
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
    if (b.is_zero()) throw domain_error("divmod: division by zero polynomial");
    std::vector<Rational> rem(a.coefficients());
    const int db = b.degree();
    const Rational lead = b.leading_coefficient();
    if (a.degree() < db) return {RationalPolynomial{}, a};
    std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
    for (int d = a.degree(); d >= db; --d) {
        const Rational c = rem[d];
        if (c.is_zero()) continue;
        const Rational q = c / lead;
        quot[d - db] = q;
        for (int i = 0; i <= db; ++i) rem[d - db + i] -= q * b.coefficient(i);
    }
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return (Rational(1) / x.leading_coefficient()) * x;
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
    if (p.is_zero()) throw domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return RationalPolynomial::constant(1);
    return divmod(p, gcd(p, p.derivative())).first;
}

std::vector<RationalPolynomial> squarefree_decomposition(const RationalPolynomial& p) {
    if (p.is_zero()) throw domain_error("squarefree_decomposition: zero polynomial");
    std::vector<RationalPolynomial> out;
    if (p.degree() == 0) return out;
    RationalPolynomial g = gcd(p, p.derivative());
    RationalPolynomial w = divmod(p, g).first;       // product of distinct factors
    while (g.degree() > 0) {
        RationalPolynomial y = gcd(w, g);
        out.push_back(divmod(w, y).first);
        w = y;
        g = divmod(g, y).first;
    }
    out.push_back(w);
    return out;
}

RationalPolynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    RationalPolynomial acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPolynomial basis = RationalPolynomial::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RationalPolynomial(
                                std::vector<Rational>{-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        acc = acc + (points[i].second / denom) * basis;
    }
    return acc;
}

RationalPolynomial binomial_poly(const Rational& a, int j) {
    if (j < 0) return {};
    RationalPolynomial p = RationalPolynomial::constant(1);
    for (int t = 0; t < j; ++t)
        p = p * RationalPolynomial(std::vector<Rational>{-(a + Rational(t)), Rational(1)});
    return (Rational(1) / Rational(factorial(j))) * p;
}

}  // namespace pattern_lab::poly_lab
