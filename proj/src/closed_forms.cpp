#include "pattern_lab/closed_forms.hpp"

#include <functional>

namespace pattern_lab::closed_forms {

Rational falling_factorial(const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x - Rational(i);
    return r;
}

Rational binomial_rational(const Rational& x, int j) {
    if (j < 0) return 0;
    return falling_factorial(x, j) / Rational(factorial(j));
}

BigInt double_factorial(int m) {
    if (m < -1) throw domain_error("double_factorial: m < -1");
    BigInt r = 1;
    for (int v = m; v > 1; v -= 2) r *= v;
    return r;
}

Rational inv_double_factorial(int m) {
    if (m >= -1) return Rational(1) / Rational(double_factorial(m));
    if (m % 2 == 0) return 0;
    const int j = (-m - 1) / 2;  // m = -(2j+1)
    const BigInt v = double_factorial(2 * j - 1);
    return (j % 2 == 0) ? Rational(v) : Rational(BigInt(-v));
}

namespace {

void for_each_composition(int total, int parts, std::vector<int>& acc,
                          const std::function<void(const std::vector<int>&)>& f) {
    if (parts == 1) {
        acc.push_back(total);
        f(acc);
        acc.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        acc.push_back(first);
        for_each_composition(total - first, parts - 1, acc, f);
        acc.pop_back();
    }
}

}  // namespace

Rational e_sum(int n, int k, int r) {
    if (n < k) throw domain_error("e_sum: requires n >= k");
    if (r < 0 || r > k) throw domain_error("e_sum: requires 0 <= r <= k");
    BigInt total = 0;
    std::vector<int> ns, ks;
    for_each_composition(n - r, r + 1, ns, [&](const std::vector<int>& nparts) {
        for_each_composition(k - r, r + 1, ks, [&](const std::vector<int>& kparts) {
            BigInt prod = 1;
            for (int i = 0; i <= r && prod != 0; ++i) {
                const BigInt b = binomial(nparts[i], kparts[i]);
                prod *= b * b;
            }
            total += prod;
        });
    });
    return Rational(total) / falling_factorial(Rational(n), k);
}

namespace {

Rational pow2_signed(int e) {
    Rational p = 1;
    for (int i = 0; i < e; ++i) p *= 2;
    for (int i = 0; i > e; --i) p /= 2;
    return p;
}

}  // namespace

Rational e_closed(const Rational& n, int k, int r) {
    if (k < 0) throw domain_error("e_closed: k < 0");
    if (r > k) return 0;  // no k-subsequence contains more than k fixed points
    return pow2_signed(k - r) * inv_double_factorial(r - 1) * inv_double_factorial(2 * k - r) *
           binomial_rational(n - Rational(BigInt(r), BigInt(2)), k - r);
}

Rational e_product_form_r1(const Rational& n, int k) {
    if (k < 1) throw domain_error("e_product_form_r1: k < 1");
    Rational prod = 1;
    for (int i = 0; i < k - 1; ++i) prod *= 2;
    for (int t = 0; t < k - 1; ++t) prod *= Rational(2) * n - Rational(1 + 2 * t);
    return prod / Rational(factorial(2 * k - 1));
}

Rational e_prime_sum(int n, int k, int r) {
    if (n < k) throw domain_error("e_prime_sum: requires n >= k");
    if (r < 2) throw domain_error("e_prime_sum: requires r >= 2");
    Rational total = 0;
    for (int i = 0; i <= n - 1; ++i)
        for (int j = 0; j <= std::min(i, k - 1); ++j) {
            if (r - 2 > j) continue;
            const Rational pe = falling_factorial(Rational(i), j) * e_closed(Rational(i), j, r - 2);
            if (pe.is_zero()) continue;
            const BigInt b = binomial(2 * (n - i - 1), 2 * (k - j - 1));
            if (b == 0) continue;
            total += pe * Rational(b) / Rational(2);
        }
    return total / falling_factorial(Rational(n), k);
}

Rational e_prime_closed(const Rational& n, int k, int r) {
    if (k < 0) throw domain_error("e_prime_closed: k < 0");
    return pow2_signed(k - r) * inv_double_factorial(r - 1) * inv_double_factorial(2 * k - r) *
           binomial_rational(n - Rational(BigInt(r), BigInt(2)), k + 1 - r);
}

Rational inner_m1_choose_r(int k, int r, int n) {
    if (k < 1 || r < 0) throw domain_error("inner_m1_choose_r: bad arguments");
    if (n < k + r) throw domain_error("inner_m1_choose_r: requires n >= k + r");
    Rational total = 0;
    for (int j = 0; j <= r; ++j) {
        if (j > k) continue;  // no k-subsequence can contain more than k fixed points
        total += e_closed(Rational(n - r + j), k, j) / Rational(factorial(r - j));
    }
    return total;
}

Rational inner_m2(int k, int n) {
    if (k < 2) throw domain_error("inner_m2: requires k >= 2");
    if (n < k + 2) throw domain_error("inner_m2: requires n >= k + 2");
    const Rational rn(1, n);
    return Rational(1, 2) * e_closed(Rational(n - 2), k, 0) +
           Rational(1, k) * (Rational(1) - rn) * e_closed(Rational(n - 2), k - 1, 0) +
           rn * e_closed(Rational(n - 1), k, 1);
}

namespace {

using poly_lab::binomial_poly;
using poly_lab::RationalPolynomial;

// (2n-3)(2n-5)...(2n-2k+3) as a polynomial in n; empty product for k = 2.
RationalPolynomial tail_product_poly(int k) {
    RationalPolynomial p = RationalPolynomial::constant(1);
    for (int t = 0; t < k - 2; ++t)
        p = p * RationalPolynomial(std::vector<Rational>{Rational(-3 - 2 * t), Rational(2)});
    return p;
}

RationalPolynomial linear(const Rational& c0, const Rational& c1) {
    return RationalPolynomial(std::vector<Rational>{c0, c1});
}

}  // namespace

RationalPolynomial a_id_closed(const Partition& lambda, int k) {
    const auto& parts = lambda.parts();
    const Rational inv_kfact = Rational(1) / Rational(factorial(k));
    if (parts.empty()) {
        if (k < 1) throw domain_error("a_id_closed: requires k >= 1");
        return inv_kfact * binomial_poly(0, k);  // C(n,k)/k!
    }
    if (parts == std::vector<int>{1}) {
        if (k < 1) throw domain_error("a_id_closed: requires k >= 1");
        // 2^{k-1} (2n-1)(2n-3)...(2n-2k+3)/(2k-1)!  -  C(n-1,k-1)/k!
        RationalPolynomial prod = RationalPolynomial::constant(1);
        for (int t = 0; t < k - 1; ++t)
            prod = prod * linear(Rational(-1 - 2 * t), Rational(2));
        Rational pow2 = 1;
        for (int i = 0; i < k - 1; ++i) pow2 *= 2;
        return (pow2 / Rational(factorial(2 * k - 1))) * prod -
               inv_kfact * binomial_poly(1, k - 1);
    }
    const bool is_two = parts == std::vector<int>{2};
    const bool is_one_one = parts == std::vector<int>{1, 1};
    if (!is_two && !is_one_one)
        throw domain_error("a_id_closed: lambda must be one of (), (1), (2), (1,1)");
    if (k < 2) throw domain_error("a_id_closed: requires k >= 2 for |lambda| = 2");

    Rational pow2 = 1;
    for (int i = 0; i < k - 1; ++i) pow2 *= 2;
    const Rational inv_2k1fact = Rational(1) / Rational(factorial(2 * k - 1));
    const RationalPolynomial tail = tail_product_poly(k);

    // assemble n * a(n); the constant term must cancel (then divide by n)
    RationalPolynomial times_n;
    if (is_two) {
        times_n = (-inv_kfact) * binomial_poly(2, k - 1) +
                  Rational(1, 2) * (Rational(1) / Rational(factorial(k - 1))) *
                      (linear(0, 1) * binomial_poly(1, k - 2)) -
                  (pow2 * inv_2k1fact) * (linear(Rational(2 * k - 1), Rational(2 * k - 4)) * tail);
    } else {
        times_n = inv_kfact * (linear(0, 1) * binomial_poly(2, k - 2)) +
                  inv_kfact * binomial_poly(2, k - 1) +
                  Rational(1, 2) * (Rational(1) / Rational(factorial(k - 1))) *
                      (linear(0, 1) * binomial_poly(1, k - 2)) -
                  (pow2 * inv_2k1fact) * (linear(Rational(-(2 * k - 1)), Rational(2 * k)) * tail);
    }
    return times_n.divide_by_x();
}

Rational a_sigma_one(const Permutation& sigma, int n) {
    const int k = sigma.size();
    if (k < 1) throw domain_error("a_sigma_one: empty pattern");
    if (n < k) throw domain_error("a_sigma_one: requires n >= k");
    BigInt total = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j)
            total += binomial(i - 1, j - 1) * binomial(i - 1, sigma(j) - 1) *
                     binomial(n - i, k - j) * binomial(n - i, k - sigma(j));
    return Rational(total) / falling_factorial(Rational(n), k) -
           Rational(binomial(n - 1, k - 1)) / Rational(factorial(k));
}

namespace {

BigInt leading_sum(const Permutation& sigma) {
    const int k = sigma.size();
    BigInt total = 0;
    for (int j = 1; j <= k; ++j)
        total += binomial(j + sigma(j) - 2, j - 1) * binomial(2 * k - j - sigma(j), k - j);
    return total;
}

}  // namespace

Rational a_sigma_one_leading(const Permutation& sigma) {
    const int k = sigma.size();
    if (k < 1) throw domain_error("a_sigma_one_leading: empty pattern");
    return Rational(leading_sum(sigma)) / Rational(factorial(2 * k - 1)) -
           Rational(1, 1) / Rational(factorial(k) * factorial(k - 1));
}

PositivityResult positivity_test(const Permutation& sigma) {
    const int k = sigma.size();
    if (k < 1) throw domain_error("positivity_test: empty pattern");
    const BigInt sum = leading_sum(sigma);
    const BigInt threshold = binomial(2 * k - 1, k);
    return {sum >= threshold, sum - threshold};
}

CoeffTable genfun_coeffs(int power, int shift, int max_n, int max_k) {
    if (power < 1 || shift < 0) throw domain_error("genfun_coeffs: power >= 1, shift >= 0");
    if (max_n < 0 || max_k < 0 || max_n > 64 || max_k > 64)
        throw domain_error("genfun_coeffs: table size out of range [0,64]");
    const int N = max_n + 1, K = max_k + 1;
    std::vector<std::vector<BigInt>> f(N, std::vector<BigInt>(K, 0));
    for (int n = 0; n < N; ++n)
        for (int k = 0; k < K; ++k) {
            const BigInt b = binomial(n, k);
            f[n][k] = b * b;
        }
    std::vector<std::vector<BigInt>> acc = f;
    for (int p = 1; p < power; ++p) {
        std::vector<std::vector<BigInt>> next(N, std::vector<BigInt>(K, 0));
        for (int n = 0; n < N; ++n)
            for (int k = 0; k < K; ++k) {
                if (acc[n][k] == 0) continue;
                for (int n2 = 0; n2 + n < N; ++n2)
                    for (int k2 = 0; k2 + k < K; ++k2) {
                        if (f[n2][k2] == 0) continue;
                        next[n + n2][k + k2] += acc[n][k] * f[n2][k2];
                    }
            }
        acc = std::move(next);
    }
    CoeffTable out;
    out.max_n = max_n;
    out.max_k = max_k;
    out.c.assign(N, std::vector<BigInt>(K, 0));
    for (int n = 0; n < N; ++n)
        for (int k = 0; k < K; ++k)
            if (n >= shift && k >= shift) out.c[n][k] = acc[n - shift][k - shift];
    return out;
}

Report check_identities(int max_n) {
    if (max_n < 0 || max_n > 32) throw domain_error("check_identities: max_n out of range [0,32]");
    Report rep;
    const auto triple = [](int n, int k, int r) {
        return "(n,k,r)=(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) +
               ")";
    };
    {
        const auto f2 = genfun_coeffs(2, 1, max_n, max_n);
        const auto g = g_table(max_n, max_n);
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= max_n && ok; ++n)
            for (int k = 0; k <= max_n; ++k)
                if (f2.c[n][k] != g.c[n][k]) {
                    ok = false;
                    detail = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
                    break;
                }
        rep.check("x^2 y^2 F^2 == G coefficientwise for n,k <= " + std::to_string(max_n), ok,
                  detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= max_n && ok; ++n)
            for (int k = 1; k <= n && ok; ++k)
                for (int r = 0; r <= k; ++r) {
                    const Rational lhs = Rational(n) * e_closed(Rational(n), k, r);
                    const Rational rhs = e_closed(Rational(n - 1), k - 1, r) +
                                         Rational(n - k) * e_closed(Rational(n - 1), k, r) +
                                         Rational(2) * e_prime_closed(Rational(n - 1), k - 1, r);
                    if (lhs != rhs) {
                        ok = false;
                        detail = triple(n, k, r);
                        break;
                    }
                }
        rep.check("recurrence n E(n,k,r) == E(n-1,k-1,r) + (n-k) E(n-1,k,r) + 2 E'(n-1,k-1,r) "
                  "for n <= " +
                      std::to_string(max_n) + ", 0 <= r <= k",
                  ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= max_n && ok; ++n)
            for (int k = 1; k <= n && ok; ++k)
                for (int r = 0; r <= k; ++r) {
                    const Rational lhs = Rational(n) * e_prime_closed(Rational(n), k, r);
                    const Rational rhs =
                        Rational(1, 2) * e_closed(Rational(n - 1), k - 1, r - 2) +
                        e_prime_closed(Rational(n - 1), k - 1, r) +
                        Rational(n - k) * e_prime_closed(Rational(n - 1), k, r) +
                        Rational(2) * Rational(n - k) * e_closed(Rational(n - 1), k, r);
                    if (lhs != rhs) {
                        ok = false;
                        detail = triple(n, k, r);
                        break;
                    }
                }
        rep.check("recurrence n E'(n,k,r) == (1/2) E(n-1,k-1,r-2) + E'(n-1,k-1,r) + "
                  "(n-k) E'(n-1,k,r) + 2(n-k) E(n-1,k,r) for n <= " +
                      std::to_string(max_n) + ", 0 <= r <= k (extended double-factorial base)",
                  ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= max_n && ok; ++n)
            for (int k = 1; k <= n && ok; ++k)
                for (int r = 2; r <= k; ++r)
                    if (e_prime_sum(n, k, r) != e_prime_closed(Rational(n), k, r)) {
                        ok = false;
                        detail = triple(n, k, r);
                        break;
                    }
        rep.check("e_prime definitional sum == closed form for n <= " + std::to_string(max_n) +
                      ", 2 <= r <= k",
                  ok, detail);
    }
    return rep;
}

CoeffTable g_table(int max_n, int max_k) {
    if (max_n < 0 || max_k < 0 || max_n > 64 || max_k > 64)
        throw domain_error("g_table: table size out of range [0,64]");
    CoeffTable out;
    out.max_n = max_n;
    out.max_k = max_k;
    out.c.assign(max_n + 1, std::vector<BigInt>(max_k + 1, 0));
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= max_k; ++k) {
            if (2 * k - 1 < 0) continue;
            const BigInt b = binomial(2 * n, 2 * k - 1);
            if (b % 2 != 0) throw consistency_error("g_table: odd C(2n,2k-1)");
            out.c[n][k] = b / 2;
        }
    return out;
}

}  // namespace pattern_lab::closed_forms
