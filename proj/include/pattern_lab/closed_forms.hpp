#pragma once

#include <vector>

#include "pattern_lab/perm_core.hpp"
#include "pattern_lab/polynomial.hpp"
#include "pattern_lab/rational.hpp"
#include "pattern_lab/report.hpp"

namespace pattern_lab::closed_forms {

using perm_core::Permutation;
using poly_lab::RationalPolynomial;

/// P(x, k) = x (x-1) ... (x-k+1); empty product for k = 0.
Rational falling_factorial(const Rational& x, int k);

/// C(x, j) = P(x, j)/j! for arbitrary rational x (half-integer binomial);
/// 0 for j < 0.
Rational binomial_rational(const Rational& x, int j);

/// m!! for m >= -1, with (-1)!! = 0!! = 1.
BigInt double_factorial(int m);

/// 1/m!! extended to negative m: zero for negative even m, and
/// 1/(-(2j+1))!! = (-1)^j (2j-1)!! for negative odd m.
Rational inv_double_factorial(int m);

/// E(n,k,r): expected number over S_n of pairs (R, T) with R a set of r
/// fixed points contained in an increasing subsequence T of length k.
/// Definitional double sum over compositions; requires n >= k.
Rational e_sum(int n, int k, int r);

/// Closed form 2^{k-r} / ((r-1)!! (2k-r)!!) * C(n - r/2, k - r). Defined for
/// any rational n and any integer r <= k (negative r uses the extended
/// double-factorial conventions; needed by the recurrence base cases).
Rational e_closed(const Rational& n, int k, int r);

/// The r = 1 product form 2^{k-1} (2n-1)(2n-3)...(2n-2k+3) / (2k-1)!.
Rational e_product_form_r1(const Rational& n, int k);

/// E'(n,k,r) as the generating-function convolution
/// (1/P(n,k)) sum_{i,j>=0} P(i,j) E(i,j,r-2) * (1/2) C(2(n-i-1), 2(k-j-1)),
/// for r >= 2 and n >= k.
Rational e_prime_sum(int n, int k, int r);

/// Closed form 2^{k-r} / ((r-1)!! (2k-r)!!) * C(n - r/2, k + 1 - r).
Rational e_prime_closed(const Rational& n, int k, int r);

/// <C(m_1, r), M_{id_k,n}> = sum_{j=0}^r E(n-r+j, k, j) / (r-j)!.
Rational inner_m1_choose_r(int k, int r, int n);

/// <m_2, M_{id_k,n}> = (1/2)E(n-2,k,0) + (1/k)(1-1/n)E(n-2,k-1,0)
///                     + (1/n)E(n-1,k,1).
Rational inner_m2(int k, int n);

/// The four closed-form polynomials a_{id_k}^lambda(n) for lambda in
/// { (), (1), (2), (1,1) }. The (2) and (1,1) cases carry 1/n factors whose
/// constant terms must cancel; the assembly multiplies through by n and
/// throws consistency_error if the division by n is not exact.
RationalPolynomial a_id_closed(const Partition& lambda, int k);

/// a_sigma^{(1)}(n) evaluated at an integer n >= k:
/// (1/P(n,k)) sum_{i=1}^n sum_{j=1}^k C(i-1,j-1) C(i-1,sigma(j)-1)
///     C(n-i,k-j) C(n-i,k-sigma(j))  -  (1/k!) C(n-1,k-1).
Rational a_sigma_one(const Permutation& sigma, int n);

/// Leading coefficient of a_sigma^{(1)}:
/// (1/(2k-1)!) sum_j C(j+sigma(j)-2, j-1) C(2k-j-sigma(j), k-j) - 1/(k!(k-1)!).
Rational a_sigma_one_leading(const Permutation& sigma);

/// Sign test for the leading coefficient: positive iff
/// sum_j C(j+sigma(j)-2, j-1) C(2k-j-sigma(j), k-j) >= C(2k-1, k);
/// margin is the integer difference of the two sides.
struct PositivityResult {
    bool positive = false;
    BigInt margin = 0;
};
PositivityResult positivity_test(const Permutation& sigma);

/// Coefficient table c[n][k] of x^{2n} y^{2k} in (xy)^{2 shift} F^power,
/// where F = sum C(n,k)^2 x^{2n} y^{2k}. When power == shift+1 the entry
/// (n,k) equals P(n,k) E(n,k,shift).
struct CoeffTable {
    int max_n = 0;
    int max_k = 0;
    std::vector<std::vector<BigInt>> c;
};
CoeffTable genfun_coeffs(int power, int shift, int max_n, int max_k);

/// Table of G = (1/2) sum C(2n, 2k-1) x^{2n} y^{2k} (entries are integers).
CoeffTable g_table(int max_n, int max_k);

/// Exact identity battery over n <= max_n (max 32), k <= n, 0 <= r <= k, in
/// this order:
///   [0] x^2 y^2 F^2 == G coefficientwise,
///   [1] n E(n,k,r) == E(n-1,k-1,r) + (n-k) E(n-1,k,r) + 2 E'(n-1,k-1,r),
///   [2] n E'(n,k,r) == (1/2) E(n-1,k-1,r-2) + E'(n-1,k-1,r)
///                      + (n-k) E'(n-1,k,r) + 2(n-k) E(n-1,k,r),
///   [3] E' definitional sum == closed form (r >= 2).
/// The r < 2 legs of [1]/[2] use the extended double-factorial conventions.
/// Each entry reports the first counterexample on failure.
Report check_identities(int max_n);

}  // namespace pattern_lab::closed_forms
