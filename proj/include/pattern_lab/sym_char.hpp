#pragma once

#include <map>
#include <vector>

#include "pattern_lab/partition.hpp"
#include "pattern_lab/rational.hpp"

namespace pattern_lab::sym_char {

using CycleType = Partition;

/// All partitions of n in reverse-lexicographic order ((n) first, 1^n last).
std::vector<Partition> partitions_of(int n);

/// lambda[n] = (n - |lambda|, lambda_1, ...). Throws when n - |lambda| < lambda_1.
Partition pad(const Partition& lambda, int n);

/// Irreducible character chi^lambda at cycle type rho, by the border-strip
/// recursion (sign (-1)^height per strip). Memoized; exact.
BigInt mn_character(const Partition& lambda, const Partition& rho);

/// Polynomial in the cycle-count variables m_1, m_2, ...: a sparse sum of
/// terms F * C(m_1, r_1) C(m_2, r_2) ..., keyed by the exponent vector
/// (r_1, ..., r_j) with trailing zeros trimmed. m_i carries weight i.
class CycleCountPolynomial {
public:
    using ExponentVector = std::vector<int>;

    std::map<ExponentVector, Rational> terms;

    bool is_zero() const { return terms.empty(); }

    /// Max over terms of sum_i i * r_i (-1 for the zero polynomial).
    int weighted_degree() const {
        int best = -1;
        for (const auto& [rv, c] : terms) {
            int d = 0;
            for (std::size_t i = 0; i < rv.size(); ++i) d += static_cast<int>(i + 1) * rv[i];
            best = std::max(best, d);
        }
        return best;
    }

    /// Substitutes m_i taken from the cycle type.
    Rational evaluate(const CycleType& ct) const;
};

/// Character polynomial of lambda: chi^{lambda[n]} as a polynomial in the
/// m_i, valid once n is large enough. Coefficients are
/// F = (-1)^{|lambda|-|rho|} * sum over mu of chi^mu_rho, mu ranging over
/// partitions of |rho| with lambda/mu a vertical strip.
CycleCountPolynomial char_poly(const Partition& lambda);

Rational eval_char_poly(const CycleCountPolynomial& cp, const CycleType& ct);

}  // namespace pattern_lab::sym_char
