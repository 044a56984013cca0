#pragma once

#include <utility>
#include <vector>

#include "pattern_lab/polynomial.hpp"

namespace pattern_lab::poly_lab {

/// Exact real-root analysis of a rational polynomial.
/// Isolating intervals are pairwise disjoint and each contains exactly one
/// distinct real root; an exactly-known root r appears as the degenerate
/// interval [r, r]. Widths are refined to at most 1/1024.
struct RootReport {
    std::vector<std::pair<Rational, Rational>> isolating_intervals;
    std::vector<Rational> exact_rational_roots;
    bool is_real_rooted = false;
    /// Upper bound for the largest real root (hi of the rightmost interval);
    /// meaningful only when there is at least one real root.
    Rational max_root_upper_bound = 0;
    bool all_roots_below_bound = false;
    int distinct_real_roots = 0;
    int real_roots_with_multiplicity = 0;
};

/// Exact count of distinct real roots of p in the open interval (lo, hi) via
/// a Sturm sequence of the squarefree part. Endpoints must not be roots.
int sturm_root_count(const RationalPolynomial& p, const Rational& lo, const Rational& hi);

/// Count of all distinct real roots (whole line).
int count_real_roots(const RationalPolynomial& p);

/// Cauchy bound: every real root lies strictly inside (-B, B).
Rational cauchy_root_bound(const RationalPolynomial& p);

RootReport analyze_roots(const RationalPolynomial& p, const Rational& bound);

}  // namespace pattern_lab::poly_lab
