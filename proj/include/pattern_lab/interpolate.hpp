#pragma once

#include <vector>

#include "pattern_lab/moments.hpp"
#include "pattern_lab/polynomial.hpp"

namespace pattern_lab::poly_lab {

using moments::EnumerationOptions;
using perm_core::Permutation;

/// The polynomial the coefficients alpha^lambda eventually agree with, by
/// exact Lagrange interpolation through the consecutive integer nodes
/// n0, ..., n0+D with n0 = sum k_i + |lambda| and D = sum k_i - |lambda|,
/// plus one extra brute-force node at n0+D+1 that must agree with the
/// interpolant (throws consistency_error "polynomiality violation" if not).
RationalPolynomial interpolate_a(const std::vector<Permutation>& patterns,
                                 const Partition& lambda,
                                 const EnumerationOptions& opts = {});

/// Interpolation thresholds for a pattern list.
struct InterpolationWindow {
    int n0 = 0;      // first node
    int degree = 0;  // D = sum k_i - |lambda|
};
InterpolationWindow interpolation_window(const std::vector<Permutation>& patterns,
                                         const Partition& lambda);

}  // namespace pattern_lab::poly_lab
