#pragma once

#include "pattern_lab/moments.hpp"
#include "pattern_lab/report.hpp"

namespace pattern_lab::poly_lab {

/// Conjecture battery over pattern sizes k <= k_max:
///  (a) interpolated a_sigma^{(j)} vanishes at n = -1 for one-row lambda=(j),
///      every sigma in S_k (reported per (k, j); failures are entries, never
///      exceptions);
///  (b) the constant a_{id_k}^{(k)} is identically zero;
///  (c) the |lambda| <= 2 closed forms are real-rooted with all roots < k and
///      nonnegative at integers n in [k, k+20] (closed forms only, k <= 8);
///  (d) exploratory report: the set of sigma with nonnegative leading
///      coefficient and whether it is downward closed in the right weak
///      order.
/// Brute-force legs that would exceed opts.cap are skipped with a report
/// entry.
Report conjecture_suite(int k_max, const moments::EnumerationOptions& opts = {});

}  // namespace pattern_lab::poly_lab
