#pragma once

#include <functional>
#include <map>
#include <vector>

#include "pattern_lab/partition.hpp"
#include "pattern_lab/perm_core.hpp"
#include "pattern_lab/rational.hpp"
#include "pattern_lab/sym_char.hpp"

namespace pattern_lab::moments {

using perm_core::CycleType;
using perm_core::Permutation;

/// Class function on S_n: one exact value per cycle type of n.
struct ClassFunction {
    int n = 0;
    std::map<CycleType, Rational> values;

    const Rational& at(const CycleType& ct) const {
        auto it = values.find(ct);
        if (it == values.end()) throw domain_error("ClassFunction: unknown cycle type");
        return it->second;
    }
};

struct EnumerationOptions {
    int cap = perm_core::kDefaultEnumerationCap;
    int threads = 1;
};

/// Per-class integer sums from one full enumeration of S_n:
/// sums[c] = sum over pi in class c of prod_i N_{sigma_i}(pi), and the
/// enumerated class sizes. Classes follow partitions_of(n) order.
struct ClassSums {
    int n = 0;
    std::vector<CycleType> cycle_types;
    std::vector<BigInt> sums;
    std::vector<BigInt> counts;
};

ClassSums class_product_sums(const std::vector<Permutation>& patterns, int n,
                             const EnumerationOptions& opts = {});

/// M_{sigma_1,...,sigma_d,n}: class-wise average of prod_i N_{sigma_i}.
ClassFunction moment_class_function(const std::vector<Permutation>& patterns, int n,
                                    const EnumerationOptions& opts = {});

/// <f, g> = (1/n!) sum_C |C| f(C) g(C); all values real.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// alpha^lambda = <chi^{lambda[n]}, M>: single enumeration pass accumulating
/// per-class integer sums, then one exact division by n!.
Rational coefficient_alpha(const std::vector<Permutation>& patterns,
                           const Partition& lambda, int n,
                           const EnumerationOptions& opts = {});

/// Same quantity computed through the ClassFunction + inner_product route;
/// kept as an independent bookkeeping path for cross-checks.
Rational coefficient_alpha_via_class_function(const std::vector<Permutation>& patterns,
                                              const Partition& lambda, int n,
                                              const EnumerationOptions& opts = {});

/// Table of chi^lambda values (lambda a partition of n) as a ClassFunction.
ClassFunction character_class_function(const Partition& lambda_of_n, int n);

/// Class function defined by an arbitrary cycle-type statistic.
ClassFunction class_function_from(int n, const std::function<Rational(const CycleType&)>& fn);

/// Batched single-pass table for one pattern size k: per class, the sums of
/// N_sigma over every sigma in S_k (indexed by lexicographic rank).
struct PatternCountTable {
    int n = 0;
    int k = 0;
    std::vector<CycleType> cycle_types;
    std::vector<BigInt> counts;
    std::vector<std::vector<BigInt>> sums;  // [class][sigma rank]

    /// alpha^lambda for the sigma of the given rank, lambda padded to n.
    Rational alpha(std::uint64_t sigma_rank, const Partition& lambda) const;
};

PatternCountTable pattern_count_table(int n, int k, const EnumerationOptions& opts = {});

}  // namespace pattern_lab::moments
