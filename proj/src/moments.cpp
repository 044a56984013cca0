#include "pattern_lab/moments.hpp"

#include <limits>
#include <thread>

namespace pattern_lab::moments {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

struct ClassIndex {
    std::vector<CycleType> types;
    std::map<std::vector<int>, int> index;
};

ClassIndex make_class_index(int n) {
    ClassIndex ci;
    ci.types = sym_char::partitions_of(n);
    for (std::size_t i = 0; i < ci.types.size(); ++i)
        ci.index.emplace(ci.types[i].parts(), static_cast<int>(i));
    return ci;
}

int class_of_word(const std::vector<int>& w, const ClassIndex& ci,
                  std::vector<char>& seen, std::vector<int>& parts) {
    const int n = static_cast<int>(w.size());
    std::fill(seen.begin(), seen.end(), 0);
    parts.clear();
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = w[j] - 1;
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return ci.index.at(parts);
}

void check_cap(int n, const EnumerationOptions& opts, const char* who) {
    if (n < 0) throw domain_error(std::string(who) + ": n < 0");
    if (n > opts.cap)
        throw resource_error(std::string(who) + ": enumeration of S_" + std::to_string(n) +
                             " exceeds cap " + std::to_string(opts.cap));
}

// Runs fn(shard) for every shard id; shards are independent and results must
// be merged by the caller in shard order.
void run_sharded(int n, int threads, const std::function<void(int)>& fn) {
    const int shards = perm_core::shard_count(n);
    const int workers = std::max(1, std::min(threads, shards));
    if (workers == 1) {
        for (int s = 1; s <= shards; ++s) fn(s);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int s = 1 + w; s <= shards; s += workers) fn(s);
        });
    for (auto& t : pool) t.join();
}

BigInt i128_to_bigint(i128 v) {
    const bool neg = v < 0;
    u128 a = neg ? u128(-v) : u128(v);
    BigInt r = static_cast<std::uint64_t>(a >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(a);
    return neg ? -r : r;
}

}  // namespace

ClassSums class_product_sums(const std::vector<Permutation>& patterns, int n,
                             const EnumerationOptions& opts) {
    check_cap(n, opts, "class_product_sums");
    const ClassIndex ci = make_class_index(n);
    const int num_classes = static_cast<int>(ci.types.size());
    const int shards = perm_core::shard_count(n);

    // Identity patterns go through the increasing-subsequence DP.
    std::vector<int> identity_ks;
    std::vector<Permutation> general;
    for (const auto& s : patterns) {
        if (s.size() == 0) continue;  // N_{empty} = 1
        if (s.is_identity())
            identity_ks.push_back(s.size());
        else
            general.push_back(s);
    }

    BigInt product_bound = 1;
    for (const auto& s : patterns) product_bound *= binomial(n, s.size());
    const bool fast = product_bound <= BigInt(std::numeric_limits<std::uint64_t>::max());

    std::vector<std::vector<i128>> shard_sums;
    std::vector<std::vector<BigInt>> shard_big_sums(shards, std::vector<BigInt>(num_classes, 0));
    std::vector<std::vector<std::int64_t>> shard_counts(
        shards, std::vector<std::int64_t>(num_classes, 0));
    if (fast) shard_sums.assign(shards, std::vector<i128>(num_classes, 0));

    run_sharded(n, opts.threads, [&](int shard) {
        std::vector<char> seen(n, 0);
        std::vector<int> parts;
        parts.reserve(n);
        auto& counts = shard_counts[shard - 1];
        auto visit = [&](const std::vector<int>& w, auto&& accumulate) {
            const int c = class_of_word(w, ci, seen, parts);
            ++counts[c];
            accumulate(c, w);
        };
        if (fast) {
            auto& sums = shard_sums[shard - 1];
            perm_core::for_each_permutation_in_shard(n, shard, [&](const std::vector<int>& w) {
                visit(w, [&](int c, const std::vector<int>& word) {
                    std::uint64_t prod = 1;
                    for (int k : identity_ks) prod *= perm_core::count_increasing(k, word);
                    for (const auto& s : general) prod *= perm_core::count_occurrences(s, word);
                    sums[c] += static_cast<i128>(prod);
                });
            });
        } else {
            auto& sums = shard_big_sums[shard - 1];
            perm_core::for_each_permutation_in_shard(n, shard, [&](const std::vector<int>& w) {
                visit(w, [&](int c, const std::vector<int>& word) {
                    BigInt prod = 1;
                    for (int k : identity_ks) prod *= perm_core::count_increasing(k, word);
                    for (const auto& s : general) prod *= perm_core::count_occurrences(s, word);
                    sums[c] += prod;
                });
            });
        }
    });

    ClassSums out;
    out.n = n;
    out.cycle_types = ci.types;
    out.sums.assign(num_classes, 0);
    out.counts.assign(num_classes, 0);
    for (int s = 0; s < shards; ++s)
        for (int c = 0; c < num_classes; ++c) {
            out.counts[c] += shard_counts[s][c];
            if (fast)
                out.sums[c] += i128_to_bigint(shard_sums[s][c]);
            else
                out.sums[c] += shard_big_sums[s][c];
        }
    return out;
}

ClassFunction moment_class_function(const std::vector<Permutation>& patterns, int n,
                                    const EnumerationOptions& opts) {
    const ClassSums cs = class_product_sums(patterns, n, opts);
    ClassFunction f;
    f.n = n;
    for (std::size_t c = 0; c < cs.cycle_types.size(); ++c)
        f.values.emplace(cs.cycle_types[c], Rational(cs.sums[c], cs.counts[c]));
    return f;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n) throw domain_error("inner_product: class functions on different n");
    Rational total = 0;
    for (const auto& [ct, fv] : f.values)
        total += Rational(perm_core::class_size(ct)) * fv * g.at(ct);
    return total / Rational(factorial(f.n));
}

Rational coefficient_alpha(const std::vector<Permutation>& patterns,
                           const Partition& lambda, int n,
                           const EnumerationOptions& opts) {
    const Partition padded = sym_char::pad(lambda, n);
    const ClassSums cs = class_product_sums(patterns, n, opts);
    Rational total = 0;
    for (std::size_t c = 0; c < cs.cycle_types.size(); ++c) {
        if (cs.sums[c] == 0) continue;
        total += Rational(sym_char::mn_character(padded, cs.cycle_types[c]) * cs.sums[c]);
    }
    return total / Rational(factorial(n));
}

Rational coefficient_alpha_via_class_function(const std::vector<Permutation>& patterns,
                                              const Partition& lambda, int n,
                                              const EnumerationOptions& opts) {
    const Partition padded = sym_char::pad(lambda, n);
    return inner_product(character_class_function(padded, n),
                         moment_class_function(patterns, n, opts));
}

ClassFunction character_class_function(const Partition& lambda_of_n, int n) {
    if (lambda_of_n.sum() != n)
        throw domain_error("character_class_function: lambda must be a partition of n");
    ClassFunction f;
    f.n = n;
    for (const auto& ct : sym_char::partitions_of(n))
        f.values.emplace(ct, Rational(sym_char::mn_character(lambda_of_n, ct)));
    return f;
}

ClassFunction class_function_from(int n, const std::function<Rational(const CycleType&)>& fn) {
    ClassFunction f;
    f.n = n;
    for (const auto& ct : sym_char::partitions_of(n)) f.values.emplace(ct, fn(ct));
    return f;
}

Rational PatternCountTable::alpha(std::uint64_t sigma_rank, const Partition& lambda) const {
    const Partition padded = sym_char::pad(lambda, n);
    Rational total = 0;
    for (std::size_t c = 0; c < cycle_types.size(); ++c) {
        const BigInt& s = sums[c][sigma_rank];
        if (s == 0) continue;
        total += Rational(sym_char::mn_character(padded, cycle_types[c]) * s);
    }
    return total / Rational(factorial(n));
}

PatternCountTable pattern_count_table(int n, int k, const EnumerationOptions& opts) {
    check_cap(n, opts, "pattern_count_table");
    if (k < 1 || k > 8) throw domain_error("pattern_count_table: k out of range [1,8]");
    const ClassIndex ci = make_class_index(n);
    const int num_classes = static_cast<int>(ci.types.size());
    const int shards = perm_core::shard_count(n);
    const std::size_t kfact = static_cast<std::size_t>(factorial(k).convert_to<std::uint64_t>());

    std::vector<std::vector<std::uint64_t>> shard_sums(
        shards, std::vector<std::uint64_t>(num_classes * kfact, 0));
    std::vector<std::vector<std::int64_t>> shard_counts(
        shards, std::vector<std::int64_t>(num_classes, 0));

    std::vector<std::uint64_t> fact(k, 1);
    for (int i = 1; i < k; ++i) fact[i] = fact[i - 1] * i;

    run_sharded(n, opts.threads, [&](int shard) {
        std::vector<char> seen(n, 0);
        std::vector<int> parts;
        parts.reserve(n);
        std::vector<int> idx(k);
        std::vector<int> vals(k);
        auto& sums = shard_sums[shard - 1];
        perm_core::for_each_permutation_in_shard(n, shard, [&](const std::vector<int>& w) {
            const int c = class_of_word(w, ci, seen, parts);
            ++shard_counts[shard - 1][c];
            if (k > n) return;
            std::uint64_t* row = sums.data() + static_cast<std::size_t>(c) * kfact;
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                // Lehmer rank of the value pattern on the chosen positions
                for (int t = 0; t < k; ++t) vals[t] = w[idx[t]];
                std::uint64_t rank = 0;
                for (int t = 0; t < k; ++t) {
                    int smaller = 0;
                    for (int j = t + 1; j < k; ++j) smaller += (vals[j] < vals[t]);
                    rank += smaller * fact[k - 1 - t];
                }
                ++row[rank];
                int i = k - 1;
                while (i >= 0 && idx[i] == n - k + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        });
    });

    PatternCountTable out;
    out.n = n;
    out.k = k;
    out.cycle_types = ci.types;
    out.counts.assign(num_classes, 0);
    out.sums.assign(num_classes, std::vector<BigInt>(kfact, 0));
    for (int s = 0; s < shards; ++s)
        for (int c = 0; c < num_classes; ++c) {
            out.counts[c] += shard_counts[s][c];
            for (std::size_t r = 0; r < kfact; ++r)
                out.sums[c][r] += shard_sums[s][static_cast<std::size_t>(c) * kfact + r];
        }
    return out;
}

}  // namespace pattern_lab::moments
