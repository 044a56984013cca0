#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "pattern_lab/errors.hpp"
#include "pattern_lab/partition.hpp"
#include "pattern_lab/rational.hpp"

namespace pattern_lab::perm_core {

/// Permutation in one-line notation, 1-indexed values on {1,...,n}.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        std::vector<bool> seen(word_.size(), false);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
                throw domain_error("Permutation: word is not a bijection on {1..n}");
            seen[v - 1] = true;
        }
    }
    static Permutation identity(int n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(word_.size()); }
    /// Value at 1-indexed position i.
    int operator()(int i) const { return word_[i - 1]; }
    const std::vector<int>& word() const { return word_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (word_[i] != i + 1) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> w(word_.size());
        for (int i = 0; i < size(); ++i) w[word_[i] - 1] = i + 1;
        return Permutation(std::move(w));
    }

    /// (this o other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const {
        if (size() != other.size()) throw domain_error("compose: size mismatch");
        std::vector<int> w(word_.size());
        for (int i = 0; i < size(); ++i) w[i] = word_[other.word_[i] - 1];
        return Permutation(std::move(w));
    }

    /// One-line word; digits for n <= 9, comma-separated otherwise.
    std::string to_string() const {
        if (word_.empty()) return "()";
        std::string s;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (word_.size() > 9 && i) s += ",";
            s += std::to_string(word_[i]);
        }
        return s;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

private:
    std::vector<int> word_;
};

using CycleType = Partition;

inline constexpr int kDefaultEnumerationCap = 10;

/// Multiset of cycle lengths of pi, as a partition of n.
CycleType cycle_type(const Permutation& pi);

/// |C| = n! / prod_i (i^{m_i} m_i!).
BigInt class_size(const CycleType& ct);

/// Number of disjoint lexicographic sub-streams (one per first element).
inline int shard_count(int n) { return n <= 1 ? 1 : n; }

namespace detail {
template <class F>
void visit_lex_from(std::vector<int>& word, F&& f) {
    const int first = word.empty() ? 0 : word.front();
    do {
        f(word);
    } while (std::next_permutation(word.begin(), word.end()) &&
             (word.empty() || word.front() == first));
}
}  // namespace detail

/// Visits the lexicographic sub-stream of S_n whose words start with the
/// given first element (1-indexed shard id = first). For n <= 1 the single
/// shard 1 covers everything. The visitor receives the one-line word.
template <class F>
void for_each_permutation_in_shard(int n, int shard, F&& f) {
    if (n < 0 || shard < 1 || shard > shard_count(n))
        throw domain_error("for_each_permutation_in_shard: bad shard");
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    if (n <= 1) {
        f(const_cast<const std::vector<int>&>(word));
        return;
    }
    std::swap(word[0], word[shard - 1]);
    std::sort(word.begin() + 1, word.end());
    detail::visit_lex_from(word, [&](const std::vector<int>& w) { f(w); });
}

/// Enumerates all n! permutations exactly once, in lexicographic order of
/// one-line words. Refuses when n exceeds the enumeration cap.
template <class F>
void for_each_permutation(int n, F&& f, int cap = kDefaultEnumerationCap) {
    if (n < 0) throw domain_error("for_each_permutation: n < 0");
    if (n > cap)
        throw resource_error("enumeration of S_" + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap));
    for (int shard = 1; shard <= shard_count(n); ++shard)
        for_each_permutation_in_shard(n, shard, f);
}

/// Convenience form collecting Permutation objects (small n only).
std::vector<Permutation> enumerate_permutations(int n, int cap = kDefaultEnumerationCap);

/// N_sigma(pi): occurrences of the pattern sigma in pi (0 when |sigma| > |pi|).
std::uint64_t count_occurrences(const Permutation& sigma, const Permutation& pi);
std::uint64_t count_occurrences(const Permutation& sigma, const std::vector<int>& word);

/// N_{id_k}(pi) via the prefix DP over increasing-subsequence counts.
std::uint64_t count_increasing(int k, const Permutation& pi);
std::uint64_t count_increasing(int k, const std::vector<int>& word);

/// Lexicographic rank of a permutation among S_n (0-based), and its inverse.
std::uint64_t lex_rank(const Permutation& p);
Permutation lex_unrank(int n, std::uint64_t rank);

}  // namespace pattern_lab::perm_core
