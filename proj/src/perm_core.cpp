#include "pattern_lab/perm_core.hpp"

namespace pattern_lab::perm_core {

CycleType cycle_type(const Permutation& pi) {
    const int n = pi.size();
    std::vector<bool> seen(n, false);
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = pi.word()[j] - 1;
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return CycleType(std::move(parts));
}

BigInt class_size(const CycleType& ct) {
    const int n = ct.sum();
    BigInt denom = 1;
    int run = 0, prev = 0;
    for (int p : ct.parts()) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        denom *= BigInt(p) * run;  // accumulates i^{m_i} m_i! part by part
    }
    return factorial(n) / denom;
}

std::vector<Permutation> enumerate_permutations(int n, int cap) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const std::vector<int>& w) { out.emplace_back(w); }, cap);
    return out;
}

std::uint64_t count_occurrences(const Permutation& sigma, const std::vector<int>& w) {
    const int k = sigma.size();
    const int n = static_cast<int>(w.size());
    if (k > n) return 0;
    if (k == 0) return 1;
    // by_rank[t] = slot within the chosen index set holding the (t+1)-smallest value
    const Permutation inv = sigma.inverse();
    std::vector<int> by_rank(k);
    for (int t = 0; t < k; ++t) by_rank[t] = inv(t + 1) - 1;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::uint64_t count = 0;
    while (true) {
        bool match = true;
        for (int t = 0; t + 1 < k; ++t) {
            if (w[idx[by_rank[t]]] >= w[idx[by_rank[t + 1]]]) {
                match = false;
                break;
            }
        }
        count += match;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return count;
}

std::uint64_t count_occurrences(const Permutation& sigma, const Permutation& pi) {
    return count_occurrences(sigma, pi.word());
}

std::uint64_t count_increasing(int k, const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    if (k <= 0) throw domain_error("count_increasing: k must be positive");
    if (k > n) return 0;
    // ending[j][i] = number of increasing subsequences of length j+1 ending at i
    std::vector<std::vector<std::uint64_t>> ending(k, std::vector<std::uint64_t>(n, 0));
    for (int i = 0; i < n; ++i) ending[0][i] = 1;
    for (int j = 1; j < k; ++j)
        for (int i = 0; i < n; ++i) {
            std::uint64_t s = 0;
            for (int t = 0; t < i; ++t)
                if (word[t] < word[i]) s += ending[j - 1][t];
            ending[j][i] = s;
        }
    std::uint64_t total = 0;
    for (int i = 0; i < n; ++i) total += ending[k - 1][i];
    return total;
}

std::uint64_t count_increasing(int k, const Permutation& pi) {
    return count_increasing(k, pi.word());
}

std::uint64_t lex_rank(const Permutation& p) {
    const int n = p.size();
    std::uint64_t rank = 0, fact = 1;
    for (int i = n - 1; i >= 0; --i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p.word()[j] < p.word()[i]) ++smaller;
        rank += smaller * fact;
        fact *= (n - i);
    }
    return rank;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<std::uint64_t> fact(n + 1, 1);
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    if (n > 0 && rank >= fact[n]) throw domain_error("lex_unrank: rank out of range");
    std::vector<int> w;
    w.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = fact[i];
        const auto d = static_cast<std::size_t>(rank / f);
        rank %= f;
        w.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return Permutation(std::move(w));
}

}  // namespace pattern_lab::perm_core
