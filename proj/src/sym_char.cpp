#include "pattern_lab/sym_char.hpp"

#include <mutex>

namespace pattern_lab::sym_char {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        acc.push_back(first);
        gen_partitions(remaining - first, first, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0 || n > 60) throw domain_error("partitions_of: n out of range [0,60]");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

Partition pad(const Partition& lambda, int n) {
    const int head = n - lambda.sum();
    if (head < lambda.first_part())
        throw domain_error("pad: lambda[n] undefined for lambda=" + lambda.to_string() +
                           ", n=" + std::to_string(n));
    std::vector<int> parts;
    if (head > 0) parts.push_back(head);
    for (int p : lambda.parts()) parts.push_back(p);
    return Partition(std::move(parts));
}

namespace {

// Beta-number (first-column hook length) encoding: removing a border strip of
// length l means moving one beta value down by l into an unoccupied slot; the
// height of the strip is the number of beta values jumped over.
BigInt mn_recursive(const std::vector<int>& lambda, const std::vector<int>& rho,
                    std::size_t rho_pos) {
    if (rho_pos == rho.size()) return lambda.empty() ? 1 : 0;
    const int l = rho[rho_pos];
    const int m = static_cast<int>(lambda.size());
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);
    BigInt total = 0;
    for (int i = 0; i < m; ++i) {
        const int nb = beta[i] - l;
        if (nb < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < m; ++j) {
            if (beta[j] == nb) occupied = true;
            if (nb < beta[j] && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
        std::vector<int> nlam;
        for (int j = 0; j < m; ++j) {
            const int part = nbeta[j] - (m - 1 - j);
            if (part > 0) nlam.push_back(part);
        }
        const BigInt sub = mn_recursive(nlam, rho, rho_pos + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.sum() != rho.sum())
        throw domain_error("mn_character: |lambda| != |rho|");
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    static std::map<Key, BigInt> memo;
    static std::mutex memo_mutex;
    const Key key{lambda.parts(), rho.parts()};
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    BigInt value = mn_recursive(lambda.parts(), rho.parts(), 0);
    {
        std::lock_guard lock(memo_mutex);
        memo.emplace(key, value);
    }
    return value;
}

Rational CycleCountPolynomial::evaluate(const CycleType& ct) const {
    const std::vector<int> m = ct.multiplicities();
    Rational total = 0;
    for (const auto& [rv, coeff] : terms) {
        BigInt prod = 1;
        for (std::size_t i = 0; i < rv.size() && prod != 0; ++i) {
            if (rv[i] == 0) continue;
            const int mi = i < m.size() ? m[i] : 0;
            prod *= binomial(mi, rv[i]);
        }
        if (prod != 0) total += coeff * Rational(prod);
    }
    return total;
}

namespace {

// All mu obtained from lambda by deleting a vertical strip (at most one box
// per row) of the given size.
std::vector<Partition> vertical_strip_predecessors(const Partition& lambda, int strip) {
    const auto& lp = lambda.parts();
    const int rows = static_cast<int>(lp.size());
    std::vector<Partition> out;
    for (unsigned mask = 0; mask < (1u << rows); ++mask) {
        if (__builtin_popcount(mask) != strip) continue;
        std::vector<int> mu;
        bool ok = true;
        for (int i = 0; i < rows; ++i) {
            const int part = lp[i] - ((mask >> i) & 1u);
            if (part < 0 || (!mu.empty() && part > mu.back())) {
                ok = false;
                break;
            }
            if (part > 0) mu.push_back(part);
        }
        if (!ok) continue;
        // dropping a row to 0 is only valid for trailing rows; enforced by
        // the weakly-decreasing check plus part>0 skip, but a zero row
        // followed by a positive one must be rejected:
        int seen_zero_at = -1;
        for (int i = 0; i < rows; ++i) {
            const int part = lp[i] - ((mask >> i) & 1u);
            if (part == 0 && seen_zero_at < 0) seen_zero_at = i;
            if (part > 0 && seen_zero_at >= 0) ok = false;
        }
        if (ok) out.emplace_back(std::move(mu));
    }
    return out;
}

}  // namespace

CycleCountPolynomial char_poly(const Partition& lambda) {
    if (lambda.sum() > 12) throw domain_error("char_poly: |lambda| > 12");
    CycleCountPolynomial cp;
    const int L = lambda.sum();
    for (int s = 0; s <= L; ++s) {
        const auto mus = vertical_strip_predecessors(lambda, L - s);
        if (mus.empty()) continue;
        for (const Partition& rho : partitions_of(s)) {
            BigInt f = 0;
            for (const Partition& mu : mus) f += mn_character(mu, rho);
            if ((L - s) % 2 != 0) f = -f;
            if (f == 0) continue;
            std::vector<int> rv = rho.multiplicities();
            cp.terms.emplace(std::move(rv), Rational(f));
        }
    }
    return cp;
}

Rational eval_char_poly(const CycleCountPolynomial& cp, const CycleType& ct) {
    return cp.evaluate(ct);
}

}  // namespace pattern_lab::sym_char
