#include "pattern_lab/roots.hpp"

#include <algorithm>

namespace pattern_lab::poly_lab {

namespace {

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& squarefree) {
    std::vector<RationalPolynomial> chain{squarefree, squarefree.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations_at(const std::vector<RationalPolynomial>& chain, const Rational& x) {
    int variations = 0, prev = 0;
    for (const auto& p : chain) {
        const int s = p.evaluate(x).sign();
        if (s != 0) {
            if (prev != 0 && s != prev) ++variations;
            prev = s;
        }
    }
    return variations;
}

int sign_variations_at_infinity(const std::vector<RationalPolynomial>& chain, int direction) {
    int variations = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = p.leading_coefficient().sign();
        if (direction < 0 && p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

struct Isolation {
    // exact roots found by deflation plus open intervals with one root each
    std::vector<Rational> exact;
    std::vector<std::pair<Rational, Rational>> intervals;
};

// Bisects (lo, hi), known to contain `want` distinct roots of q, q(lo),q(hi) != 0.
void isolate_in(const RationalPolynomial& q, const std::vector<RationalPolynomial>& chain,
                Rational lo, Rational hi, int want, const Rational& max_width, Isolation& out) {
    if (want == 0) return;
    RationalPolynomial cur = q;
    auto cur_chain = chain;
    while (true) {
        if (want == 1 && hi - lo <= max_width) {
            out.intervals.emplace_back(lo, hi);
            return;
        }
        const Rational mid = (lo + hi) / Rational(2);
        if (cur.evaluate(mid).is_zero()) {
            out.exact.push_back(mid);
            // deflate the found root and continue on both halves
            cur = divmod(cur, RationalPolynomial(std::vector<Rational>{-mid, Rational(1)})).first;
            cur_chain = sturm_chain(cur);
            want -= 1;
            if (want == 0) return;
            const int left = sign_variations_at(cur_chain, lo) - sign_variations_at(cur_chain, mid);
            isolate_in(cur, cur_chain, lo, mid, left, max_width, out);
            isolate_in(cur, cur_chain, mid, hi, want - left, max_width, out);
            return;
        }
        const int left = sign_variations_at(cur_chain, lo) - sign_variations_at(cur_chain, mid);
        if (left == want) {
            hi = mid;
        } else if (left == 0) {
            lo = mid;
        } else {
            isolate_in(cur, cur_chain, lo, mid, left, max_width, out);
            isolate_in(cur, cur_chain, mid, hi, want - left, max_width, out);
            return;
        }
    }
}

std::vector<BigInt> divisors_of(const BigInt& v) {
    BigInt a = v < 0 ? BigInt(-v) : v;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
        }
    }
    return out;
}

}  // namespace

int sturm_root_count(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw domain_error("sturm_root_count: zero polynomial");
    if (!(lo < hi)) throw domain_error("sturm_root_count: requires lo < hi");
    if (p.evaluate(lo).is_zero() || p.evaluate(hi).is_zero())
        throw domain_error("sturm_root_count: endpoint is a root; perturb the interval");
    const RationalPolynomial q = squarefree_part(p);
    const auto chain = sturm_chain(q);
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

int count_real_roots(const RationalPolynomial& p) {
    if (p.is_zero()) throw domain_error("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    const RationalPolynomial q = squarefree_part(p);
    const auto chain = sturm_chain(q);
    return sign_variations_at_infinity(chain, -1) - sign_variations_at_infinity(chain, +1);
}

Rational cauchy_root_bound(const RationalPolynomial& p) {
    if (p.is_zero()) throw domain_error("cauchy_root_bound: zero polynomial");
    const Rational lead = p.leading_coefficient();
    Rational best = 0;
    for (int d = 0; d < p.degree(); ++d) {
        Rational r = p.coefficient(d) / lead;
        if (r.is_negative()) r = -r;
        best = std::max(best, r);
    }
    return best + Rational(1);
}

RootReport analyze_roots(const RationalPolynomial& p, const Rational& bound) {
    if (p.is_zero()) throw domain_error("analyze_roots: zero polynomial");
    RootReport report;
    if (p.degree() == 0) {
        // no roots at all: vacuously real-rooted and below any bound
        report.is_real_rooted = true;
        report.all_roots_below_bound = true;
        return report;
    }

    const RationalPolynomial q = squarefree_part(p);
    const auto chain = sturm_chain(q);
    const Rational B = cauchy_root_bound(q);
    const int total_distinct =
        sign_variations_at(chain, -B) - sign_variations_at(chain, B);
    report.distinct_real_roots = total_distinct;

    Isolation iso;
    isolate_in(q, chain, -B, B, total_distinct, Rational(BigInt(1), BigInt(1024)), iso);

    // rational-root candidates of the primitive integer form, filtered
    // through the isolating intervals
    const std::vector<BigInt> ints = q.primitive_integer_coefficients();
    int low = 0;
    while (low < static_cast<int>(ints.size()) && ints[low] == 0) ++low;
    if (low > 0) iso.exact.push_back(Rational(0));  // x^low divides q, so 0 is a root
    std::vector<Rational> candidates;
    if (low < static_cast<int>(ints.size())) {
        for (const BigInt& num : divisors_of(ints[low]))
            for (const BigInt& den : divisors_of(ints.back()))
                for (int s : {1, -1}) candidates.emplace_back(s * num, den);
    }
    for (const auto& c : candidates) {
        if (!q.evaluate(c).is_zero()) continue;
        for (const auto& [lo, hi] : iso.intervals)
            if (lo < c && c < hi) iso.exact.push_back(c);
    }

    // a found exact root collapses its interval to [r, r]
    std::sort(iso.exact.begin(), iso.exact.end());
    iso.exact.erase(std::unique(iso.exact.begin(), iso.exact.end()), iso.exact.end());
    std::vector<std::pair<Rational, Rational>> intervals;
    for (const auto& [lo, hi] : iso.intervals) {
        bool collapsed = false;
        for (const auto& r : iso.exact)
            if (lo < r && r < hi) {
                intervals.emplace_back(r, r);
                collapsed = true;
                break;
            }
        if (!collapsed) intervals.emplace_back(lo, hi);
    }
    for (const auto& r : iso.exact) intervals.emplace_back(r, r);
    std::sort(intervals.begin(), intervals.end());
    intervals.erase(std::unique(intervals.begin(), intervals.end()), intervals.end());
    report.isolating_intervals = std::move(intervals);
    report.exact_rational_roots = std::move(iso.exact);

    // multiplicity accounting through the squarefree decomposition
    int with_multiplicity = 0;
    const auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].degree() > 0)
            with_multiplicity += static_cast<int>(i + 1) * count_real_roots(factors[i]);
    report.real_roots_with_multiplicity = with_multiplicity;
    report.is_real_rooted = (with_multiplicity == p.degree());

    if (!report.isolating_intervals.empty())
        report.max_root_upper_bound = report.isolating_intervals.back().second;

    // all roots < bound, decided exactly
    if (p.evaluate(bound).is_zero()) {
        report.all_roots_below_bound = false;
    } else {
        const Rational lo = std::min(-B, bound - Rational(1));
        const int below = (lo < bound)
                              ? sign_variations_at(chain, lo) - sign_variations_at(chain, bound)
                              : 0;
        report.all_roots_below_bound = (below == total_distinct);
    }
    return report;
}

}  // namespace pattern_lab::poly_lab
