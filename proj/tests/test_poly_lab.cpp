#include <doctest.h>

#include "pattern_lab/closed_forms.hpp"
#include "pattern_lab/conjectures.hpp"
#include "pattern_lab/interpolate.hpp"
#include "pattern_lab/roots.hpp"

using namespace pattern_lab;
using namespace pattern_lab::poly_lab;
using perm_core::Permutation;

namespace {

Partition part(std::vector<int> v) { return Partition(std::move(v)); }
RationalPolynomial poly(std::vector<int> ints) {
    std::vector<Rational> c(ints.begin(), ints.end());
    return RationalPolynomial(std::move(c));
}

}  // namespace

TEST_SUITE("poly_lab") {

TEST_CASE("polynomial arithmetic") {
    const auto a = poly({1, 1});    // 1 + n
    const auto b = poly({-1, 1});   // -1 + n
    CHECK(a * b == poly({-1, 0, 1}));
    CHECK(a + b == poly({0, 2}));
    CHECK((a - a).is_zero());
    CHECK(poly({-1, 0, 1}).evaluate(Rational(3)) == Rational(8));
    CHECK(poly({0, 0, 5}).derivative() == poly({0, 10}));
    CHECK(poly({5}).derivative().is_zero());
    CHECK(poly({0, 3, 1}).divide_by_x() == poly({3, 1}));
    CHECK_THROWS_AS(poly({1, 1}).divide_by_x(), consistency_error);
    CHECK_THROWS_AS(RationalPolynomial().leading_coefficient(), domain_error);
    auto [q, r] = divmod(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(q == poly({1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
    CHECK(poly({2, 4}).primitive_integer_coefficients() == std::vector<BigInt>{1, 2});
}

TEST_CASE("exact Lagrange interpolation") {
    const auto p = lagrange_interpolate(
        {{Rational(0), Rational(1)}, {Rational(1), Rational(2)}, {Rational(2), Rational(5)}});
    CHECK(p == poly({1, 0, 1}));
    const auto c = lagrange_interpolate({{Rational(7), Rational(3, 2)}});
    CHECK(c == RationalPolynomial::constant(Rational(3, 2)));
}

TEST_CASE("Sturm root counting") {
    CHECK(sturm_root_count(poly({-2, 0, 1}), Rational(0), Rational(2)) == 1);
    const auto a1k3 = closed_forms::a_id_closed(part({1}), 3);  // roots -1 and 4/3
    CHECK(sturm_root_count(a1k3, Rational(1), Rational(2)) == 1);
    const auto binom3 = closed_forms::a_id_closed(part({}), 3);  // roots 0, 1, 2
    CHECK(sturm_root_count(binom3, Rational(-1, 2), Rational(5, 2)) == 3);
    CHECK_THROWS_AS(sturm_root_count(poly({-1, 0, 1}), Rational(1), Rational(2)), domain_error);
    CHECK_THROWS_AS(sturm_root_count(RationalPolynomial(), Rational(0), Rational(1)), domain_error);
}

TEST_CASE("Sturm counts are additive over adjacent intervals") {
    const auto p = closed_forms::a_id_closed(part({1}), 6);
    const Rational a(-2), b(3, 2), c(7);
    CHECK(sturm_root_count(p, a, b) + sturm_root_count(p, b, c) == sturm_root_count(p, a, c));
}

TEST_CASE("root analysis with multiplicities") {
    // (n-1)^2 (n+2): real-rooted, 2 distinct, 3 with multiplicity
    const auto p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
    const auto rep = analyze_roots(p, Rational(10));
    CHECK(rep.is_real_rooted);
    CHECK(rep.distinct_real_roots == 2);
    CHECK(rep.real_roots_with_multiplicity == 3);
    CHECK(rep.all_roots_below_bound);
    REQUIRE(rep.exact_rational_roots.size() == 2);
    CHECK(rep.exact_rational_roots[0] == Rational(-2));
    CHECK(rep.exact_rational_roots[1] == Rational(1));

    const auto q = poly({1, 0, 1});  // no real roots
    const auto qrep = analyze_roots(q, Rational(0));
    CHECK_FALSE(qrep.is_real_rooted);
    CHECK(qrep.distinct_real_roots == 0);
    CHECK(qrep.all_roots_below_bound);

    // (2n-3)(n+5)(n^2+7): rational roots recovered exactly
    const auto m = poly({-3, 2}) * poly({5, 1}) * poly({7, 0, 1});
    const auto mrep = analyze_roots(m, Rational(2));
    CHECK_FALSE(mrep.is_real_rooted);
    CHECK(mrep.distinct_real_roots == 2);
    REQUIRE(mrep.exact_rational_roots.size() == 2);
    CHECK(mrep.exact_rational_roots[0] == Rational(-5));
    CHECK(mrep.exact_rational_roots[1] == Rational(3, 2));
    CHECK(mrep.all_roots_below_bound);
    CHECK(mrep.max_root_upper_bound == Rational(3, 2));
    // bound equal to a root is not "strictly below"
    CHECK_FALSE(analyze_roots(m, Rational(3, 2)).all_roots_below_bound);
}

TEST_CASE("isolating intervals are disjoint and at most 1/1024 wide") {
    const auto p = closed_forms::a_id_closed(part({1}), 7);
    const auto rep = analyze_roots(p, Rational(7));
    REQUIRE(rep.isolating_intervals.size() == static_cast<std::size_t>(rep.distinct_real_roots));
    for (std::size_t i = 0; i < rep.isolating_intervals.size(); ++i) {
        const auto& [lo, hi] = rep.isolating_intervals[i];
        CHECK(hi - lo <= Rational(1, 1024));
        if (i > 0) CHECK(rep.isolating_intervals[i - 1].second <= lo);
    }
}

TEST_CASE("interpolate_a reproduces closed forms") {
    const Permutation p12 = Permutation(std::vector<int>{1, 2});
    const Permutation p21 = Permutation(std::vector<int>{2, 1});
    CHECK(interpolate_a({p12}, part({1})) ==
          RationalPolynomial(std::vector<Rational>{Rational(1, 6), Rational(1, 6)}));
    CHECK(interpolate_a({p21}, part({1})) ==
          RationalPolynomial(std::vector<Rational>{Rational(-1, 6), Rational(-1, 6)}));
    const moments::EnumerationOptions opts{10, 4};
    for (int k = 2; k <= 4; ++k) {
        const Permutation idk = Permutation::identity(k);
        for (const auto& lambda : {part({}), part({1}), part({2}), part({1, 1})}) {
            if (lambda.sum() > k) continue;
            CHECK(interpolate_a({idk}, lambda, opts) == closed_forms::a_id_closed(lambda, k));
        }
    }
}

TEST_CASE("interpolate_a degree bound and window") {
    const Permutation p12 = Permutation(std::vector<int>{1, 2});
    const Permutation p21 = Permutation(std::vector<int>{2, 1});
    const auto w = interpolation_window({p12, p21}, part({1}));
    CHECK(w.n0 == 5);
    CHECK(w.degree == 3);
    const auto p = interpolate_a({p12, p21}, part({1}));
    CHECK(p.degree() <= 3);
    CHECK_THROWS_AS(interpolate_a({p12}, part({3})), domain_error);
    moments::EnumerationOptions tight{4, 1};
    CHECK_THROWS_AS(interpolate_a({p12}, part({1}), tight), resource_error);
}

TEST_CASE("conjecture suite at small size") {
    const auto rep = conjecture_suite(2);
    CHECK(rep.all_passed());
    bool saw_zero_constant = false;
    for (const auto& c : rep.checks)
        if (c.name.find("zero polynomial") != std::string::npos) saw_zero_constant = true;
    CHECK(saw_zero_constant);
}

}  // TEST_SUITE
