#include <doctest.h>

#include <numeric>
#include <set>

#include "pattern_lab/perm_core.hpp"
#include "pattern_lab/sym_char.hpp"

using namespace pattern_lab;
using perm_core::Permutation;

namespace {

Permutation perm(std::vector<int> w) { return Permutation(std::move(w)); }

// does the given 1-indexed position set realize sigma in pi?
bool is_occurrence(const Permutation& sigma, const Permutation& pi, std::vector<int> positions) {
    REQUIRE(static_cast<int>(positions.size()) == sigma.size());
    for (std::size_t a = 0; a < positions.size(); ++a)
        for (std::size_t b = 0; b < positions.size(); ++b)
            if ((pi(positions[a]) > pi(positions[b])) != (sigma(int(a) + 1) > sigma(int(b) + 1)))
                return false;
    return true;
}

}  // namespace

TEST_SUITE("perm_core") {

TEST_CASE("enumeration is lexicographic and complete") {
    auto s0 = perm_core::enumerate_permutations(0);
    CHECK(s0.size() == 1);
    CHECK(s0[0].size() == 0);

    auto s3 = perm_core::enumerate_permutations(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3.front() == perm({1, 2, 3}));
    CHECK(s3.back() == perm({3, 2, 1}));
    CHECK(std::is_sorted(s3.begin(), s3.end()));

    CHECK(perm_core::enumerate_permutations(5).size() == 120);
}

TEST_CASE("enumeration cap refuses oversized n") {
    CHECK_THROWS_AS(perm_core::enumerate_permutations(11), resource_error);
    CHECK_THROWS_AS(perm_core::enumerate_permutations(5, 4), resource_error);
    CHECK_NOTHROW(perm_core::enumerate_permutations(4, 4));
}

TEST_CASE("shards partition the stream") {
    std::vector<Permutation> all;
    for (int shard = 1; shard <= perm_core::shard_count(5); ++shard)
        perm_core::for_each_permutation_in_shard(
            5, shard, [&](const std::vector<int>& w) { all.emplace_back(w); });
    CHECK(all.size() == 120);
    CHECK(std::set<Permutation>(all.begin(), all.end()).size() == 120);
}

TEST_CASE("cycle types") {
    CHECK(perm_core::cycle_type(Permutation::identity(4)) == Partition({1, 1, 1, 1}));
    CHECK(perm_core::cycle_type(perm({3, 2, 1})) == Partition({2, 1}));
    CHECK(perm_core::cycle_type(perm({2, 3, 1})) == Partition({3}));
    CHECK(perm_core::cycle_type(Permutation()) == Partition());
}

TEST_CASE("class sizes") {
    CHECK(perm_core::class_size(Partition({1, 1, 1})) == 1);
    CHECK(perm_core::class_size(Partition({2, 1})) == 3);
    CHECK(perm_core::class_size(Partition({3})) == 2);
    for (int n = 0; n <= 12; ++n) {
        BigInt total = 0;
        for (const auto& ct : sym_char::partitions_of(n)) total += perm_core::class_size(ct);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("pattern occurrence counts") {
    CHECK(perm_core::count_occurrences(perm({1, 2}), perm({3, 2, 1})) == 0);
    CHECK(perm_core::count_occurrences(perm({2, 1}), perm({2, 3, 1})) == 2);
    CHECK(perm_core::count_occurrences(perm({1, 2, 3}), perm({1, 2})) == 0);  // k > n
    for (int n : {4, 6})
        for (int k : {2, 3})
            CHECK(perm_core::count_occurrences(Permutation::identity(k), Permutation::identity(n)) ==
                  binomial(n, k).convert_to<std::uint64_t>());
}

TEST_CASE("two-pattern occurrence witnesses on larger words") {
    // one permutation in S_15 with cycle type (5,3,3,2,2)
    const Permutation pi15 = perm({3, 8, 1, 7, 6, 5, 9, 10, 11, 2, 15, 14, 12, 13, 4});
    CHECK(perm_core::cycle_type(pi15) == Partition({5, 3, 3, 2, 2}));
    CHECK(is_occurrence(perm({4, 3, 2, 5, 1}), pi15, {2, 5, 6, 8, 10}));
    CHECK(perm_core::count_occurrences(perm({4, 3, 2, 5, 1}), pi15) >= 1);
    CHECK(is_occurrence(perm({2, 1, 3, 4, 5}), pi15, {4, 5, 7, 9, 11}));
    CHECK(perm_core::count_occurrences(perm({2, 1, 3, 4, 5}), pi15) >= 1);

    // one in S_20 with marked occurrences of 312 and 31452
    const Permutation pi20 =
        perm({3, 2, 18, 4, 16, 8, 1, 6, 11, 10, 12, 9, 19, 7, 15, 5, 20, 13, 14, 17});
    CHECK(is_occurrence(perm({3, 1, 2}), pi20, {5, 8, 12}));
    CHECK(is_occurrence(perm({3, 1, 4, 5, 2}), pi20, {3, 10, 13, 17, 19}));
    CHECK(perm_core::count_occurrences(perm({3, 1, 4, 5, 2}), pi20) >= 1);
}

TEST_CASE("count_increasing matches the subset-scan oracle") {
    CHECK(perm_core::count_increasing(2, Permutation::identity(6)) == 15);
    CHECK(perm_core::count_increasing(3, perm({3, 2, 1})) == 0);
    for (int n = 0; n <= 8; ++n) {
        perm_core::for_each_permutation(n, [&](const std::vector<int>& w) {
            const Permutation pi(w);
            for (int k = 1; k <= 4; ++k)
                REQUIRE(perm_core::count_increasing(k, pi) ==
                        perm_core::count_occurrences(Permutation::identity(k), pi));
        });
    }
}

TEST_CASE("every k-subset realizes exactly one pattern") {
    const auto run = [](int n, int k) {
        std::vector<Permutation> patterns;
        perm_core::for_each_permutation(
            k, [&](const std::vector<int>& w) { patterns.emplace_back(w); });
        perm_core::for_each_permutation(n, [&](const std::vector<int>& w) {
            std::uint64_t total = 0;
            for (const auto& sigma : patterns) total += perm_core::count_occurrences(sigma, w);
            REQUIRE(total == binomial(n, k).convert_to<std::uint64_t>());
        });
    };
    for (int k : {2, 3, 4}) run(5, k);
    for (int k : {2, 3, 4}) run(8, k);
}

TEST_CASE("cycle type is conjugation-invariant") {
    std::vector<Permutation> taus;
    for (std::uint64_t r = 0; r < 120; r += 13) taus.push_back(perm_core::lex_unrank(5, r));
    perm_core::for_each_permutation(5, [&](const std::vector<int>& w) {
        const Permutation pi(w);
        for (const auto& tau : taus) {
            const Permutation conj = tau.compose(pi).compose(tau.inverse());
            REQUIRE(perm_core::cycle_type(conj) == perm_core::cycle_type(pi));
        }
    });
}

TEST_CASE("lex rank round trip") {
    for (std::uint64_t r = 0; r < 120; ++r)
        CHECK(perm_core::lex_rank(perm_core::lex_unrank(5, r)) == r);
    CHECK(perm_core::lex_unrank(4, 0) == Permutation::identity(4));
    CHECK(perm_core::lex_unrank(4, 23) == perm({4, 3, 2, 1}));
}

TEST_CASE("invalid words are rejected") {
    CHECK_THROWS_AS(perm(std::vector<int>{1, 1}), domain_error);
    CHECK_THROWS_AS(perm(std::vector<int>{0, 1}), domain_error);
    CHECK_THROWS_AS(perm(std::vector<int>{2, 3}), domain_error);
}

}  // TEST_SUITE
