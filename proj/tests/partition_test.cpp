#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "descent/partition.hpp"

using namespace descent;

namespace {

// Independent counting oracle: number of partitions of n with parts <= k.
long partitions_at_most(int n, int k) {
    if (n == 0) return 1;
    if (n < 0 || k == 0) return 0;
    return partitions_at_most(n, k - 1) + partitions_at_most(n - k, k);
}

bool dominates(const SortedPartition& a, const SortedPartition& b) {
    DominanceRel rel = dominance_compare(a, b).relation;
    return rel == DominanceRel::Greater || rel == DominanceRel::Equal;
}

}  // namespace

TEST_CASE("composition validation") {
    CHECK_NOTHROW(Composition({3, 1, 3}));
    CHECK_THROWS_AS(Composition({}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({-1}), std::invalid_argument);
    CHECK(Composition({3, 1, 3}).sum() == 7);
    CHECK_FALSE(Composition({3, 1, 3}).weakly_decreasing());
    CHECK(Composition({3, 3, 1}).weakly_decreasing());
}

TEST_CASE("sorted partition validation") {
    CHECK_NOTHROW(SortedPartition({4, 2, 2, 1}));
    CHECK_THROWS_AS(SortedPartition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(SortedPartition({}), std::invalid_argument);
}

TEST_CASE("transpose fixed values") {
    CHECK(transpose(SortedPartition({3, 2, 2, 1})) == SortedPartition({4, 3, 1}));
    CHECK(transpose(Composition({3, 1, 3})) == SortedPartition({3, 2, 2}));
    CHECK(transpose(SortedPartition({5})) == SortedPartition({1, 1, 1, 1, 1}));
    CHECK(transpose(SortedPartition({1, 1, 1})) == SortedPartition({3}));
}

TEST_CASE("transpose is an involution, n <= 12") {
    for (int n = 1; n <= 12; ++n)
        for (const SortedPartition& p : enumerate_partitions(n))
            CHECK(transpose(p) == transpose(transpose(transpose(p))));
    for (int n = 1; n <= 12; ++n)
        for (const SortedPartition& p : enumerate_partitions(n))
            CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("dominance fixed values") {
    DominanceVerdict v = dominance_compare(SortedPartition({4, 2, 2, 1}), SortedPartition({3, 3, 3}));
    CHECK(v.relation == DominanceRel::Incomparable);
    REQUIRE(v.greater_witness.has_value());
    REQUIRE(v.less_witness.has_value());
    CHECK(*v.greater_witness == 1);
    CHECK(*v.less_witness == 3);

    CHECK(dominance_compare(SortedPartition({3, 3}), SortedPartition({3, 3})).relation ==
          DominanceRel::Equal);
    CHECK(dominance_compare(SortedPartition({6}), SortedPartition({2, 2, 2})).relation ==
          DominanceRel::Greater);
    CHECK(dominance_compare(SortedPartition({1, 1, 1, 1}), SortedPartition({4})).relation ==
          DominanceRel::Less);
    CHECK_THROWS_AS(dominance_compare(SortedPartition({3}), SortedPartition({2})),
                    std::invalid_argument);
}

TEST_CASE("dominance is reversed by transpose, n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        std::vector<SortedPartition> parts = enumerate_partitions(n);
        for (const SortedPartition& a : parts)
            for (const SortedPartition& b : parts)
                CHECK(dominates(a, b) == dominates(transpose(b), transpose(a)));
    }
}

TEST_CASE("dominance axioms, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<SortedPartition> parts = enumerate_partitions(n);
        for (const SortedPartition& a : parts) {
            for (const SortedPartition& b : parts) {
                DominanceVerdict ab = dominance_compare(a, b);
                DominanceVerdict ba = dominance_compare(b, a);
                // Antisymmetric pairing of verdicts.
                if (ab.relation == DominanceRel::Equal) {
                    CHECK(a == b);
                    CHECK(ba.relation == DominanceRel::Equal);
                } else if (ab.relation == DominanceRel::Greater) {
                    CHECK(ba.relation == DominanceRel::Less);
                } else if (ab.relation == DominanceRel::Less) {
                    CHECK(ba.relation == DominanceRel::Greater);
                } else {
                    CHECK(ba.relation == DominanceRel::Incomparable);
                }
            }
        }
        // Transitivity of >=.
        for (const SortedPartition& a : parts)
            for (const SortedPartition& b : parts)
                for (const SortedPartition& c : parts)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
    }
}

TEST_CASE("partial sum violation fixed values") {
    CHECK(partial_sum_violation(Composition({4, 1, 1}), SortedPartition({3, 3})) == 1);
    CHECK(partial_sum_violation(Composition({3, 3, 3}), SortedPartition({4, 2, 2, 1})) == 3);
    CHECK_FALSE(partial_sum_violation(Composition({3, 3}), SortedPartition({3, 3})).has_value());
    CHECK_FALSE(partial_sum_violation(Composition({1, 2, 1}), SortedPartition({4})).has_value());
}

TEST_CASE("violation matches dominance for sorted inputs, n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        std::vector<SortedPartition> parts = enumerate_partitions(n);
        for (const SortedPartition& lambda : parts) {
            for (const SortedPartition& mu : parts) {
                bool violated =
                    partial_sum_violation(lambda.as_composition(), mu).has_value();
                DominanceRel rel = dominance_compare(lambda, mu).relation;
                bool expected =
                    rel == DominanceRel::Greater || rel == DominanceRel::Incomparable;
                CHECK(violated == expected);
            }
        }
    }
}

TEST_CASE("counting bound fixed values") {
    Lemma32Bound b = lemma32_bound(Composition({3, 2, 2, 1}), 2, 2);
    CHECK(b.lhs == 5);
    CHECK(b.rhs == 5);
    CHECK(b.holds);
    CHECK(b.equality);

    Lemma32Bound c = lemma32_bound(Composition({3, 1, 3}), 1, 3);
    CHECK(c.lhs == 3);
    CHECK(c.rhs == 3);
    CHECK(c.holds);
}

TEST_CASE("counting bound holds exhaustively, n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        for (const Composition& lambda : enumerate_compositions(n)) {
            for (int l = 1; l <= lambda.size(); ++l)
                for (int k = 1; k <= n; ++k)
                    CHECK(lemma32_bound(lambda, l, k).holds);
        }
        // Equality at k = p_{l+1} for sorted partitions with l < m.
        for (const SortedPartition& p : enumerate_partitions(n))
            for (int l = 1; l < p.size(); ++l)
                CHECK(lemma32_bound(p.as_composition(), l, p.part(l + 1)).equality);
    }
}

TEST_CASE("enumeration counts against independent oracles") {
    for (int n = 1; n <= 12; ++n) {
        std::vector<SortedPartition> parts = enumerate_partitions(n);
        CHECK(static_cast<long>(parts.size()) == partitions_at_most(n, n));
        CHECK(static_cast<long>(parts.size()) == partition_count(n));
        std::set<SortedPartition> unique(parts.begin(), parts.end());
        CHECK(unique.size() == parts.size());
        for (const SortedPartition& p : parts) CHECK(p.sum() == n);

        std::vector<Composition> comps = enumerate_compositions(n);
        CHECK(comps.size() == (1u << (n - 1)));
        for (const Composition& c : comps) CHECK(c.sum() == n);
    }
    CHECK(partition_count(8) == 22);
}
