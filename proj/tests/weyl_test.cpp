#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "descent/serialize.hpp"
#include "descent/weyl.hpp"

using namespace descent;

namespace {

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Independent inversion of decode: the full code table, built once per rank.
std::map<Permutation, DescendingCode> code_table(int rank) {
    std::map<Permutation, DescendingCode> table;
    for (const DescendingCode& code : enumerate_codes(rank))
        table.insert({decode(code).permutation, code});
    return table;
}

}  // namespace

TEST_CASE("permutation basics") {
    Permutation w({3, 1, 2});
    CHECK(w.degree() == 3);
    CHECK(w(1) == 3);
    CHECK(w.inverse() == Permutation({2, 3, 1}));
    CHECK(w.length() == 2);
    CHECK(Permutation::longest_element(4) == Permutation({4, 3, 2, 1}));
    CHECK(Permutation::longest_element(4).length() == 6);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("composition convention: rightmost factor applied first") {
    // s1 then s2 appended on the right: (s1 s2)(x) = s1(s2(x)).
    Permutation s1 = Permutation::simple_reflection(1, 3);
    Permutation s2 = Permutation::simple_reflection(2, 3);
    CHECK(s1.compose(s2) == Permutation({2, 3, 1}));
    CHECK(s2.compose(s1) == Permutation({3, 1, 2}));
    CHECK(ReducedWord(2, {1, 2}).evaluate() == Permutation({2, 3, 1}));
    CHECK(ReducedWord(2, {2, 1}).evaluate() == Permutation({3, 1, 2}));

    // Right-multiplication by s_i swaps positions i, i+1 of the image row.
    Permutation w({3, 1, 2});
    w.right_multiply_simple(1);
    CHECK(w == Permutation({1, 3, 2}));
}

TEST_CASE("length equals minimal word length, degree <= 5") {
    // Oracle: breadth-first expansion over the Cayley graph.
    for (int degree = 2; degree <= 5; ++degree) {
        std::map<Permutation, int> dist;
        std::vector<Permutation> frontier{Permutation::identity(degree)};
        dist.insert({frontier[0], 0});
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const Permutation& w : frontier) {
                for (int i = 1; i < degree; ++i) {
                    Permutation v = w;
                    v.right_multiply_simple(i);
                    if (dist.insert({v, dist.at(w) + 1}).second) next.push_back(v);
                }
            }
            frontier = std::move(next);
        }
        CHECK(static_cast<long>(dist.size()) == factorial(degree));
        for (const auto& [w, d] : dist) CHECK(w.length() == d);
    }
}

TEST_CASE("rank-2 code table decodes to the six expected words") {
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> expected = {
        {{1, 1}, {1, 2, 1}}, {{2, 1}, {2, 1}}, {{1, 2}, {1, 2}},
        {{2, 2}, {2}},       {{1, 3}, {1}},    {{2, 3}, {}},
    };
    for (const auto& [entries, letters] : expected) {
        DecodedElement d = decode(DescendingCode(2, entries));
        CHECK(d.word.letters() == letters);
        CHECK(d.word.is_reduced());
    }
    CHECK(enumerate_codes(2).size() == 6);
}

TEST_CASE("descending code validation") {
    CHECK_NOTHROW(DescendingCode(3, {1, 3, 2}));
    CHECK_THROWS_AS(DescendingCode(3, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(DescendingCode(2, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(DescendingCode(2, {1, 4}), std::invalid_argument);
    CHECK(DescendingCode::identity(4) == DescendingCode(4, {2, 3, 4, 5}));
    CHECK(DescendingCode(3, {1, 1, 1}).expected_length() == 6);
}

TEST_CASE("cycle letters and permutation") {
    CHECK(cycle_letters(4, 2) == std::vector<int>{4, 3, 2});
    CHECK(cycle_letters(3, 4).empty());
    // pi_k at position i maps k -> i+1 and shifts k<j<=i+1 down by one.
    Permutation c = cycle_permutation(4, 2, 6);
    CHECK(c == Permutation({1, 5, 2, 3, 4, 6}));
}

TEST_CASE("decode against brute-force inverse table, r <= 6") {
    for (int rank = 1; rank <= 6; ++rank) {
        std::vector<DescendingCode> codes = enumerate_codes(rank);
        CHECK(static_cast<long>(codes.size()) == factorial(rank + 1));

        std::set<Permutation> seen;
        for (const DescendingCode& code : codes) {
            DecodedElement d = decode(code);
            CHECK(d.word.evaluate() == d.permutation);
            // Words are reduced: letter count equals the inversion number.
            CHECK(d.word.size() == code.expected_length());
            CHECK(d.permutation.length() == code.expected_length());
            seen.insert(d.permutation);
        }
        // Bijectivity: all (r+1)! images distinct.
        CHECK(static_cast<long>(seen.size()) == factorial(rank + 1));
    }
}

TEST_CASE("encode matches the brute-force oracle and inverts decode, r <= 5") {
    for (int rank = 1; rank <= 5; ++rank) {
        for (const auto& [w, code] : code_table(rank)) {
            CHECK(encode(w) == code);
            CHECK(decode(encode(w)).permutation == w);
        }
    }
}

TEST_CASE("encode fixed values") {
    CHECK(encode(Permutation({2, 1, 3})) == DescendingCode(2, {1, 3}));
    CHECK(encode(Permutation::identity(5)) == DescendingCode::identity(4));
    CHECK(encode(Permutation::longest_element(5)) == DescendingCode(4, {1, 1, 1, 1}));
    CHECK(encode(Permutation({1})) == DescendingCode(0, {}));
}

TEST_CASE("root basics and rendering") {
    CHECK(Root::simple(3) == Root(3, 4));
    CHECK(Root(2, 5).positive());
    CHECK(Root(5, 2).negative());
    CHECK(Root(3, 4).is_simple());
    CHECK(Root(3, 4).simple_index() == 3);
    CHECK(Root(2, 5).negated() == Root(5, 2));
    CHECK(to_string(Root(2, 5)) == "a2+a3+a4");
    CHECK(to_string(Root(3, 1)) == "-(a1+a2)");
    CHECK(to_string(Root(2, 1)) == "-a1");
    CHECK(Root(2, 5).simple_coordinates(5) == std::vector<int>{0, 1, 1, 1, 0});
    CHECK_THROWS_AS(Root(2, 2), std::invalid_argument);
}

TEST_CASE("act_on_root") {
    // w(e_i - e_j) = e_{w(i)} - e_{w(j)}.
    Permutation w({3, 1, 2});
    CHECK(act_on_root(w, Root(1, 2)) == Root(3, 1));
    CHECK(act_on_root(w, Root(2, 3)) == Root(1, 2));
    // Identity-preservation and sign flip under the longest element.
    Permutation w0 = Permutation::longest_element(4);
    for (int k = 1; k <= 3; ++k) CHECK(act_on_root(w0, Root::simple(k)).negative());
}

TEST_CASE("cycle action closed form: fixed values") {
    CHECK(cycle_action(6, 2, 4, 2) == Root(5, 2));
    CHECK(cycle_action(6, 2, 4, 5) == Root(4, 6));
    CHECK(cycle_action(6, 2, 4, 6) == Root::simple(6));
    CHECK(cycle_action(6, 2, 4, 1) == Root(1, 5));  // a1+a2+a3+a4
    CHECK(cycle_action(6, 2, 4, 3) == Root::simple(2));
}

TEST_CASE("cycle action closed form vs direct action, r <= 8") {
    for (int rank = 1; rank <= 8; ++rank) {
        for (int j = 1; j <= rank; ++j) {
            for (int i = 1; i <= j; ++i) {
                // The word s_j s_{j-1} ... s_i evaluated directly.
                std::vector<int> letters;
                for (int t = j; t >= i; --t) letters.push_back(t);
                Permutation w = ReducedWord(rank, letters).evaluate();
                for (int k = 1; k <= rank; ++k)
                    CHECK(cycle_action(rank, i, j, k) == act_on_root(w, Root::simple(k)));
            }
        }
    }
}

TEST_CASE("negative simple set") {
    Permutation w = ReducedWord(2, {2, 1}).evaluate();
    RootSet neg = negative_simple_set(w, all_simple_roots(2));
    CHECK(neg.size() == 1);
    CHECK(neg.contains(Root::simple(1)));

    CHECK(negative_simple_set(Permutation::identity(4), all_simple_roots(3)).size() == 0);
    CHECK(negative_simple_set(Permutation::longest_element(4), all_simple_roots(3)).size() == 3);
}

TEST_CASE("root set keeps members sorted and unique") {
    RootSet s(4, {Root(3, 4), Root(1, 2), Root(3, 4)});
    CHECK(s.size() == 2);
    CHECK(s.members()[0] == Root(1, 2));
    s.insert(Root(2, 3));
    CHECK(s.size() == 3);
    CHECK(s.contains(Root(2, 3)));
}
