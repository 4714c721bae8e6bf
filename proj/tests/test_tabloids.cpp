#include "doctest.h"

#include "confstab/rational.hpp"
#include "confstab/tableau.hpp"

#include <set>

using namespace confstab;

TEST_CASE("parse and print") {
    PseudoTableau t = PseudoTableau::parse("7,2,1;5,3;4");
    CHECK(t.ambient() == 7);
    CHECK(t.shape() == Partition{3, 2, 1});
    CHECK(t.support() == std::vector<int>{1, 2, 3, 4, 5, 7});
    CHECK(t.str() == "7,2,1;5,3;4");
    CHECK(PseudoTabloid(t).str() == "{1,2,7;3,5;4}");
    CHECK_THROWS(PseudoTableau::parse("1,1;2"));
    CHECK_THROWS(PseudoTableau::parse("1;2,3"));
    CHECK_THROWS(PseudoTableau::parse("1,2", 1));
}

TEST_CASE("action") {
    PseudoTableau t(3, {{1, 2}, {3}});
    CHECK(act(Permutation(3), t) == t);
    PseudoTableau s = act(Permutation::transposition(3, 1, 2), t);
    CHECK(s.rows() == Rows{{2, 1}, {3}});
    CHECK(PseudoTabloid(s) == PseudoTabloid(t));

    // {sigma T} depends only on {T}; associativity on tabloids.
    for (int n = 1; n <= 4; ++n) {
        auto perms = all_permutations(n);
        for (const auto& shape : partitions_up_to(n)) {
            for (const auto& tab : all_pseudo_tableaux(shape, n))
                for (const auto& g : perms) CHECK(PseudoTabloid(act(g, tab)) == act(g, PseudoTabloid(tab)));
            if (n > 3) continue;
            for (const auto& tab : all_pseudo_tabloids(shape, n))
                for (const auto& a : perms)
                    for (const auto& b : perms) CHECK(act(a * b, tab) == act(a, act(b, tab)));
        }
    }
}

TEST_CASE("column stabilizer") {
    CHECK(ColumnStabilizer(PseudoTableau(3, {{1, 2, 3}})).order() == 1);
    CHECK(ColumnStabilizer(PseudoTableau(3, {{1, 2}, {3}})).order() == 2);
    PseudoTableau big = PseudoTableau::parse("1,2,3;5,6;7");
    ColumnStabilizer cs(big);
    CHECK(cs.order() == 12);
    std::set<Permutation> seen;
    int sign_sum = 0;
    cs.for_each([&](const Permutation& q, int sign) {
        CHECK(q.sign() == sign);
        CHECK(act(q, big).columns().size() == big.columns().size());
        for (std::size_t j = 0; j < big.columns().size(); ++j) {
            auto a = act(q, big).columns()[j], b = big.columns()[j];
            CHECK(std::set<int>(a.begin(), a.end()) == std::set<int>(b.begin(), b.end()));
        }
        seen.insert(q);
        sign_sum += sign;
    });
    CHECK(seen.size() == 12);
    CHECK(sign_sum == 0);
}

TEST_CASE("strip") {
    PseudoTableau full = PseudoTableau::parse("1,2,3,4;5,6;7");
    PseudoTableau s = strip(full, Partition{3, 2, 1});
    CHECK(s.str() == "1,2,3;5,6;7");
    CHECK(s.ambient() == 7);
    CHECK(s.support() == std::vector<int>{1, 2, 3, 5, 6, 7});
    CHECK(strip(full, full.shape()) == full);
    CHECK(strip(PseudoTableau(2, {{1, 2}}), Partition{1}).str() == "1");
    CHECK_THROWS(strip(PseudoTableau::parse("1,2;3,4"), Partition{1, 1}));
    CHECK_THROWS(strip(full, Partition{4, 2, 1, 1}));
}

TEST_CASE("pseudo-tabloid counts") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& shape : partitions_up_to(std::min(n, 5))) {
            Integer expect = binomial(n, shape.size()) * factorial(shape.size());
            for (int part : shape) expect /= factorial(part);
            auto all = all_pseudo_tabloids(shape, n);
            CHECK(Integer(static_cast<long>(all.size())) == expect);
            CHECK(std::set<PseudoTabloid>(all.begin(), all.end()).size() == all.size());
        }
}

TEST_CASE("column filling") {
    CHECK(column_filling(Partition{4, 2, 1}, {1, 2, 3, 4, 5, 6, 7}, 7).str() == "1,4,6,7;2,5;3");
    CHECK(column_filling(Partition{2, 1}, {5, 2, 3}, 5).str() == "2,5;3");
}
