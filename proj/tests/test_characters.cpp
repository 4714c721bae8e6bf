#include "doctest.h"

#include "confstab/characters.hpp"
#include "confstab/permutation.hpp"

#include <chrono>

using namespace confstab;

namespace {

ClassFunction values(int n, std::vector<long> v) {
    ClassFunction f(n);
    for (std::size_t i = 0; i < v.size(); ++i) f[i] = v[i];
    return f;
}

// Block of each point under the Young subgroup S_mu1 x ... x S_rest.
std::vector<int> blocks_of(const Partition& mu, int n) {
    std::vector<int> b;
    int id = 0;
    for (int part : mu) {
        b.insert(b.end(), part, id);
        ++id;
    }
    b.insert(b.end(), n - mu.size(), id);
    return b;
}

bool preserves(const Permutation& g, const std::vector<int>& block) {
    for (int x = 1; x <= g.degree(); ++x)
        if (block[g(x) - 1] != block[x - 1]) return false;
    return true;
}

// Ind_{S_k x S_{n-k}}^{S_n}(chi x 1) summed over the whole group.
ClassFunction brute_induced(const ClassFunction& chi, int n) {
    int k = chi.n();
    auto perms = all_permutations(n);
    std::vector<int> block = blocks_of(Partition{k}, n);
    if (k == 0) block.assign(n, 0);
    Integer h = factorial(k) * factorial(n - k);
    ClassFunction out(n);
    for (std::size_t c = 0; c < partitions_of(n).size(); ++c) {
        Permutation g = Permutation::from_cycle_type(partitions_of(n)[c]);
        Rational total = 0;
        for (const auto& x : perms) {
            Permutation y = x.inverse() * g * x;
            if (!preserves(y, block)) continue;
            std::vector<int> img;
            for (int i = 1; i <= k; ++i) img.push_back(y(i));
            total += chi.at(Permutation::from_images(img).cycle_type());
        }
        out[c] = total / Rational(h);
    }
    return out;
}

}  // namespace

TEST_CASE("character table examples") {
    const auto& t = character_table(3);
    for (const auto& rho : partitions_of(3)) CHECK(t.value(Partition{3}, rho) == 1);
    CHECK(t.value(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(t.value(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(t.value(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(t.value(Partition{2, 1}, Partition{3}) == -1);
    CHECK(character_table(1).value(Partition{1}, Partition{1}) == 1);
    CHECK_THROWS(character_table(kMaxCharacterDegree + 1));
}

TEST_CASE("orthogonality") {
    for (int n = 1; n <= 10; ++n) {
        const auto& t = character_table(n);
        const auto& parts = partitions_of(n);
        for (std::size_t a = 0; a < parts.size(); ++a) {
            CHECK(t.value(a, parts.size() - 1) == dim_irrep(parts[a]));
            for (std::size_t b = 0; b < parts.size(); ++b) CHECK(t.row(a).inner(t.row(b)) == (a == b ? 1 : 0));
        }
        for (std::size_t c = 0; c < parts.size(); ++c)
            for (std::size_t e = 0; e < parts.size(); ++e) {
                Integer s = 0;
                for (std::size_t a = 0; a < parts.size(); ++a) s += Integer(t.value(a, c)) * t.value(a, e);
                CHECK(s == (c == e ? centralizer_order(parts[c]) : Integer(0)));
            }
    }
}

TEST_CASE("table for n = 12 builds quickly") {
    auto start = std::chrono::steady_clock::now();
    CHECK(character_table(12).labels().size() == 77);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(10));
}

TEST_CASE("class sizes sum to n!") {
    for (int n = 0; n <= 10; ++n) {
        Integer s = 0;
        for (const auto& rho : partitions_of(n)) s += class_size(rho);
        CHECK(s == factorial(n));
    }
}

TEST_CASE("decompose") {
    auto reg = decompose(values(3, {0, 0, 6}));
    CHECK(reg[Partition{3}] == 1);
    CHECK(reg[Partition{2, 1}] == 2);
    CHECK(reg[Partition{1, 1, 1}] == 1);
    auto perm = decompose(values(3, {0, 1, 3}));
    CHECK(perm.counts.size() == 2);
    CHECK(perm[Partition{3}] == 1);
    CHECK(perm[Partition{2, 1}] == 1);
    auto irr = decompose(ClassFunction::irreducible(Partition{2, 1}));
    CHECK(irr.counts.size() == 1);
    CHECK(irr[Partition{2, 1}] == 1);
    CHECK(reg.dimension() == 6);
    CHECK_THROWS_AS(decompose(values(3, {0, 0, 1})), NotACharacter);
    CHECK_THROWS_AS(decompose(ClassFunction::trivial(3) - ClassFunction::sign(3)), NotACharacter);
}

TEST_CASE("multiplicities are additive") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                ClassFunction x = ClassFunction::irreducible(a) * Rational(2);
                ClassFunction y = induced_character(ClassFunction::irreducible(Partition{1}), n) * ClassFunction::irreducible(b);
                CHECK(decompose(x + y) == decompose(x) + decompose(y));
            }
}

TEST_CASE("induction agrees with summing over the group") {
    CHECK(induced_character(ClassFunction::trivial(1), 3) == values(3, {0, 1, 3}));
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& lambda : partitions_of(k))
                CHECK(induced_character(ClassFunction::irreducible(lambda), n) ==
                      brute_induced(ClassFunction::irreducible(lambda), n));
    auto d = decompose(induced_character(ClassFunction::irreducible(Partition{2}), 4));
    CHECK(d.counts == decltype(d.counts){{Partition{4}, 1}, {Partition{3, 1}, 1}, {Partition{2, 2}, 1}});
}

TEST_CASE("branching rule") {
    for (int k = 0; k <= 5; ++k)
        for (const auto& lambda : partitions_of(k))
            for (int n = std::max(k, 1); n <= 8; ++n) {
                auto d = decompose(induced_character(ClassFunction::irreducible(lambda), n));
                MultiplicityVector expect;
                expect.n = n;
                for (const auto& mu : leadsto(lambda, n)) expect.counts[mu] = 1;
                CHECK(d == expect);
                Integer dim = Integer(dim_irrep(lambda)) * binomial(n, k);
                CHECK(d.dimension() == to_long(dim));
            }
}

TEST_CASE("young invariants") {
    for (int n = 1; n <= 6; ++n) CHECK(young_invariants_dim(Partition{n}, Partition{n / 2}) == 1);
    CHECK(young_invariants_dim(Partition{3, 1}, Partition{1}) == 1);
    CHECK(young_invariants_dim(Partition{1, 1, 1}, Partition{2}) == 0);
    // Average of chi over the Young subgroup, enumerated.
    for (int n = 1; n <= 6; ++n) {
        auto perms = all_permutations(n);
        for (const auto& mu : partitions_up_to(3)) {
            if (mu.size() > n) continue;
            auto block = blocks_of(mu, n);
            for (const auto& lambda : partitions_of(n)) {
                Rational s = 0;
                long order = 0;
                for (const auto& g : perms)
                    if (preserves(g, block)) {
                        s += character_table(n).value(lambda, g.cycle_type());
                        ++order;
                    }
                CHECK(Rational(young_invariants_dim(lambda, mu)) == s / order);
            }
        }
    }
}

TEST_CASE("partition chains") {
    CHECK(count_partition_chains(Partition{}, Partition{1}, 3) == 1);
    CHECK(count_partition_chains(Partition{1}, Partition{1}, 4) == 1);
    CHECK(young_invariants_dim(Partition{3, 1}, Partition{1}) == 1);
    CHECK_THROWS(count_partition_chains(Partition{3}, Partition{1}, 4));
    for (const auto& lambda : partitions_up_to(3))
        for (const auto& mu : partitions_up_to(3))
            for (int n = std::max(mu.size(), lambda.size() + lambda.part(0)); n <= 8; ++n) {
                long c = count_partition_chains(lambda, mu, n);
                CHECK(c == young_invariants_dim(pad(lambda, n), mu));
                if (n >= 2 * mu.size() && n + 1 <= 9) CHECK(c == count_partition_chains(lambda, mu, n + 1));
            }
}
