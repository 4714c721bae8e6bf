#include "doctest.h"

#include "confstab/configspace.hpp"

using namespace confstab;

namespace {

const ManifoldDescriptor& torus() {
    static const auto m = ManifoldDescriptor::load("torus.desc");
    return m;
}
const ManifoldDescriptor& s2() {
    static const auto m = ManifoldDescriptor::load("s2.desc");
    return m;
}
const ManifoldDescriptor& s3() {
    static const auto m = ManifoldDescriptor::load("s3.desc");
    return m;
}

long degree_of(const ClassFunction& chi) { return to_long(chi.degree()); }

long invariants(const ClassFunction& chi) { return to_long(chi.inner(ClassFunction::trivial(chi.n()))); }

// Coefficients of a product of polynomials given by their coefficient lists.
std::vector<long> poly_product(const std::vector<std::vector<long>>& factors) {
    std::vector<long> out{1};
    for (const auto& f : factors) {
        std::vector<long> next(out.size() + f.size() - 1, 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += out[i] * f[j];
        out = next;
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

TEST_CASE("E2 dimensions by hand") {
    std::vector<long> row0, row1;
    for (int p = 0; p <= 4; ++p) {
        row0.push_back(degree_of(e2_character(torus(), 2, p, 0)));
        row1.push_back(degree_of(e2_character(torus(), 2, p, 1)));
    }
    CHECK(row0 == std::vector<long>{1, 4, 6, 4, 1});
    CHECK(row1 == std::vector<long>{1, 2, 1, 0, 0});
    // n = 1 is M itself.
    for (int p = 0; p <= 2; ++p) CHECK(degree_of(e2_character(torus(), 1, p, 0)) == torus().betti()[p]);
    CHECK(e2_page(torus(), 1).size() == 3);
    // q not divisible by d-1 gives zero.
    CHECK(degree_of(e2_character(s3(), 3, 0, 1)) == 0);
    CHECK(degree_of(e2_character(s3(), 3, 0, 2)) == 3);
}

TEST_CASE("q = 0 row is the tensor power") {
    // Permutation character of H^*(T^2)^{(x)2} in degree 2 by hand: a(x)b, b(x)a swap with sign -1.
    auto chi = e2_character(torus(), 2, 2, 0);
    CHECK(chi.at(Partition{1, 1}) == 6);
    // pt(x)1 <-> 1(x)pt swap; a(x)a and b(x)b are fixed with sign -1; a(x)b <-> b(x)a.
    CHECK(chi.at(Partition{2}) == -2);
}

TEST_CASE("explicit cells agree with the character backend") {
    for (const ManifoldDescriptor* M : {&torus(), &s2(), &s3()})
        for (int n = 1; n <= 4; ++n) {
            E2Complex cx(*M, n);
            auto page = e2_page(*M, n);
            std::size_t cells = 0;
            for (const auto& [b, keys] : cx.cells()) {
                INFO(M->name() << " n=" << n << " p=" << b.p << " k=" << b.k);
                REQUIRE(page.count(b));
                CHECK(cx.cell_character(b) == page.at(b));
                ++cells;
            }
            CHECK(cells == page.size());
        }
}

TEST_CASE("differential squares to zero") {
    for (int n = 2; n <= 4; ++n) CHECK(E2Complex(torus(), n).squares_to_zero());
    CHECK(E2Complex(s2(), 3).squares_to_zero());
    CHECK(E2Complex(s3(), 4).squares_to_zero());
}

TEST_CASE("ordered Betti numbers") {
    // C_2(S^2) retracts onto S^2.
    CHECK(E2Complex(s2(), 2).ordered_betti() == std::vector<long>{1, 0, 1, 0, 0});
    // C_n(S^3) ~ S^3 x C_{n-1}(R^3) in cohomology.
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::vector<long>> factors{{1, 0, 0, 1}};
        for (int i = 1; i <= n - 2; ++i) factors.push_back({1, 0, i});
        auto betti = E2Complex(s3(), n).ordered_betti();
        while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
        CHECK(betti == poly_product(factors));
    }
    // C_2(T^2) = T^2 x (T^2 - pt).
    auto t2 = E2Complex(torus(), 2).ordered_betti();
    CHECK(t2 == std::vector<long>{1, 4, 5, 2, 0});
}

TEST_CASE("Euler characteristic is preserved") {
    for (const ManifoldDescriptor* M : {&torus(), &s2(), &s3()})
        for (int n = 1; n <= 4; ++n) {
            E2Complex cx(*M, n);
            long chi_e2 = 0, chi_h = 0;
            for (const auto& [b, keys] : cx.cells())
                chi_e2 += ((b.p + b.k * (M->dim() - 1)) % 2 ? -1 : 1) * static_cast<long>(keys.size());
            auto betti = cx.ordered_betti();
            for (std::size_t i = 0; i < betti.size(); ++i) chi_h += (i % 2 ? -1 : 1) * betti[i];
            CHECK(chi_e2 == chi_h);
            // chi(C_n(M)) = prod_{j<n} (chi(M) - j)
            long expect = 1;
            for (int j = 0; j < n; ++j) expect *= M->euler_characteristic() - j;
            CHECK(chi_h == expect);
        }
}

TEST_CASE("invariant complex") {
    for (const ManifoldDescriptor* M : {&torus(), &s2(), &s3()})
        for (int n = 1; n <= 5; ++n) {
            InvariantComplex inv(*M, n);
            CHECK(inv.squares_to_zero());
            for (const auto& [b, chi] : e2_page(*M, n)) {
                INFO(M->name() << " n=" << n << " p=" << b.p << " k=" << b.k);
                CHECK(static_cast<long>(inv.cell_dim(b)) == invariants(chi));
            }
        }
}

TEST_CASE("transfer consistency") {
    for (int n = 1; n <= 4; ++n) {
        E2Complex cx(torus(), n);
        InvariantComplex inv(torus(), n);
        for (int i = 0; i <= cx.max_total_degree(); ++i)
            CHECK(invariants(cx.total_cohomology_character(i)) == inv.betti(i));
    }
}

TEST_CASE("torus unordered Betti numbers") {
    CHECK(betti_unordered(torus(), 2, 2) == 1);
    CHECK(betti_unordered(torus(), 3, 2) == 3);
    CHECK(betti_unordered(torus(), 4, 2) == 3);
    CHECK(betti_unordered(torus(), 3, 3) == 4);
    CHECK(betti_unordered(torus(), 4, 3) == 5);
    CHECK(betti_unordered(torus(), 4, 4) == 4);
    CHECK(betti_unordered(torus(), 5, 4) == 7);
    for (int n = 2; n <= 5; ++n) CHECK(betti_unordered(torus(), n, 1) == 2);
    CHECK(betti_unordered(torus(), 1, 1) == 2);
}

TEST_CASE("sphere first Betti number vanishes") {
    for (int n = 2; n <= 4; ++n) CHECK(betti_unordered(s2(), n, 1) == 0);
    auto cp1 = ManifoldDescriptor::load("cp1.desc");
    for (int n = 2; n <= 4; ++n) CHECK(betti_unordered_all(cp1, n) == betti_unordered_all(s2(), n));
}

TEST_CASE("odd dimension closed form") {
    for (int n = 1; n <= 6; ++n) {
        auto all = betti_unordered_all(s3(), n);
        CHECK(all == std::vector<long>{1, 0, 0, 1});
        for (int i = 0; i <= 6; ++i) CHECK(betti_unordered(s3(), n, i) == graded_invariants_dim({1, 0, 0, 1}, n, i));
    }
}

TEST_CASE("graded invariants") {
    CHECK(graded_invariants_dim({1, 0, 0, 1}, 5, 3) == 1);
    CHECK(graded_invariants_dim({1, 0, 0, 1}, 5, 0) == 1);
    CHECK(graded_invariants_dim({1, 0, 0, 1}, 5, 6) == 0);
    // Lambda^p V^(1) with V^(1) of dim p appears first at n = p.
    for (int p = 1; p <= 4; ++p) {
        CHECK(graded_invariants_dim({1, p}, p - 1, p) == 0);
        CHECK(graded_invariants_dim({1, p}, p, p) == 1);
    }
    // Brute force: torus tensor powers.
    for (int n = 1; n <= 5; ++n)
        for (int p = 0; p <= 2 * n; ++p)
            CHECK(graded_invariants_dim({1, 2, 1}, n, p) == invariants(e2_character(torus(), n, p, 0)));
    // Stabilization once n >= floor(p/k) when V^(1..k-1) vanish.
    std::vector<long> V{1, 0, 0, 2, 1, 0, 3};
    for (int p = 0; p <= 12; ++p) {
        long stable = graded_invariants_dim(V, 12, p);
        for (int n = std::max(1, p / 3); n <= 12; ++n) CHECK(graded_invariants_dim(V, n, p) == stable);
    }
    CHECK_THROWS(graded_invariants_dim({2, 1}, 3, 1));
}

TEST_CASE("colored Betti numbers") {
    for (int n = 2; n <= 3; ++n)
        for (int i = 0; i <= 3; ++i) {
            CHECK(colored_betti(torus(), n, i, Partition{}) == betti_unordered(torus(), n, i));
            std::vector<int> ones(n, 1);
            auto ordered = E2Complex(torus(), n).ordered_betti();
            CHECK(colored_betti(torus(), n, i, Partition(ones)) == ordered[i]);
            CHECK(colored_betti(torus(), n, i, Partition{n}) == betti_unordered(torus(), n, i));
        }
    // S^3 with one marked point: constant from max(2i, 2|mu|).
    for (int i = 0; i <= 2; ++i) {
        int from = std::max({2 * i, 2, 1});
        long stable = colored_betti(s3(), 5, i, Partition{1});
        for (int n = from; n <= 5; ++n) CHECK(colored_betti(s3(), n, i, Partition{1}) == stable);
    }
}

TEST_CASE("blocks reassemble the E2 page") {
    for (int p = 0; p <= 2; ++p)
        for (int k = 0; k <= 2; ++k) {
            auto blocks = e2_blocks(torus(), p, k, 6);
            for (int n = std::max(1, k + 1); n <= 6; ++n) {
                ClassFunction sum(n);
                for (const auto& b : blocks) {
                    if (b.k > n) continue;
                    sum = sum + induced_character(block_character(torus(), b.mu, b.r, b.alpha), n);
                }
                INFO("p=" << p << " k=" << k << " n=" << n);
                CHECK(sum == e2_character(torus(), n, p, k));
            }
            for (const auto& b : blocks) CHECK(b.onset <= 2 * b.k);
        }
    // mu = (1^q), r = 0, alpha = (1^p): onset k + (longest first row in V), which is 2k = 4q + 2p
    // exactly when V contains the trivial representation.
    auto sharp = [](int q, int p) {
        auto v = block_character(torus(), Partition(std::vector<int>(q, 1)), 0, Partition(std::vector<int>(p, 1)));
        int first_row = 0;
        for (const auto& [lambda, c] : decompose(v).counts) first_row = std::max(first_row, lambda.part(0));
        return std::tuple{v.n(), induced_onset(v, 2 * v.n() + 1), first_row};
    };
    for (auto [q, p] : {std::pair{1, 0}, {1, 1}, {1, 2}, {0, 2}}) {
        auto [k, onset, row] = sharp(q, p);
        CHECK(k == 2 * q + p);
        CHECK(onset == 4 * q + 2 * p);
        CHECK(row == k);
    }
    for (auto [q, p] : {std::pair{2, 0}, {2, 1}, {0, 3}}) {
        auto [k, onset, row] = sharp(q, p);
        CHECK(onset == k + row);
        CHECK(onset < 4 * q + 2 * p);
    }
    // Two odd Arnold classes anticommute, so V = V_(3,1) and the onset is 7.
    auto w = block_character(torus(), Partition{1, 1}, 0, Partition{});
    CHECK(decompose(w).str() == "(3,1)");
    CHECK(induced_onset(w, 9) == 7);
}

TEST_CASE("sign-isotypic part of H^r(M^q) vanishes below kq - k") {
    for (const ManifoldDescriptor* M : {&torus(), &s2(), &s3()}) {
        int k = M->first_positive_degree();
        for (int q = 1; q <= 5; ++q)
            for (int r = 0; r < k * q - k; ++r)
                CHECK(e2_character(*M, q, r, 0).inner(ClassFunction::sign(q)) == 0);
    }
}

TEST_CASE("forgetting a point is injective on invariants") {
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < n; ++i) CHECK(forget_point_injective(torus(), n, i));
}

TEST_CASE("stable range report") {
    auto lines = stable_range_report(torus(), 3);
    CHECK(lines[0].formula == "n >= 4i");
    CHECK(lines[0].bound == "n >= 12");
    CHECK(lines[1].formula == "n > i");
    CHECK(lines[1].bound == "n >= 4");
    auto l3 = stable_range_report(s3(), 3, Partition{2});
    CHECK(l3[0].bound == "n >= 6");
    CHECK(l3.back().formula == "n >= max(2i, 2|mu|)");
    CHECK(l3.back().bound == "n >= 6");
    // b1 = b2 = 0 with d >= 4.
    auto six = ManifoldDescriptor::parse(
        "dim 6\nflag orientable\nclass 1 0\nclass x 3\nclass y 3\nclass pt 6\nmul x y pt 1\n", "six.desc");
    auto l6 = stable_range_report(six, 6);
    CHECK(l6[2].formula == "n >= i/k+1 (k=3)");
    CHECK(l6[2].bound == "n >= 3");
    CHECK(format_range_report(l6).rfind("kind\tformula\tbound\n", 0) == 0);
}

TEST_CASE("computability regimes") {
    auto bare = ManifoldDescriptor::parse("dim 2\nflag orientable\nclass 1 0\nclass pt 2\n", "bare.desc");
    CHECK_THROWS_AS(betti_unordered(bare, 3, 2), NotComputable);
    auto flagged = ManifoldDescriptor::parse("dim 2\nflag orientable\nflag single_differential\nclass 1 0\nclass pt 2\n");
    CHECK_THROWS_AS(betti_unordered(flagged, 3, 2), MissingDiagonal);
    CHECK_THROWS_AS(E2Complex(bare, 2), MissingDiagonal);
    auto s3_bare = ManifoldDescriptor::parse("dim 3\nflag orientable\nclass 1 0\nclass pt 3\n");
    CHECK(betti_unordered(s3_bare, 4, 3) == 1);
    setenv("CONFSTAB_BUDGET", "100", 1);
    CHECK_THROWS_AS(E2Complex(torus(), 4), BudgetExceeded);
    unsetenv("CONFSTAB_BUDGET");
}
