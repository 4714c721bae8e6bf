#include "doctest.h"

#include "confstab/arnold.hpp"

#include <numeric>

using namespace confstab;

namespace {

int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    return n > 1 ? -mu : mu;
}

// Ind from the cyclic group <(1..m)> of sign times a faithful linear character,
// evaluated class by class through Ramanujan sums.
ClassFunction cyclic_induced(int m) {
    ClassFunction chi(m);
    for (int g = 1; g <= m; ++g) {
        if (m % g) continue;
        std::vector<int> parts(g, m / g);
        Partition rho(parts);
        // Each j in 1..m with gcd(j, m) = g gives an element of this class.
        int sign = (m - g) % 2 ? -1 : 1;
        chi.at(rho) = Rational(centralizer_order(rho)) / m * sign * moebius(m / g);
    }
    return chi;
}

ClassFunction regular(int m) {
    ClassFunction chi(m);
    chi[partitions_of(m).size() - 1] = factorial(m);
    return chi;
}

}  // namespace

TEST_CASE("straightening") {
    Straightener even(2), odd(3);
    CHECK(even.straighten({{1, 2}, {1, 2}}).empty());
    CHECK(odd.straighten({{2, 1}}) == ArnoldElement{{{{1, 2}}, -1}});
    CHECK(even.straighten({{2, 1}}) == ArnoldElement{{{{1, 2}}, 1}});
    for (const Straightener& st : {even, odd}) {
        auto r = st.straighten({{1, 3}, {2, 3}});
        for (const auto& [mono, c] : r) CHECK(is_normal(mono));
        ArnoldElement again;
        for (const auto& [mono, c] : r) st.straighten_into(mono, c, again);
        CHECK(again == r);
        // The three-term relation itself straightens to zero.
        ArnoldElement rel;
        st.straighten_into({{1, 2}, {2, 3}}, 1, rel);
        st.straighten_into({{2, 3}, {3, 1}}, 1, rel);
        st.straighten_into({{3, 1}, {1, 2}}, 1, rel);
        CHECK(rel.empty());
    }
    CHECK(monomial_str({{1, 2}, {1, 3}}) == "G1_2*G1_3");
}

TEST_CASE("poincare polynomial and nbc basis") {
    CHECK(poincare_polynomial(2, 4) == std::vector<long>{1, 0, 0, 1});
    CHECK(poincare_polynomial(3, 2) == std::vector<long>{1, 3, 2});
    for (int m = 1; m <= 7; ++m) {
        auto p = poincare_polynomial(m, 2);
        CHECK(p.back() == to_long(factorial(m - 1)));
        for (int k = 0; k < m; ++k) {
            auto basis = nbc_basis(m, k);
            CHECK(static_cast<long>(basis.size()) == p[k]);
            for (const auto& mono : basis) CHECK(is_normal(mono));
        }
    }
}

TEST_CASE("straightening is equivariant") {
    Straightener st(2);
    auto sigma = Permutation::from_images({3, 1, 4, 2});
    for (const auto& mono : nbc_basis(4, 2)) {
        auto before = st.straighten(relabel(sigma, mono));
        ArnoldElement after;
        for (const auto& [m, c] : st.straighten(mono)) st.straighten_into(relabel(sigma, m), c, after);
        CHECK(before == after);
    }
}

TEST_CASE("top characters") {
    CHECK(top_character(2, 2) == ClassFunction::trivial(2));
    CHECK(top_character(2, 3) == ClassFunction::sign(2));
    CHECK(top_character(3, 2) == ClassFunction::irreducible(Partition{2, 1}));
    for (int m = 2; m <= 7; ++m) {
        CHECK(top_character(m, 2).degree() == factorial(m - 1));
        CHECK(top_character(m, 3).degree() == factorial(m - 1));
    }
    for (int m = 2; m <= 6; ++m) {
        CHECK(decompose(top_character(m, 2)) == decompose(cyclic_induced(m)));
        CHECK(decompose(top_character(m, 3))[Partition{m}] == 0);
    }
}

TEST_CASE("parity dependence and total characters") {
    for (int m = 2; m <= 5; ++m)
        for (int k = 0; k < m; ++k) {
            CHECK(arnold_character(m, 2, k) == arnold_character(m, 4, k));
            CHECK(arnold_character(m, 3, k) == arnold_character(m, 5, k));
        }
    for (int m = 2; m <= 5; ++m) {
        ClassFunction odd(m), even(m);
        for (int k = 0; k < m; ++k) {
            odd = odd + arnold_character(m, 3, k);
            even = even + arnold_character(m, 2, k);
        }
        // Odd d: the whole algebra is the regular representation.
        CHECK(odd == regular(m));
        // Even d: twice the permutation character on cosets of a transposition.
        ClassFunction expect(m);
        expect[partitions_of(m).size() - 1] = factorial(m);
        std::vector<int> tau(m - 2, 1);
        tau.insert(tau.begin(), 2);
        expect.at(Partition(tau)) = 2 * factorial(m - 2);
        CHECK(even == expect);
    }
}
