#include "doctest.h"

#include "confstab/stability.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include "json.hpp"

using namespace confstab;

namespace {

// Padded multiplicities of I_n(M^lambda) through the Young rule: independent of the module code.
MultiplicityVector young_rule(const Partition& lambda, int n) {
    MultiplicityVector m;
    m.n = n;
    std::vector<int> composition = lambda.parts();
    composition.push_back(n - lambda.size());
    for (const auto& nu : partitions_of(n)) {
        long c = young_invariants_dim(nu, Partition(composition));
        if (c) m.counts[nu] = c;
    }
    return m;
}

}  // namespace

TEST_CASE("trivial and standard sequences are stable from 2") {
    auto triv = induced_tabloid_sequence(Partition{}, 1, 5);
    auto rep = check_uniform_stability(triv, 2);
    CHECK(rep.ok());
    CHECK(rep.stable_from() <= 2);

    // Q^n = I_n(M^(1)) = trivial + standard.
    auto qn = induced_tabloid_sequence(Partition{1}, 1, 6);
    auto r2 = check_uniform_stability(qn, 2);
    CHECK(r2.ok());
    CHECK(r2.stable_from() == 2);
    CHECK(qn.multiplicities(4)[Partition{3, 1}] == 1);
    CHECK(qn.multiplicities(4)[Partition{4}] == 1);
    CHECK(check_monotone(qn, 1).ok());
}

TEST_CASE("induced Specht sequences are stable from 2k") {
    for (const auto& lambda : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}, Partition{1, 1, 1}}) {
        int k = lambda.size();
        auto seq = induced_specht_sequence(lambda, k, 2 * k + 1);
        auto rep = check_uniform_stability(seq, 2 * k);
        INFO(lambda.str() << "\n" << rep.str());
        CHECK(rep.ok());
        CHECK(rep.stable_from() <= 2 * k);
        CHECK(check_monotone(seq, k).ok());
    }
}

TEST_CASE("induced tabloid modules match the Young rule") {
    for (const auto& lambda : {Partition{2}, Partition{1, 1}, Partition{2, 1}})
        for (int n = lambda.size(); n <= 6; ++n) {
            auto seq = induced_tabloid_sequence(lambda, lambda.size(), n);
            CHECK(seq.multiplicities(n) == young_rule(lambda, n));
        }
}

TEST_CASE("zero maps break stability with witnesses") {
    auto seq = zero_map_sequence(Partition{1}, 1, 4);
    auto rep = check_uniform_stability(seq, 2);
    CHECK_FALSE(rep.ok());
    CHECK(rep.failures.front().n == 2);
    auto mono = check_monotone(seq, 1);
    CHECK_FALSE(mono.ok());
    CHECK(mono.monotone_from == 4);

    auto path = std::filesystem::temp_directory_path() / "confstab_witness.json";
    write_witness(rep, "zero maps", path.string());
    auto j = nlohmann::json::parse(std::ifstream(path));
    CHECK(j["label"] == "zero maps");
    CHECK(j["failures"].size() == rep.failures.size());
    CHECK(j["failures"][0]["n"] == 2);
}

TEST_CASE("window too small") {
    auto seq = induced_tabloid_sequence(Partition{1}, 1, 3);
    CHECK_THROWS_AS(check_uniform_stability(seq, 3), InsufficientWindow);
    CHECK_THROWS_AS(check_uniform_stability(seq, 0), InsufficientWindow);
}

TEST_CASE("multiplicity onset from counts") {
    std::map<int, MultiplicityVector> counts;
    for (int n = 2; n <= 6; ++n) counts[n] = young_rule(Partition{1, 1}, n);
    auto seq = ConsistentSequence::from_multiplicities(counts);
    CHECK_FALSE(seq.is_explicit());
    // M^(n-2,1,1) picks up (n-2,2) only once n >= 4.
    CHECK(multiplicity_onset(seq) == 4);
}

TEST_CASE("direct sums and quotients") {
    auto a = induced_specht_sequence(Partition{1}, 2, 5);
    auto b = induced_specht_sequence(Partition{2}, 2, 5);
    auto s = direct_sum(a, b);
    for (int n = 2; n <= 5; ++n) CHECK(s.multiplicities(n) == a.multiplicities(n) + b.multiplicities(n));
    CHECK(check_uniform_stability(s, 4).ok());

    auto v = induced_tabloid_sequence(Partition{2}, 2, 5);
    auto w = induced_specht_sequence(Partition{2}, 2, 5);
    auto q = quotient(v, w);
    for (int n = 2; n <= 5; ++n) {
        auto expect = v.multiplicities(n);
        for (const auto& [nu, c] : w.multiplicities(n).counts) expect.counts[nu] -= c;
        std::erase_if(expect.counts, [](const auto& e) { return e.second == 0; });
        CHECK(q.multiplicities(n) == expect);
    }
    CHECK(check_monotone(q, 2).ok());
}

TEST_CASE("row merges") {
    RowMerge f{Partition{1, 1}, 0, 1};
    CHECK(f.target() == Partition{2});
    auto ker = merge_kernel(f, 2, 5);
    auto im = merge_image(f, 2, 5);
    for (int n = 2; n <= 5; ++n) {
        // M^(1,1) -> M^(2) is onto with kernel of dimension n(n-1) - n(n-1)/2.
        CHECK(im.level(n).dim() == static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(ker.level(n).dim() == static_cast<std::size_t>(n * (n - 1) / 2));
    }
    CHECK(check_monotone(ker, 2).ok());
    CHECK(check_uniform_stability(ker, 4).ok());

    RowMerge g{Partition{2, 1}, 0, 1};
    CHECK(g.target() == Partition{3});
    RowMerge h{Partition{1, 1, 1}, 1, 2};
    CHECK(h.target() == Partition{2, 1});
    CHECK(h.merged_position() == 0);
}

TEST_CASE("property suite") {
    auto rep = property_suite(12345, 24, 7);
    CHECK(rep.cases.size() == 24);
    std::set<std::string> props;
    for (const auto& c : rep.cases) {
        INFO(c.label << " " << c.property << "\n" << c.detail);
        CHECK(c.ok);
        props.insert(c.property);
    }
    CHECK(props.size() == 6);
    CHECK(rep.ok());
}

TEST_CASE("range propagation") {
    auto rows = propagate_ranges({2, 0}, 4);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r.stable.str() == "n >= 2(p+q)");
        CHECK(r.monotone.str() == "n >= 2(p+q-1)");
    }
    CHECK(propagate_ranges({4, 0}, 2)[0].stable.str() == "n >= 4(p+q)");
    CHECK(propagate_ranges({1, 1}, 3)[1].stable.str() == "n >= p+q+1");
    CHECK(propagate_ranges({1, 1}, 3)[1].monotone.str() == "n >= p+q");
    CHECK(propagate_ranges({Rational(1, 2), 0}, 2)[0].stable.str() == "n >= (p+q)/2");
    CHECK(propagate_ranges({Rational(3, 2), 2}, 2)[0].stable.str() == "n >= 3(p+q+2)/2");
    CHECK_THROWS(propagate_ranges({0, 0}, 3));
    CHECK_THROWS(max_bound({1, 0}, {2, 0}));
    auto text = format_ranges({2, 0}, rows);
    CHECK(text.find("3\tn >= 2(p+q)\tn >= 2(p+q-1)") != std::string::npos);
}
