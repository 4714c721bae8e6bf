#include "doctest.h"

#include "confstab/manifold.hpp"

using namespace confstab;

TEST_CASE("bundled descriptors load") {
    auto t = ManifoldDescriptor::load("torus.desc");
    CHECK(t.name() == "torus");
    CHECK(t.dim() == 2);
    CHECK(t.betti() == std::vector<long>{1, 2, 1});
    CHECK(t.euler_characteristic() == 0);
    CHECK(t.first_positive_degree() == 1);
    CHECK(t.has_flag("single_differential"));
    CHECK(t.has_diagonal());
    int a = t.class_index("a"), b = t.class_index("b"), pt = t.class_index("pt");
    CHECK(t.multiply(a, b) == ManifoldDescriptor::Combination{{pt, 1}});
    CHECK(t.multiply(b, a) == ManifoldDescriptor::Combination{{pt, -1}});
    CHECK(t.multiply(a, a).empty());
    CHECK(t.multiply(t.unit(), a) == ManifoldDescriptor::Combination{{a, 1}});

    auto s2 = ManifoldDescriptor::load("s2.desc");
    CHECK(s2.euler_characteristic() == 2);
    CHECK(s2.diagonal().size() == 2);
    auto cp1 = ManifoldDescriptor::load("cp1.desc");
    CHECK(cp1.betti() == s2.betti());
    auto s3 = ManifoldDescriptor::load("s3.desc");
    CHECK(s3.first_positive_degree() == 3);
    CHECK(s3.euler_characteristic() == 0);
}

TEST_CASE("descriptor validation") {
    const std::string head = "dim 2\nflag orientable\n";
    CHECK_THROWS_WITH_AS(ManifoldDescriptor::parse(head + "class 1 0\nclass u 0\nclass pt 2\n"),
                         doctest::Contains("connected"), DescriptorError);
    CHECK_THROWS_WITH_AS(ManifoldDescriptor::parse(head + "class 1 0\nclass pt 2\nbogus line\n", "x.desc"),
                         doctest::Contains("x.desc:5"), DescriptorError);
    CHECK_THROWS_WITH_AS(ManifoldDescriptor::parse(head + "class 1 0\nclass a 1\nclass pt 2\nmul a a 1 1\n"),
                         doctest::Contains("wrong degree"), DescriptorError);
    // a*a must vanish for an odd class.
    CHECK_THROWS_WITH_AS(ManifoldDescriptor::parse(head + "class 1 0\nclass a 1\nclass pt 2\nmul a a pt 1\n"),
                         doctest::Contains("commutativity"), DescriptorError);
    CHECK_THROWS_WITH_AS(
        ManifoldDescriptor::parse(head + "class 1 0\nclass a 1\nclass b 1\nclass pt 2\nmul a b pt 1\nmul b a pt 1\n"),
        doctest::Contains("commutativity"), DescriptorError);
    // Odd terms of the torus diagonal with the wrong relative sign.
    CHECK_THROWS_WITH_AS(ManifoldDescriptor::parse(head +
                                                   "class 1 0\nclass a 1\nclass b 1\nclass pt 2\nmul a b pt 1\n"
                                                   "diag 1 pt 1\ndiag pt 1 1\ndiag a b 1\ndiag b a -1\n"),
                         doctest::Contains("duality"), DescriptorError);
    // A global sign is accepted.
    CHECK_NOTHROW(ManifoldDescriptor::parse(head + "class 1 0\nclass pt 2\ndiag 1 pt -1\ndiag pt 1 -1\n"));
    CHECK_THROWS_WITH_AS(ManifoldDescriptor::parse(head + "class 1 0\nclass pt 2\ndiag 1 pt 2\ndiag pt 1 1\n"),
                         doctest::Contains("duality"), DescriptorError);
    CHECK_THROWS_AS(ManifoldDescriptor::parse("flag orientable\nclass 1 0\n"), DescriptorError);
    CHECK_THROWS_AS(ManifoldDescriptor::parse(head + "flag nonorientable\nclass 1 0\nclass pt 2\n"), DescriptorError);
    CHECK_THROWS_AS(ManifoldDescriptor::load("no_such.desc"), DescriptorError);

    auto m = ManifoldDescriptor::parse(head + "class 1 0\nclass x 2\nmul x x x 0\n# comment\n\n");
    CHECK(m.num_classes() == 2);
    CHECK(m.str().find("betti\t1,0,1") != std::string::npos);
}
