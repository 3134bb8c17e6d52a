#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "test_util.hpp"
#include "wlab/group.hpp"

using namespace wlab;
using testutil::build;
using testutil::build_with_classes;

TEST_CASE("cyclic group of order 4") {
    auto [g, cd] = build_with_classes(catalog::cyclic(4));
    CHECK(g.order() == 4);
    CHECK(cd.count == 4);
    for (long s : cd.sizes) CHECK(s == 1);  // abelian: singleton classes
    int gen = g.generator_element(0);
    CHECK(g.element_order(gen) == 4);
    CHECK(g.element_order(g.identity()) == 1);
    CHECK(g.mul(gen, g.inv(gen)) == g.identity());
}

TEST_CASE("S3 from its regular table") {
    auto [g, cd] = build_with_classes(catalog::symmetric3());
    CHECK(g.order() == 6);
    CHECK(cd.count == 3);
    CHECK(g.exponent() == 6);
}

TEST_CASE("the order-96 group") {
    auto [g, cd] = build_with_classes(catalog::h1());
    CHECK(g.order() == 96);
    CHECK(cd.count == 16);
    CHECK(24 % g.exponent() == 0);  // exponent divides 24
    CHECK(g.exponent() == 24);

    long total = 0;
    for (int c = 0; c < cd.count; ++c) {
        total += cd.sizes[c];
        CHECK(g.order() % cd.sizes[c] == 0);  // class equation terms divide the order
        CHECK(static_cast<long>(cd.members[c].size()) == cd.sizes[c]);
    }
    CHECK(total == 96);

    // class 0 is the identity class
    CHECK(cd.orders[0] == 1);
    CHECK(cd.representatives[0] == g.identity());

    // sizes forced by the orbit counts of the faithful actions
    std::multiset<long> sizes(cd.sizes.begin(), cd.sizes.end());
    CHECK(sizes.count(6) == 6);
    CHECK(sizes.count(8) == 4);
}

TEST_CASE("group multiplication is associative and words evaluate correctly") {
    FinGroup g = build(catalog::quaternion8());
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
            for (int c = 0; c < g.order(); ++c) {
                CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
            }
        }
        // the stored word reproduces the element through generator products
        int acc = g.identity();
        for (int letter : g.word(a)) {
            int gen = letter < g.ngens() ? g.generator_element(letter)
                                         : g.inv(g.generator_element(letter - g.ngens()));
            acc = g.mul(acc, gen);
        }
        CHECK(acc == a);
    }
}

TEST_CASE("power map is consistent with representatives") {
    auto [g, cd] = build_with_classes(catalog::h1());
    for (int c = 0; c < cd.count; ++c) {
        int x = g.identity();
        for (long m = 0; m < cd.group_exponent; ++m) {
            CHECK(cd.power_table[c][m] == cd.class_of[x]);
            x = g.mul(x, cd.representatives[c]);
        }
        CHECK(cd.power_class(c, -1) == cd.class_of[g.inv(cd.representatives[c])]);
        CHECK(cd.power_class(c, cd.group_exponent) == 0);  // rep^exponent = identity
    }
}

TEST_CASE("class data is deterministic across recomputation") {
    auto [g1, cd1] = build_with_classes(catalog::h1());
    auto [g2, cd2] = build_with_classes(catalog::h1());
    CHECK(cd1.representatives == cd2.representatives);
    CHECK(cd1.sizes == cd2.sizes);
    CHECK(cd1.class_of == cd2.class_of);
}

TEST_CASE("non-faithful coset action is rejected when an order is expected") {
    Presentation p = catalog::cyclic(4);
    auto table = todd_coxeter(p, {p.parse_word("a a")});
    CHECK(table.degree() == 2);
    CHECK_THROWS_WITH_AS(FinGroup::from_coset_table(table, 4),
                         doctest::Contains("non-faithful-action"), std::runtime_error);

    // a faithful non-regular action is accepted: S3 on 3 points
    Presentation s3 = catalog::symmetric3();
    auto t3 = todd_coxeter(s3, {s3.parse_word("s")});
    FinGroup g = FinGroup::from_coset_table(t3, 6);
    CHECK(g.order() == 6);
    CHECK(g.degree() == 3);
}
