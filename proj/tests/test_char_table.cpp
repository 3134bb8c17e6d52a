#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "wlab/char_table.hpp"

using namespace wlab;
using testutil::build_with_classes;

TEST_CASE("S3: degrees 1, 1, 2 and the hand table") {
    auto [g, cd] = build_with_classes(catalog::symmetric3());
    CharTable x = dixon_schneider(g, cd);
    CHECK(x.degrees == std::vector<long>{1, 1, 2});
    CHECK(sum_of_degrees(x) == 4);

    // canonical class order: identity, transpositions (size 3), 3-cycles (size 2)
    REQUIRE(cd.sizes == std::vector<long>{1, 3, 2});
    auto row = [&](int i) {
        std::vector<long> out;
        for (const auto& v : x.rows[i].values) out.push_back(v.to_rational().get_num().get_si());
        return out;
    };
    CHECK(row(0) == std::vector<long>{1, 1, 1});
    CHECK(row(1) == std::vector<long>{1, -1, 1});
    CHECK(row(2) == std::vector<long>{2, 0, -1});
}

TEST_CASE("cyclic group of order 4: four linear characters with values in <i>") {
    auto [g, cd] = build_with_classes(catalog::cyclic(4));
    CharTable x = dixon_schneider(g, cd);
    CHECK(x.degrees == std::vector<long>{1, 1, 1, 1});

    // expected rows: chi_j(a^k) = i^(jk); compare as a set, independent of
    // row order and of which class holds which power of the generator
    int gen = g.generator_element(0);
    std::vector<long> dlog(4);  // class -> exponent of the generator
    int e = g.identity();
    for (long m = 0; m < 4; ++m) {
        dlog[cd.class_of[e]] = m;
        e = g.mul(e, gen);
    }
    std::set<std::string> expected;
    for (long j = 0; j < 4; ++j) {
        std::string key;
        for (int c = 0; c < 4; ++c) {
            key += Cyclotomic::root_of_unity(4, j * dlog[c]).str() + "|";
        }
        expected.insert(key);
    }
    std::set<std::string> actual;
    for (const auto& r : x.rows) {
        std::string key;
        for (const auto& v : r.values) key += v.promoted(4).str() + "|";
        actual.insert(key);
    }
    CHECK(actual == expected);
}

TEST_CASE("the order-96 table") {
    auto [g, cd] = build_with_classes(catalog::h1());
    CharTable x = dixon_schneider(g, cd);
    REQUIRE(x.count() == 16);
    CHECK(x.conductor == 24);

    std::multiset<long> degrees(x.degrees.begin(), x.degrees.end());
    CHECK(degrees == std::multiset<long>{1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4});
    CHECK(sum_of_degrees(x) == 36);

    long sq = 0;
    for (long d : x.degrees) sq += d * d;
    CHECK(sq == 96);

    // the trivial character leads
    for (const auto& v : x.rows[0].values) CHECK(v == Cyclotomic::from_integer(1, 24));

    // conj(chi(g)) = chi(g^-1) for every irreducible and every class
    for (const auto& r : x.rows) {
        for (int c = 0; c < cd.count; ++c) {
            CHECK(r.values[c].conj() == r.values[cd.inverse_class(c)]);
        }
    }
}

TEST_CASE("orthogonality through the public inner product") {
    auto [g, cd] = build_with_classes(catalog::quaternion8());
    CharTable x = dixon_schneider(g, cd);
    for (int i = 0; i < x.count(); ++i) {
        for (int j = 0; j < x.count(); ++j) {
            Cyclotomic ip = inner_product(x.rows[i], x.rows[j], cd);
            CHECK(ip == Cyclotomic::from_integer(i == j ? 1 : 0));
        }
    }
}

TEST_CASE("trivial group") {
    auto [g, cd] = build_with_classes(catalog::cyclic(1));
    CharTable x = dixon_schneider(g, cd);
    REQUIRE(x.count() == 1);
    CHECK(x.degrees == std::vector<long>{1});
    CHECK(sum_of_degrees(x) == 1);
}

TEST_CASE("matrix inverse over the cyclotomic field") {
    auto [g, cd] = build_with_classes(catalog::symmetric3());
    CharTable x = dixon_schneider(g, cd);
    const auto& inv = x.inverse();
    for (int i = 0; i < x.count(); ++i) {
        for (int j = 0; j < x.count(); ++j) {
            Cyclotomic acc;
            for (int k = 0; k < x.count(); ++k) acc += x.rows[i].values[k] * inv[k][j];
            CHECK(acc == Cyclotomic::from_integer(i == j ? 1 : 0, x.conductor));
        }
    }

    std::vector<std::vector<Cyclotomic>> singular(2, std::vector<Cyclotomic>(2));
    singular[0][0] = singular[1][0] = Cyclotomic::from_integer(1);
    CHECK_THROWS_AS(invert_matrix(singular), std::domain_error);
}
