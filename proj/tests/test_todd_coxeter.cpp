#include <doctest.h>

#include <stdexcept>

#include "wlab/presentation.hpp"
#include "wlab/todd_coxeter.hpp"

using namespace wlab;

TEST_CASE("cyclic group of order 4 over the trivial subgroup") {
    auto table = todd_coxeter(catalog::cyclic(4), {});
    CHECK(table.degree() == 4);
    CHECK(table.complete);
}

TEST_CASE("the order-96 presentation closes at 96 cosets") {
    auto table = todd_coxeter(catalog::h1(), {});
    CHECK(table.degree() == 96);
}

TEST_CASE("S3 over a point stabilizer has three cosets") {
    Presentation p = catalog::symmetric3();
    auto table = todd_coxeter(p, {p.parse_word("s")});
    CHECK(table.degree() == 3);
}

TEST_CASE("every relator traces to the identity from every coset") {
    for (const Presentation& p :
         {catalog::h1(), catalog::symmetric3(), catalog::quaternion8(), catalog::cyclic(7)}) {
        auto table = todd_coxeter(p, {});
        for (int c = 0; c < table.degree(); ++c) {
            for (const auto& rel : p.relators) CHECK(table.trace(c, rel) == c);
        }
    }
}

TEST_CASE("generator columns are permutations") {
    auto table = todd_coxeter(catalog::quaternion8(), {});
    for (int g = 0; g < table.ngens; ++g) {
        auto perm = table.generator_permutation(g);
        std::vector<bool> seen(perm.size(), false);
        for (int image : perm) {
            CHECK_FALSE(seen[image]);
            seen[image] = true;
        }
    }
}

TEST_CASE("subgroup words fix coset zero") {
    Presentation p = catalog::h1();
    std::vector<Word> sub = {p.parse_word("s")};
    auto table = todd_coxeter(p, sub);
    CHECK(table.degree() == 24);  // index of <s>, |<s>| = 4
    CHECK(table.trace(0, sub[0]) == 0);
}

TEST_CASE("coset bound aborts enumeration") {
    CHECK_THROWS_WITH_AS(todd_coxeter(catalog::h1(), {}, 50),
                         doctest::Contains("coset-limit-exceeded"), std::runtime_error);
    CHECK_THROWS_AS(todd_coxeter(catalog::h1(), {}, 0), std::invalid_argument);
}

TEST_CASE("tables are standardized, so repeat runs agree") {
    auto a = todd_coxeter(catalog::h1(), {});
    auto b = todd_coxeter(catalog::h1(), {});
    CHECK(a.rows == b.rows);
}

TEST_CASE("redundant relators collapse to the right quotient") {
    // <a | a^6, a^4> is cyclic of order gcd(6,4) = 2
    Presentation p = parse_presentation("gens: a\nrel: a a a a a a\nrel: a a a a\n");
    auto table = todd_coxeter(p, {});
    CHECK(table.degree() == 2);
}
