#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "wlab/subgroups.hpp"

using namespace wlab;
using testutil::build;

namespace {

// Independent oracle: every subgroup, found by testing all subsets that
// contain the identity for closure. Only for tiny groups.
std::set<std::vector<int>> all_subgroups_by_subsets(const FinGroup& g) {
    const int n = static_cast<int>(g.order());
    REQUIRE(n <= 16);
    std::set<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1u)) continue;  // identity is element 0
        std::vector<int> members;
        for (int x = 0; x < n; ++x) {
            if (mask & (1u << x)) members.push_back(x);
        }
        bool closed = true;
        for (int a : members) {
            for (int b : members) {
                if (!(mask & (1u << g.mul(a, b)))) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed) out.insert(members);
    }
    return out;
}

std::vector<int> least_conjugate(const FinGroup& g, const std::vector<int>& h) {
    std::vector<int> best = h;
    for (int t = 0; t < g.order(); ++t) {
        std::vector<int> c;
        c.reserve(h.size());
        for (int x : h) c.push_back(g.mul(g.mul(g.inv(t), x), t));
        std::sort(c.begin(), c.end());
        if (c < best) best = c;
    }
    return best;
}

void check_against_brute_force(const FinGroup& g) {
    auto brute = all_subgroups_by_subsets(g);
    std::set<std::vector<int>> brute_classes;
    for (const auto& h : brute) brute_classes.insert(least_conjugate(g, h));

    auto enumerated = enumerate_subgroups(g);
    REQUIRE(enumerated.size() == brute_classes.size());
    for (const auto& rec : enumerated) {
        CHECK(brute_classes.count(rec.members) == 1);
        CHECK(rec.members == least_conjugate(g, rec.members));  // canonical representative
    }
}

}  // namespace

TEST_CASE("subset oracle confirms the enumeration on small groups") {
    check_against_brute_force(build(catalog::symmetric3()));   // 6 subgroups in 4 classes
    check_against_brute_force(build(catalog::quaternion8()));  // 6 classes, all normal
    check_against_brute_force(build(catalog::cyclic(8)));      // one per divisor
    check_against_brute_force(build(catalog::cyclic(6)));
}

TEST_CASE("class counts on the standard examples") {
    CHECK(enumerate_subgroups(build(catalog::symmetric3())).size() == 4);
    CHECK(enumerate_subgroups(build(catalog::cyclic(4))).size() == 3);
    CHECK(enumerate_subgroups(build(catalog::h1())).size() == 24);
}

TEST_CASE("the enumeration is a fixed point under one more extension sweep") {
    for (const Presentation& p : {catalog::symmetric3(), catalog::quaternion8()}) {
        FinGroup g = build(p);
        auto classes = enumerate_subgroups(g);
        std::set<std::vector<int>> canon;
        for (const auto& rec : classes) canon.insert(rec.members);
        for (const auto& rec : classes) {
            for (int x = 0; x < g.order(); ++x) {
                if (std::binary_search(rec.members.begin(), rec.members.end(), x)) continue;
                std::vector<int> gens = rec.generators;
                gens.push_back(x);
                CHECK(canon.count(least_conjugate(g, generated_subgroup(g, gens))) == 1);
            }
        }
    }
}

TEST_CASE("order cap") {
    CHECK_THROWS_WITH_AS(enumerate_subgroups(build(catalog::h1()), 50),
                         doctest::Contains("cap-exceeded"), std::runtime_error);
}

TEST_CASE("record invariants on the order-96 group") {
    FinGroup g = build(catalog::h1());
    auto subs = enumerate_subgroups(g);
    std::multiset<long> faithful_degrees;
    for (const auto& s : subs) {
        CHECK(s.order * s.index == g.order());  // Lagrange
        CHECK(96 % s.order == 0);
        CHECK(g.order() % (s.conjugate_count * s.order) == 0);  // |G| = |N(H)| * #conjugates and H <= N(H)
        // membership closed under product and inverse
        for (int a : s.members) {
            CHECK(std::binary_search(s.members.begin(), s.members.end(), g.inv(a)));
            for (int b : s.members) {
                CHECK(std::binary_search(s.members.begin(), s.members.end(), g.mul(a, b)));
            }
        }
        if (s.faithful_action) faithful_degrees.insert(s.index);
    }
    CHECK(faithful_degrees == std::multiset<long>{24, 24, 32, 48, 96});
}

TEST_CASE("cores") {
    FinGroup g = build(catalog::h1());
    auto subs = enumerate_subgroups(g);

    // trivial subgroup: trivial core, regular faithful action
    CHECK(subs.front().order == 1);
    SubgroupRecord trivial_core = core_of(g, subs.front());
    CHECK(trivial_core.order == 1);
    CHECK(trivial_core.faithful_action);

    // whole group: core is the whole group
    CHECK(subs.back().order == 96);
    CHECK(core_of(g, subs.back()).order == 96);

    for (const auto& s : subs) {
        SubgroupRecord core = core_of(g, s);
        CHECK(core.members == s.core_members);
        // the core is normal: closed under conjugation
        for (int t = 0; t < g.order(); ++t) {
            for (int x : core.members) {
                int y = g.mul(g.mul(g.inv(t), x), t);
                CHECK(std::binary_search(core.members.begin(), core.members.end(), y));
            }
        }
    }
}

TEST_CASE("coset actions") {
    FinGroup g = build(catalog::h1());
    auto subs = enumerate_subgroups(g);
    for (const auto& s : subs) {
        CosetAction action = coset_action(g, s);
        CHECK(action.degree == s.index);
        CHECK(action.kernel_elements(g) == s.core_members);  // kernel = core
    }

    // degree-1 action of the whole group is trivial
    CosetAction whole = coset_action(g, subs.back());
    CHECK(whole.degree == 1);

    // degree-48 faithful action comes from an order-2 subgroup with trivial core
    for (const auto& s : subs) {
        if (s.order == 2 && s.faithful_action) {
            CHECK(coset_action(g, s).degree == 48);
        }
    }
}

TEST_CASE("coset action degree agrees with direct enumeration over the subgroup") {
    Presentation p = catalog::symmetric3();
    FinGroup g = build(p);
    auto subs = enumerate_subgroups(g);
    for (const auto& s : subs) {
        if (s.order != 2) continue;
        // index computed two ways: group-theoretic and by coset enumeration
        auto table = todd_coxeter(p, {p.parse_word("s")});
        CHECK(table.degree() == s.index);
    }
}
