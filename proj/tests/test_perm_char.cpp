#include <doctest.h>

#include <algorithm>
#include <map>

#include "test_util.hpp"
#include "wlab/perm_char.hpp"

using namespace wlab;
using testutil::build_with_classes;

namespace {

struct H1Setup {
    FinGroup g;
    ClassData cd;
    CharTable x;
    std::vector<SubgroupRecord> subs;
    std::vector<PermChar> faithful_thetas;  // degree descending: 96, 48, 32, 24, 24
};

const H1Setup& h1_setup() {
    static H1Setup* s = [] {
        auto* out = new H1Setup;
        auto [g, cd] = build_with_classes(catalog::h1());
        out->g = std::move(g);
        out->cd = std::move(cd);
        out->x = dixon_schneider(out->g, out->cd);
        out->subs = enumerate_subgroups(out->g);
        for (const auto& rec : out->subs) {
            if (!rec.faithful_action) continue;
            out->faithful_thetas.push_back(
                permutation_character(coset_action(out->g, rec), out->cd, out->g));
        }
        std::sort(out->faithful_thetas.begin(), out->faithful_thetas.end(),
                  [](const PermChar& a, const PermChar& b) { return a.degree() > b.degree(); });
        return out;
    }();
    return *s;
}

}  // namespace

TEST_CASE("the regular character is |G| at the identity and 0 elsewhere") {
    const auto& s = h1_setup();
    const PermChar& regular = s.faithful_thetas[0];
    REQUIRE(regular.degree() == 96);
    CHECK(regular.values[0] == 96);
    for (int c = 1; c < s.cd.count; ++c) CHECK(regular.values[c] == 0);

    // its multiplicities are the degrees
    MultVector m = decompose(regular, s.x, s.cd);
    for (int i = 0; i < s.x.count(); ++i) CHECK(m.entries[i] == s.x.degrees[i]);
}

TEST_CASE("degree-32 character: 32 at the identity, 8 on one size-8 class") {
    const auto& s = h1_setup();
    const PermChar& theta = s.faithful_thetas[2];
    REQUIRE(theta.degree() == 32);
    int eights = 0;
    for (int c = 1; c < s.cd.count; ++c) {
        if (theta.values[c] == 8) {
            ++eights;
            CHECK(s.cd.sizes[c] == 8);
        } else {
            CHECK(theta.values[c] == 0);
        }
    }
    CHECK(eights == 1);
}

TEST_CASE("degree-48 character hits 8 on one size-6 class") {
    const auto& s = h1_setup();
    const PermChar& theta = s.faithful_thetas[1];
    REQUIRE(theta.degree() == 48);
    int eights = 0;
    for (int c = 1; c < s.cd.count; ++c) {
        if (theta.values[c] != 0) {
            CHECK(theta.values[c] == 8);
            CHECK(s.cd.sizes[c] == 6);
            ++eights;
        }
    }
    CHECK(eights == 1);
}

TEST_CASE("trivial action: all-ones character equal to the trivial character") {
    const auto& s = h1_setup();
    const SubgroupRecord& whole = s.subs.back();
    REQUIRE(whole.order == 96);
    PermChar theta = permutation_character(coset_action(s.g, whole), s.cd, s.g);
    for (long v : theta.values) CHECK(v == 1);
    MultVector m = decompose(theta, s.x, s.cd);
    CHECK(m.entries[0] == 1);
    for (int i = 1; i < s.x.count(); ++i) CHECK(m.entries[i] == 0);
    CHECK(is_multiplicity_free(m));
}

TEST_CASE("decomposition profiles of the two degree-24 characters") {
    const auto& s = h1_setup();
    for (int idx : {3, 4}) {
        const PermChar& theta = s.faithful_thetas[idx];
        REQUIRE(theta.degree() == 24);
        MultVector m = decompose(theta, s.x, s.cd);
        CHECK(is_multiplicity_free(m));
        CHECK_FALSE(is_doubly_transitive(m));
        CHECK(contains_identity_once(m));

        // nine constituents: chi_1, three of degree 2, three of degree 3, both of degree 4
        std::map<long, int> per_degree;
        int total = 0;
        for (int i = 0; i < s.x.count(); ++i) {
            if (m.entries[i] == 1) {
                ++per_degree[s.x.degrees[i]];
                ++total;
            }
        }
        CHECK(total == 9);
        CHECK(per_degree[1] == 1);
        CHECK(per_degree[2] == 3);
        CHECK(per_degree[3] == 3);
        CHECK(per_degree[4] == 2);

        // the three nontrivial linear characters never appear
        for (int i = 1; i < s.x.count(); ++i) {
            if (s.x.degrees[i] == 1) CHECK(m.entries[i] == 0);
        }
    }
}

TEST_CASE("multiplicity-freeness across the five faithful actions") {
    const auto& s = h1_setup();
    for (int idx = 0; idx < 5; ++idx) {
        MultVector m = decompose(s.faithful_thetas[idx], s.x, s.cd);
        CHECK(is_multiplicity_free(m) == (idx >= 3));
        CHECK(contains_identity_once(m));
        CHECK(orbit_count(s.faithful_thetas[idx], s.cd) == 1);
    }
}

TEST_CASE("the natural S3 action is doubly transitive") {
    auto [g, cd] = build_with_classes(catalog::symmetric3());
    CharTable x = dixon_schneider(g, cd);
    for (const auto& rec : enumerate_subgroups(g)) {
        if (rec.order != 2) continue;
        PermChar theta = permutation_character(coset_action(g, rec), cd, g);
        CHECK(theta.degree() == 3);
        CHECK(is_doubly_transitive(decompose(theta, x, cd)));
    }
}

TEST_CASE("direct sums: doubled regular action") {
    auto [g, cd] = build_with_classes(catalog::symmetric3());
    CharTable x = dixon_schneider(g, cd);
    auto subs = enumerate_subgroups(g);
    PermChar regular = permutation_character(coset_action(g, subs.front()), cd, g);
    PermChar doubled = direct_sum(regular, regular);
    CHECK(orbit_count(doubled, cd) == 2);  // two orbits
    MultVector m = decompose(doubled, x, cd);
    CHECK(m.entries[0] == 2);
    CHECK_FALSE(contains_identity_once(m));
    CHECK_THROWS_WITH_AS(is_doubly_transitive(m), doctest::Contains("not-transitive"),
                         std::runtime_error);
}

TEST_CASE("decomposition routes coincide for every faithful action") {
    const auto& s = h1_setup();
    for (const auto& theta : s.faithful_thetas) {
        CHECK(decompose(theta, s.x, s.cd).entries ==
              decompose_via_inverse(theta, s.x).entries);
    }
}

TEST_CASE("fixed-point counting satisfies the orbit identity on every coset action") {
    const auto& s = h1_setup();
    for (const auto& rec : s.subs) {
        PermChar theta = permutation_character(coset_action(s.g, rec), s.cd, s.g);
        BigInt weighted = 0;
        for (int c = 0; c < s.cd.count; ++c) {
            weighted += BigInt(s.cd.sizes[c]) * BigInt(theta.values[c]);
        }
        CHECK(weighted == BigInt(s.g.order()) * orbit_count(theta, s.cd));
        CHECK(orbit_count(theta, s.cd) == 1);
    }
}
