#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "wlab/tensor.hpp"

using namespace wlab;
using testutil::build_with_classes;

namespace {

struct Setup {
    FinGroup g;
    ClassData cd;
    CharTable x;
    std::vector<PermChar> thetas;  // five faithful, degree descending
    PermChar trivial_theta;        // degree-1 action of the whole group
};

const Setup& setup() {
    static Setup* s = [] {
        auto* out = new Setup;
        auto [g, cd] = build_with_classes(catalog::h1());
        out->g = std::move(g);
        out->cd = std::move(cd);
        out->x = dixon_schneider(out->g, out->cd);
        auto subs = enumerate_subgroups(out->g);
        for (const auto& rec : subs) {
            if (rec.faithful_action) {
                out->thetas.push_back(
                    permutation_character(coset_action(out->g, rec), out->cd, out->g));
            }
        }
        std::sort(out->thetas.begin(), out->thetas.end(),
                  [](const PermChar& a, const PermChar& b) { return a.degree() > b.degree(); });
        out->trivial_theta =
            permutation_character(coset_action(out->g, subs.back()), out->cd, out->g);
        return out;
    }();
    return *s;
}

BigInt dim_entry(int theta_idx, long k) {
    const auto& s = setup();
    return dim_centralizer(s.thetas[theta_idx], k, s.x, s.cd);
}

}  // namespace

TEST_CASE("the transition matrix of the all-ones character is the identity") {
    const auto& s = setup();
    TransitionMatrix a = transition_matrix(s.trivial_theta, s.x, s.cd);
    for (int i = 0; i < s.x.count(); ++i) {
        for (int j = 0; j < s.x.count(); ++j) {
            CHECK(a.entries[i][j] == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("transition matrices of permutation characters have nonnegative integer entries") {
    const auto& s = setup();
    for (const auto& theta : s.thetas) {
        CHECK(transition_matrix(theta, s.x, s.cd).is_nonnegative_integer());
    }
}

TEST_CASE("one recurrence step from d^(1) matches the k=2 values for the regular character") {
    const auto& s = setup();
    const PermChar& regular = s.thetas[0];
    TransitionMatrix a = transition_matrix(regular, s.x, s.cd);
    std::vector<BigInt> row = decompose(regular, s.x, s.cd).entries;
    std::vector<BigInt> next = a.apply(row);
    // at k=2 the entries are 96, 192, 288, 384 according to degree 1, 2, 3, 4
    for (int i = 0; i < s.x.count(); ++i) {
        CHECK(next[i] == BigInt(96) * s.x.degrees[i]);
    }
    CHECK(next == tensor_multiplicities(regular, 2, s.x, s.cd).entries);
}

TEST_CASE("k=1 multiplicities equal the plain decomposition") {
    const auto& s = setup();
    for (const auto& theta : s.thetas) {
        CHECK(tensor_multiplicities(theta, 1, s.x, s.cd).entries ==
              decompose(theta, s.x, s.cd).entries);
    }
    CHECK_THROWS_AS(tensor_multiplicities(s.thetas[0], 0, s.x, s.cd), std::invalid_argument);
}

TEST_CASE("closed forms") {
    const auto& s = setup();

    SUBCASE("derived forms reproduce the multiplicities for k = 1..8") {
        for (const auto& theta : s.thetas) {
            auto forms = closed_forms(theta, s.x, s.cd);
            for (long k = 1; k <= 8; ++k) {
                MultVector m = tensor_multiplicities(theta, k, s.x, s.cd);
                for (int i = 0; i < s.x.count(); ++i) CHECK(forms[i].eval(k) == m.entries[i]);
            }
        }
    }

    SUBCASE("trivial constituent of the degree-48 character: 48^(k-1)/2 + 8^(k-1)/2") {
        auto forms = closed_forms(s.thetas[1], s.x, s.cd);
        ClosedForm expected;
        expected.terms[BigInt(48)] = make_rat(1, 2);
        expected.terms[BigInt(8)] = make_rat(1, 2);
        CHECK(forms[0] == expected);
        CHECK(forms[0].eval(1) == 1);
        CHECK(forms[0].eval(2) == 28);
    }

    SUBCASE("trivial constituent of a degree-24 character: 24^(k-1)/4 + 3*4^(k-2)") {
        auto forms = closed_forms(s.thetas[3], s.x, s.cd);
        ClosedForm expected;
        expected.terms[BigInt(24)] = make_rat(1, 4);
        expected.terms[BigInt(4)] = make_rat(3, 4);  // 3*4^(k-2) = (3/4)*4^(k-1)
        CHECK(forms[0] == expected);
    }

    SUBCASE("degree-4 constituents of the regular character grow as 96^k/24") {
        auto forms = closed_forms(s.thetas[0], s.x, s.cd);
        ClosedForm expected;
        expected.terms[BigInt(96)] = make_rat(4, 1);  // 96^k/24 = 4*96^(k-1)
        for (int i = 0; i < s.x.count(); ++i) {
            if (s.x.degrees[i] == 4) CHECK(forms[i] == expected);
        }
    }
}

TEST_CASE("wedderburn structures") {
    const auto& s = setup();

    // degree-24 action at k=1: nine one-dimensional blocks
    WedderburnStructure w24 = wedderburn(s.thetas[3], 1, s.x, s.cd);
    REQUIRE(w24.components.size() == 1);
    CHECK(w24.components[0].first == 1);
    CHECK(w24.components[0].second == 9);
    CHECK(w24.dimension == 9);

    // regular action at k=1: 4M_1 + 6M_2 + 4M_3 + 2M_4
    WedderburnStructure w96 = wedderburn(s.thetas[0], 1, s.x, s.cd);
    REQUIRE(w96.components.size() == 4);
    CHECK(w96.components[0] == std::pair<BigInt, int>(BigInt(1), 4));
    CHECK(w96.components[1] == std::pair<BigInt, int>(BigInt(2), 6));
    CHECK(w96.components[2] == std::pair<BigInt, int>(BigInt(3), 4));
    CHECK(w96.components[3] == std::pair<BigInt, int>(BigInt(4), 2));
    CHECK(w96.dimension == 96);

    // degree-1 action: one M_1 block at every k
    for (long k : {1L, 3L, 6L}) {
        WedderburnStructure w = wedderburn(s.trivial_theta, k, s.x, s.cd);
        REQUIRE(w.components.size() == 1);
        CHECK(w.components[0] == std::pair<BigInt, int>(BigInt(1), 1));
        CHECK(w.dimension == 1);
    }
}

TEST_CASE("centralizer dimensions match the published table") {
    CHECK(dim_entry(0, 3) == BigInt("8153726976"));
    CHECK(dim_entry(2, 4) == BigInt("11454644224"));
    CHECK(dim_entry(3, 2) == 3504);
    CHECK(dim_entry(3, 2) == BigInt(24) * 24 * 24 / 4 + 3 * 16);  // 24^3/4 + 3*4^2
    CHECK(dim_entry(4, 2) == 3504);
    CHECK(dim_entry(1, 4) == BigInt("293535219712"));
}

TEST_CASE("generic dim closed form tracks the direct computation") {
    const auto& s = setup();
    for (const auto& theta : s.thetas) {
        DimClosedForm form = dim_closed_form(theta, s.cd);
        for (long k = 1; k <= 8; ++k) {
            CHECK(form.eval(k) == dim_centralizer(theta, k, s.x, s.cd));
        }
    }
}

TEST_CASE("degree bookkeeping: sum of d_i * deg(chi_i) is deg(theta)^k") {
    const auto& s = setup();
    for (const auto& theta : s.thetas) {
        for (long k = 1; k <= 8; ++k) {
            MultVector m = tensor_multiplicities(theta, k, s.x, s.cd);
            BigInt acc = 0;
            for (int i = 0; i < s.x.count(); ++i) acc += m.entries[i] * BigInt(s.x.degrees[i]);
            CHECK(acc == big_pow(BigInt(theta.degree()), static_cast<unsigned long>(k)));
        }
    }
}
