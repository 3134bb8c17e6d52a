#include <doctest.h>

#include <cmath>
#include <random>

#include "wlab/cyclotomic.hpp"

using namespace wlab;

namespace {

Cyclotomic zeta(int n, long j = 1) { return Cyclotomic::root_of_unity(n, j); }

Cyclotomic random_cyclotomic(int conductor, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    Cyclotomic acc = Cyclotomic::from_integer(0, conductor);
    for (int j = 0; j < euler_phi(conductor); ++j) {
        acc += Cyclotomic::from_rational(make_rat(num(rng), den(rng)), conductor) *
               zeta(conductor, j);
    }
    return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<BigInt>{1, 0, 0, 0, 1});
    // Phi_24 = x^8 - x^4 + 1
    CHECK(cyclotomic_polynomial(24) == std::vector<BigInt>{1, 0, 0, 0, -1, 0, 0, 0, 1});
    CHECK(euler_phi(24) == 8);
    CHECK(euler_phi(1) == 1);
}

TEST_CASE("i squared is minus one") {
    CHECK(zeta(4) * zeta(4) == Cyclotomic::from_integer(-1, 4));
}

TEST_CASE("full sum of cube roots of unity vanishes") {
    Cyclotomic sum = Cyclotomic::from_integer(1, 3) + zeta(3) + zeta(3, 2);
    CHECK(sum.is_zero());
    CHECK(sum.coeff_entries().empty());
}

TEST_CASE("norm of 1 + zeta_8") {
    // (1 + zeta_8) * conj(1 + zeta_8) = 2 + zeta_8 - zeta_8^3, numerically 2 + sqrt(2)
    Cyclotomic x = Cyclotomic::from_integer(1, 8) + zeta(8);
    Cyclotomic norm = x * x.conj();
    Cyclotomic expected =
        Cyclotomic::from_integer(2, 8) + zeta(8) - zeta(8, 3);
    CHECK(norm == expected);
    CHECK(std::abs(norm.embed().real() - (2.0 + std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(norm.embed().imag()) < 1e-12);
}

TEST_CASE("conjugation") {
    CHECK(zeta(4).conj() == -zeta(4));
    Cyclotomic r = Cyclotomic::from_rational(make_rat(3, 2), 12);
    CHECK(r.conj() == r);
    std::mt19937 rng(7);
    for (int conductor : {3, 4, 8, 12, 24}) {
        for (int trial = 0; trial < 10; ++trial) {
            Cyclotomic a = random_cyclotomic(conductor, rng);
            CHECK(a.conj().conj() == a);
        }
    }
}

TEST_CASE("field axioms at the conductors in play") {
    std::mt19937 rng(20240217);
    for (int conductor : {3, 4, 8, 12, 24}) {
        for (int trial = 0; trial < 12; ++trial) {
            Cyclotomic a = random_cyclotomic(conductor, rng);
            Cyclotomic b = random_cyclotomic(conductor, rng);
            Cyclotomic c = random_cyclotomic(conductor, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Cyclotomic::from_integer(1, conductor));
            }
        }
    }
    CHECK_THROWS(Cyclotomic().inverse());
}

TEST_CASE("reducing any full coset of a root-of-unity subgroup yields zero") {
    for (int n : {4, 8, 12, 24}) {
        for (int d = 2; d <= n; ++d) {
            if (n % d != 0) continue;
            for (int offset : {0, 1, 3}) {
                Cyclotomic sum = Cyclotomic::from_integer(0, n);
                for (int t = 0; t < d; ++t) sum += zeta(n, offset + t * (n / d));
                CHECK(sum.is_zero());
                CHECK(sum.coeff_entries().empty());
            }
        }
    }
}

TEST_CASE("floating embedding tracks exact arithmetic") {
    std::mt19937 rng(99);
    for (int conductor : {3, 4, 8, 12, 24}) {
        for (int trial = 0; trial < 10; ++trial) {
            Cyclotomic a = random_cyclotomic(conductor, rng);
            Cyclotomic b = random_cyclotomic(conductor, rng);
            auto close = [](std::complex<double> x, std::complex<double> y) {
                return std::abs(x - y) < 1e-10;
            };
            CHECK(close((a * b).embed(), a.embed() * b.embed()));
            CHECK(close((a + b).embed(), a.embed() + b.embed()));
            CHECK(close(a.conj().embed(), std::conj(a.embed())));
        }
    }
}

TEST_CASE("promotion preserves value and equality spans conductors") {
    Cyclotomic i4 = zeta(4);
    Cyclotomic i12 = zeta(12, 3);  // zeta_12^3 = i
    CHECK(i4 == i12);
    CHECK(i4.promoted(12).conductor() == 12);
    CHECK(i4.promoted(12) == i12);
    CHECK_THROWS(i4.promoted(6));  // 4 does not divide 6

    Cyclotomic q = Cyclotomic::from_rational(make_rat(-7, 3), 8);
    CHECK(q.is_rational());
    CHECK(q.to_rational() == make_rat(-7, 3));
    CHECK_FALSE(zeta(8).is_rational());
    CHECK_THROWS(zeta(8).to_rational());
}

TEST_CASE("total order is consistent") {
    Cyclotomic a = zeta(8);
    Cyclotomic b = zeta(8, 2);
    CHECK(Cyclotomic::compare(a, a) == 0);
    CHECK(Cyclotomic::compare(a, b) == -Cyclotomic::compare(b, a));
}

TEST_CASE("rendering") {
    CHECK(Cyclotomic().str() == "0");
    CHECK(Cyclotomic::from_rational(make_rat(-1, 2), 24).str() == "-1/2");
    CHECK((Cyclotomic::from_integer(2, 8) + zeta(8) - zeta(8, 3)).str() == "2 + z8 - z8^3");
    auto entries = Cyclotomic::from_rational(make_rat(3, 2), 24).coeff_entries();
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].first == 0);
    CHECK(entries[0].second == "3/2");
}
