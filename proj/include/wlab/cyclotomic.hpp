#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wlab/rational.hpp"

namespace wlab {

/// Element of the cyclotomic field Q(zeta_n), stored in canonical form:
/// rational coefficients on the power basis zeta^0 .. zeta^{phi(n)-1},
/// reduced modulo the n-th cyclotomic polynomial. Equality of canonical
/// forms (after promotion to a common conductor) is field equality.
/// Values are immutable after construction.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1) {}  // zero of Q

    static Cyclotomic from_rational(const BigRat& q, int conductor = 1);
    static Cyclotomic from_integer(long v, int conductor = 1);
    /// zeta_n^j, any integer exponent (reduced mod n).
    static Cyclotomic root_of_unity(int conductor, long exponent);

    int conductor() const { return conductor_; }
    /// Canonical coefficients, length phi(conductor).
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    /// Same value at a conductor that is a multiple of the current one.
    Cyclotomic promoted(int new_conductor) const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Cyclotomic inverse() const;
    Cyclotomic operator/(const Cyclotomic& b) const { return *this * b.inverse(); }

    /// Complex conjugate (zeta -> zeta^{-1}); fixes rationals.
    Cyclotomic conj() const;

    bool is_zero() const;
    bool is_rational() const;
    BigRat to_rational() const;  // throws std::domain_error if not rational

    bool operator==(const Cyclotomic& b) const;
    bool operator!=(const Cyclotomic& b) const { return !(*this == b); }

    /// Deterministic total order used for canonical sorting of character
    /// rows: compare at the common conductor, coefficients lexicographically.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    /// Numeric evaluation at zeta_n = exp(2*pi*i/n). Diagnostic only; no
    /// decision in the library depends on it.
    std::complex<double> embed() const;

    std::string str() const;

    /// Nonzero coefficients as (exponent, "num/den") pairs, ascending.
    std::vector<std::pair<int, std::string>> coeff_entries() const;

private:
    Cyclotomic(int conductor, std::vector<BigRat> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    int conductor_;
    std::vector<BigRat> coeffs_;
};

int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree (monic).
std::vector<BigInt> cyclotomic_polynomial(int n);

}  // namespace wlab
