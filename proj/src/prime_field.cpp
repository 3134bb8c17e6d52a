#include "wlab/prime_field.hpp"

#include <stdexcept>

namespace wlab {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FpElement operator+(FpElement a, FpElement b) {
    return {(a.value + b.value) % a.modulus, a.modulus};
}

FpElement operator-(FpElement a, FpElement b) {
    return {(a.value + a.modulus - b.value) % a.modulus, a.modulus};
}

FpElement operator*(FpElement a, FpElement b) {
    return {a.value * b.value % a.modulus, a.modulus};
}

FpElement FpElement::pow(std::uint64_t e) const {
    return {PrimeField(modulus).pow(value, e), modulus};
}

FpElement FpElement::inverse() const {
    return {PrimeField(modulus).inv(value), modulus};
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p_;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField::inv: zero");
    return pow(a, p_ - 2);
}

std::uint64_t smallest_generator(std::uint64_t p) {
    PrimeField fp(p);
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t m = p - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);

    for (std::uint64_t g = 1; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t q : prime_factors) {
            if (fp.pow(g, (p - 1) / q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("smallest_generator: none found");  // unreachable for prime p
}

std::vector<std::uint64_t> root_of_unity_table(std::uint64_t p, std::uint64_t e) {
    if (e == 0) throw std::invalid_argument("root_of_unity_table: e must be positive");
    if (!is_prime(p) || (p - 1) % e != 0) {
        throw std::invalid_argument("no-such-prime: need p prime with p = 1 (mod " +
                                    std::to_string(e) + "), got p = " + std::to_string(p));
    }
    PrimeField fp(p);
    std::uint64_t omega = e == 1 ? 1 : fp.pow(smallest_generator(p), (p - 1) / e);
    std::vector<std::uint64_t> table(e);
    std::uint64_t cur = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        table[i] = cur;
        cur = fp.mul(cur, omega);
    }
    return table;
}

std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent) {
    std::uint64_t p = exponent + 1;
    // smallest p = 1 (mod e) with p^2 > 4*|G|, scanning the residue class
    while (!(is_prime(p) && p * p > 4 * group_order)) p += exponent;
    return p;
}

}  // namespace wlab
