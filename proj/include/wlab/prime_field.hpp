#pragma once

#include <cstdint>
#include <vector>

namespace wlab {

bool is_prime(std::uint64_t n);

/// Element of GF(p). Working scalar for the character-table lift; the
/// library never mixes moduli in one expression.
struct FpElement {
    std::uint64_t value = 0;
    std::uint64_t modulus = 2;

    friend FpElement operator+(FpElement a, FpElement b);
    friend FpElement operator-(FpElement a, FpElement b);
    friend FpElement operator*(FpElement a, FpElement b);
    FpElement inverse() const;
    FpElement pow(std::uint64_t e) const;
    bool operator==(const FpElement&) const = default;
};

/// Arithmetic mod a fixed prime, on raw uint64 values. Used by the hot
/// loops in the eigenvector splitting where FpElement would be noise.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t reduce(std::uint64_t a) const { return a % p_; }

private:
    std::uint64_t p_;
};

std::uint64_t smallest_generator(std::uint64_t p);

/// Powers omega^0 .. omega^{e-1} of a fixed primitive e-th root of unity in
/// GF(p), with omega = g^((p-1)/e) for the smallest generator g of GF(p)*.
/// Requires p prime with p = 1 (mod e); throws "no-such-prime" otherwise.
std::vector<std::uint64_t> root_of_unity_table(std::uint64_t p, std::uint64_t e);

/// Smallest prime p = 1 (mod exponent) with p > 2*sqrt(group_order); the
/// working prime for the character-table computation.
std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent);

}  // namespace wlab
