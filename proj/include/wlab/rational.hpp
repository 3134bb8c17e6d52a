#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wlab {

// Exact arithmetic scalars. GMP keeps mpq_class canonical (lowest terms,
// positive denominator) through arithmetic; construction goes through
// make_rat so user-supplied num/den pairs are canonicalized too.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigRat make_rat(long num, long den = 1) {
    return make_rat(BigInt(num), BigInt(den));
}

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigRat rat_pow(const BigRat& base, unsigned long exp) {
    BigRat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
    return r;  // power of a canonical fraction is canonical
}

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

inline BigInt to_integer(const BigRat& q) {
    if (!is_integer(q)) {
        throw std::domain_error("to_integer: " + q.get_str() + " is not an integer");
    }
    return q.get_num();
}

// "num/den" with den > 0, lowest terms; the exchange format used in JSON.
inline std::string rat_to_string(const BigRat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigRat rat_from_string(const std::string& s) {
    BigRat q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace wlab
