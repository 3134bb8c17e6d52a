#pragma once

#include <map>
#include <vector>

#include "wlab/perm_char.hpp"

namespace wlab {

/// A = X diag(theta) X^{-1}: row i gives the coefficients of theta*chi_i in
/// the chi basis, so right-multiplying a multiplicity row by A is one more
/// tensor factor.
struct TransitionMatrix {
    std::vector<std::vector<BigRat>> entries;

    bool is_nonnegative_integer() const;
    std::vector<BigInt> apply(const std::vector<BigInt>& row) const;
};

TransitionMatrix transition_matrix(const PermChar& theta, const CharTable& table,
                                   const ClassData& classes);

/// Multiplicity vector of the k-th tensor power: d_i = <theta^k, chi_i>.
/// Computed both by the recurrence d^(k) = d^(k-1) A and by the direct
/// inner product; the two must agree exactly.
MultVector tensor_multiplicities(const PermChar& theta, long k, const CharTable& table,
                                 const ClassData& classes);

/// k |-> sum_v coeff_v * v^(k-1), v ranging over distinct nonzero values of
/// theta. Every multiplicity d_i^(k) has this shape because theta^k only
/// sees the k-th powers of theta's values.
struct ClosedForm {
    std::map<BigInt, BigRat> terms;

    BigInt eval(long k) const;  // integer for k >= 1; throws otherwise
    bool operator==(const ClosedForm&) const = default;
};

/// One closed form per irreducible, derived from the level sets of theta:
/// coeff_{i,v} = v * (1/|G|) * sum_{theta(C_j)=v} |C_j| conj(chi_i(C_j)).
std::vector<ClosedForm> closed_forms(const PermChar& theta, const CharTable& table,
                                     const ClassData& classes);

/// Direct sum of matrix algebras M_d, grouped by equal d (zero d omitted).
struct WedderburnStructure {
    std::vector<std::pair<BigInt, int>> components;  // (block size d, count), d ascending
    BigInt dimension;                                // sum of count * d^2
};

WedderburnStructure wedderburn(const PermChar& theta, long k, const CharTable& table,
                               const ClassData& classes);

/// dim of the centralizer ring of the k-th tensor power, computed as the
/// square sum of the multiplicities and, independently, as the spectral sum
/// (1/|G|) sum_j |C_j| theta(C_j)^(2k); the two must agree exactly.
BigInt dim_centralizer(const PermChar& theta, long k, const CharTable& table,
                       const ClassData& classes);

/// k |-> sum_v coeff_v * v^(2k): the closed form of dim as a function of k,
/// from the level-set weights of theta alone.
struct DimClosedForm {
    std::map<BigInt, BigRat> terms;

    BigInt eval(long k) const;
    bool operator==(const DimClosedForm&) const = default;
};

DimClosedForm dim_closed_form(const PermChar& theta, const ClassData& classes);

}  // namespace wlab
