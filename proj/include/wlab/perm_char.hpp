#pragma once

#include <string>
#include <vector>

#include "wlab/char_table.hpp"
#include "wlab/subgroups.hpp"

namespace wlab {

/// Permutation character: fixed-point counts of class representatives.
struct PermChar {
    std::vector<long> values;  // one per conjugacy class
    std::string source;

    ClassFunction as_class_function(int conductor) const;
    long degree() const { return values.empty() ? 0 : values[0]; }
};

/// Multiplicities against the rows of a CharTable.
struct MultVector {
    std::vector<BigInt> entries;
};

PermChar permutation_character(const CosetAction& action, const ClassData& classes,
                               const FinGroup& g);

/// Sum of characters (disjoint union of the underlying actions).
PermChar direct_sum(const PermChar& a, const PermChar& b);

/// m_i = <theta, chi_i>. Throws "non-integer-multiplicity" if any inner
/// product is not a nonnegative integer, and verifies the reconstruction
/// sum m_i chi_i = theta at every class.
MultVector decompose(const PermChar& theta, const CharTable& table, const ClassData& classes);

/// Same multiplicities through the other route: the value row times X^{-1}.
MultVector decompose_via_inverse(const PermChar& theta, const CharTable& table);

bool is_multiplicity_free(const MultVector& m);

/// True iff the action is 2-transitive: exactly two constituents, both with
/// multiplicity 1, one of them the trivial character. Throws
/// "not-transitive" when <theta, chi_1> != 1.
bool is_doubly_transitive(const MultVector& m);

bool contains_identity_once(const MultVector& m);

/// Number of orbits by fixed-point counting:
/// (1/|G|) sum_i |C_i| theta(C_i).
BigInt orbit_count(const PermChar& theta, const ClassData& classes);

}  // namespace wlab
