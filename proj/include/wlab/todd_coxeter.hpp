#pragma once

#include <vector>

#include "wlab/presentation.hpp"

namespace wlab {

/// Complete coset table: one row per coset of the enumerated subgroup, one
/// column per letter (generators, then inverses). Row 0 is the subgroup
/// coset. Every column of a complete table is a permutation of the cosets.
struct CosetTable {
    int ngens = 0;
    std::vector<std::vector<int>> rows;
    bool complete = false;

    int degree() const { return static_cast<int>(rows.size()); }

    std::vector<int> generator_permutation(int gen) const;

    /// Coset reached from `start` by tracing `w`.
    int trace(int start, const Word& w) const;
};

inline constexpr int kDefaultCosetLimit = 200000;

/// HLT coset enumeration with coincidence handling and a lookahead pass when
/// the live-coset bound is reached. Throws std::runtime_error with message
/// "coset-limit-exceeded" if the bound still stands after lookahead.
/// The returned table is standardized (cosets numbered in scan order), so
/// equal inputs give identical tables.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                        int coset_limit = kDefaultCosetLimit);

}  // namespace wlab
