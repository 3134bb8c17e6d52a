#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wlab/presentation.hpp"
#include "wlab/todd_coxeter.hpp"

namespace wlab {

/// Permutation on points 0..degree-1; perm[x] is the image of x. Composition
/// follows the right-action convention: x^(gh) = (x^g)^h.
using Perm = std::vector<int>;

Perm compose(const Perm& first, const Perm& then);

/// Fully enumerated finite group, elements stored as permutations of the
/// coset action the group was built from. Element 0 is the identity.
/// Immutable after construction.
class FinGroup {
public:
    FinGroup() = default;  // empty; assign from from_coset_table

    /// Enumerate the group generated by the table's generator permutations.
    /// If expected_order is given and the enumerated group is smaller, the
    /// action identified distinct group elements and we throw
    /// "non-faithful-action". A regular table (trivial subgroup) is always
    /// faithful.
    static FinGroup from_coset_table(const CosetTable& table,
                                     std::optional<long> expected_order = std::nullopt);

    long order() const { return static_cast<long>(perms_.size()); }
    int degree() const { return degree_; }
    int ngens() const { return ngens_; }

    int mul(int a, int b) const;
    int inv(int a) const { return inverse_[a]; }
    int identity() const { return 0; }

    const Perm& perm(int a) const { return perms_[a]; }
    int element_of_perm(const Perm& p) const;  // -1 if absent

    /// A word in the generators evaluating to element a (found by
    /// breadth-first search, so of minimal letter length).
    const Word& word(int a) const { return words_[a]; }

    int generator_element(int gen) const { return generator_elements_[gen]; }

    int element_order(int a) const;
    long exponent() const;

private:
    int degree_ = 0;
    int ngens_ = 0;
    std::vector<Perm> perms_;
    std::vector<Word> words_;
    std::vector<int> inverse_;
    std::vector<int> generator_elements_;
    std::vector<std::uint16_t> mul_table_;  // row-major, filled when order <= 2048
};

/// Conjugacy classes in a canonical, presentation-independent order:
/// refined by (element order, class size, power-map profile), ties broken
/// by least member index. Class 0 is always the identity class.
struct ClassData {
    int count = 0;
    std::vector<int> representatives;
    std::vector<std::vector<int>> members;
    std::vector<long> sizes;
    std::vector<int> orders;    // element order of the class
    std::vector<int> class_of;  // element index -> class index
    long group_exponent = 1;

    /// Class of rep^m for any integer m.
    int power_class(int cls, long m) const;
    int inverse_class(int cls) const { return power_class(cls, -1); }

    std::vector<std::vector<int>> power_table;  // [class][m], m in 0..exponent-1
};

ClassData conjugacy_classes(const FinGroup& g);

}  // namespace wlab
