#pragma once

#include <string>
#include <vector>

#include "wlab/group.hpp"

namespace wlab {

/// One conjugacy class of subgroups. `members` is the canonical class
/// representative: the lexicographically least sorted member list over all
/// conjugates, so equal classes produce identical records.
struct SubgroupRecord {
    std::vector<int> members;     // sorted element indices
    std::vector<int> generators;  // element indices generating `members`
    long order = 1;
    long index = 1;
    int class_id = -1;
    long conjugate_count = 1;
    std::vector<int> core_members;  // largest normal subgroup inside
    long core_order = 1;
    bool faithful_action = false;  // core trivial <=> coset action faithful
};

/// All subgroups up to conjugacy, sorted by (order, canonical member list).
/// Bottom-up closure: grow every known class by every outside element until
/// no new class appears. Throws "cap-exceeded" if |G| > order_cap.
std::vector<SubgroupRecord> enumerate_subgroups(const FinGroup& g, long order_cap = 10000);

/// Largest normal subgroup of g contained in h (the kernel of the coset
/// action on h's cosets).
SubgroupRecord core_of(const FinGroup& g, const SubgroupRecord& h);

/// Transitive right action of g on the cosets of a subgroup.
struct CosetAction {
    int degree = 0;
    std::vector<Perm> generator_images;
    std::string label;

    std::vector<int> coset_of_element;  // |G| entries
    std::vector<int> coset_reps;        // least element of each coset

    Perm element_image(const FinGroup& g, int element) const;
    std::vector<int> kernel_elements(const FinGroup& g) const;
};

CosetAction coset_action(const FinGroup& g, const SubgroupRecord& h);

/// Subgroup generated by the given elements (sorted member list).
std::vector<int> generated_subgroup(const FinGroup& g, const std::vector<int>& gens);

}  // namespace wlab
