#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wlab/char_table.hpp"
#include "wlab/group.hpp"
#include "wlab/perm_char.hpp"
#include "wlab/presentation.hpp"
#include "wlab/subgroups.hpp"
#include "wlab/tensor.hpp"
#include "wlab/todd_coxeter.hpp"

namespace wlab {

struct RunConfig {
    std::string presentation_path;  // empty = built-in h1 presentation
    int coset_limit = kDefaultCosetLimit;
    int k_min = 1;
    int k_max = 4;
    std::set<std::string> formats = {"json"};          // json | csv | markdown
    std::set<std::string> targets = {"all"};           // prop1 | prop2 | theorem | corollary | dimtable | all
    std::uint64_t seed = 0;  // reserved; no algorithm consumes randomness

    void validate() const;  // k range within 1..16, at least one format
    bool wants(const std::string& target) const;
};

/// One transitive faithful action with everything derived from it.
struct ThetaData {
    std::string name;  // reference label once matched, else "deg<degree>#<n>"
    int subgroup_class_id = -1;
    CosetAction action;
    PermChar character;
    MultVector multiplicities;      // k = 1
    std::vector<ClosedForm> forms;  // one per irreducible, this library's row order
    DimClosedForm dim_form;
};

struct PipelineArtifacts {
    Presentation presentation;
    FinGroup group;
    ClassData classes;
    std::vector<SubgroupRecord> subgroups;
    CharTable table;
    std::vector<ThetaData> thetas;  // faithful transitive actions, degree descending
};

/// Alignment of the computed artifacts with the reference H1 data, up to
/// the table automorphism swapping the two degree-24 actions.
struct ReferenceMatch {
    bool matched = false;
    std::string detail;
    std::vector<int> theta_order;    // reference row i -> index into thetas
    std::vector<int> class_witness;  // our class j -> reference column
    std::vector<int> irr_witness;    // our row i -> reference chi index
    bool swapped_pair = false;       // degree-24 labels assigned in swapped order
    std::vector<std::string> notes;
};

/// Full exact pipeline: presentation -> group -> classes -> subgroups ->
/// character table -> faithful transitive characters with tensor data.
PipelineArtifacts run_computation(const RunConfig& cfg);

/// Match against the H1 reference tables and, on success, rename the thetas
/// to their reference labels.
ReferenceMatch match_h1_reference(PipelineArtifacts& artifacts);

}  // namespace wlab
