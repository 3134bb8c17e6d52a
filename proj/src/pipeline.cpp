#include "wlab/pipeline.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wlab/h1_reference.hpp"

namespace wlab {

void RunConfig::validate() const {
    if (k_min < 1 || k_max > 16 || k_min > k_max) {
        throw std::invalid_argument("RunConfig: k range must lie within 1..16");
    }
    if (formats.empty()) {
        throw std::invalid_argument("RunConfig: at least one output format required");
    }
    static const std::set<std::string> known_formats = {"json", "csv", "markdown"};
    for (const auto& f : formats) {
        if (!known_formats.count(f)) throw std::invalid_argument("RunConfig: unknown format " + f);
    }
    static const std::set<std::string> known_targets = {"prop1",    "prop2",    "theorem",
                                                        "corollary", "dimtable", "all"};
    for (const auto& t : targets) {
        if (!known_targets.count(t)) throw std::invalid_argument("RunConfig: unknown target " + t);
    }
    if (coset_limit < 1) throw std::invalid_argument("RunConfig: coset limit must be positive");
}

bool RunConfig::wants(const std::string& target) const {
    return targets.count("all") > 0 || targets.count(target) > 0;
}

PipelineArtifacts run_computation(const RunConfig& cfg) {
    cfg.validate();
    PipelineArtifacts art;
    art.presentation = cfg.presentation_path.empty()
                           ? catalog::h1()
                           : load_presentation_file(cfg.presentation_path);

    CosetTable regular = todd_coxeter(art.presentation, {}, cfg.coset_limit);
    art.group = FinGroup::from_coset_table(regular);
    art.classes = conjugacy_classes(art.group);
    art.subgroups = enumerate_subgroups(art.group);
    art.table = dixon_schneider(art.group, art.classes);

    std::vector<const SubgroupRecord*> faithful;
    for (const auto& s : art.subgroups) {
        if (s.faithful_action) faithful.push_back(&s);
    }
    std::sort(faithful.begin(), faithful.end(),
              [](const SubgroupRecord* a, const SubgroupRecord* b) {
                  if (a->index != b->index) return a->index > b->index;
                  return a->class_id < b->class_id;
              });

    int serial = 0;
    for (const SubgroupRecord* s : faithful) {
        ThetaData t;
        t.subgroup_class_id = s->class_id;
        t.action = coset_action(art.group, *s);
        t.character = permutation_character(t.action, art.classes, art.group);
        t.multiplicities = decompose(t.character, art.table, art.classes);
        MultVector via_inverse = decompose_via_inverse(t.character, art.table);
        if (t.multiplicities.entries != via_inverse.entries) {
            throw std::logic_error("pipeline: inner-product and X^-1 decompositions disagree");
        }
        t.forms = closed_forms(t.character, art.table, art.classes);
        t.dim_form = dim_closed_form(t.character, art.classes);
        t.name = "deg" + std::to_string(t.action.degree) + "#" + std::to_string(serial++);
        art.thetas.push_back(std::move(t));
    }
    return art;
}

namespace {

// Profile of an irreducible: degree plus its multiplicity in each theta,
// the invariant that identifies a reference column independent of ordering.
using Profile = std::vector<long>;

std::optional<std::vector<int>> greedy_bijection(const std::vector<Profile>& ours,
                                                 const std::vector<Profile>& reference) {
    if (ours.size() != reference.size()) return std::nullopt;
    std::vector<int> witness(ours.size(), -1);
    std::vector<bool> used(reference.size(), false);
    for (size_t i = 0; i < ours.size(); ++i) {
        bool found = false;
        for (size_t j = 0; j < reference.size(); ++j) {
            if (used[j] || reference[j] != ours[i]) continue;
            witness[i] = static_cast<int>(j);
            used[j] = true;
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }
    return witness;
}

}  // namespace

ReferenceMatch match_h1_reference(PipelineArtifacts& art) {
    namespace ref = h1ref;
    ReferenceMatch match;

    if (art.group.order() != ref::kOrder || art.classes.count != ref::kClassCount ||
        static_cast<int>(art.thetas.size()) != ref::kFaithfulCount ||
        art.table.count() != ref::kClassCount) {
        match.detail = "group shape differs from the H1 reference";
        return match;
    }
    for (int i = 0; i < ref::kFaithfulCount; ++i) {
        if (art.thetas[i].action.degree != ref::kFaithfulDegrees[i]) {
            match.detail = "faithful action degrees differ from the H1 reference";
            return match;
        }
    }

    // The two degree-24 actions are interchangeable up to a table
    // automorphism; try both label assignments.
    const std::vector<std::vector<int>> assignments = {{0, 1, 2, 3, 4}, {0, 1, 2, 4, 3}};
    for (const auto& order : assignments) {
        // irreducible profiles under this assignment
        std::vector<Profile> ours(art.table.count());
        for (int i = 0; i < art.table.count(); ++i) {
            ours[i] = {art.table.degrees[i]};
            for (int t = 0; t < 5; ++t) {
                ours[i].push_back(
                    art.thetas[order[t]].multiplicities.entries[i].get_si());
            }
        }
        std::vector<Profile> reference(ref::kClassCount);
        for (int j = 0; j < ref::kClassCount; ++j) {
            reference[j] = {ref::kIrreducibleDegrees[j]};
            for (int t = 0; t < 5; ++t) reference[j].push_back(ref::kThetaDecompositions[t][j]);
        }
        auto irr_witness = greedy_bijection(ours, reference);
        if (!irr_witness) continue;

        // class signatures: the five character values
        std::vector<Profile> our_classes(art.classes.count);
        for (int j = 0; j < art.classes.count; ++j) {
            for (int t = 0; t < 5; ++t) {
                our_classes[j].push_back(art.thetas[order[t]].character.values[j]);
            }
        }
        std::vector<Profile> ref_classes(ref::kClassCount);
        for (int j = 0; j < ref::kClassCount; ++j) {
            for (int t = 0; t < 5; ++t) ref_classes[j].push_back(ref::kThetaValues[t][j]);
        }
        auto class_witness = greedy_bijection(our_classes, ref_classes);
        if (!class_witness) continue;

        // closed forms must agree with the reference families under the
        // witness; this also certifies the corrected constant-p_k misprint
        bool forms_ok = true;
        for (int t = 0; t < 5 && forms_ok; ++t) {
            const ThetaData& theta = art.thetas[order[t]];
            for (int i = 0; i < art.table.count(); ++i) {
                if (theta.forms[i] != ref::reference_form(t, (*irr_witness)[i])) {
                    forms_ok = false;
                    break;
                }
            }
        }
        if (!forms_ok) continue;

        match.matched = true;
        match.theta_order = order;
        match.irr_witness = *irr_witness;
        match.class_witness = *class_witness;
        match.swapped_pair = order[3] == 4;
        match.detail = match.swapped_pair
                           ? "matched with theta_8/theta_9 labels swapped (table automorphism)"
                           : "matched in listed order (up to table automorphism)";
        match.notes.push_back(ref::kTheta1TypoNote);
        for (int t = 0; t < 5; ++t) art.thetas[match.theta_order[t]].name = ref::kThetaNames[t];
        return match;
    }
    match.detail = "no label assignment aligns decompositions, values, and closed forms";
    return match;
}

}  // namespace wlab
