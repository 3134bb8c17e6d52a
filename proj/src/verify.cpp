#include "wlab/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "wlab/h1_reference.hpp"
#include "wlab/report.hpp"

namespace wlab {

using nlohmann::json;

bool VerificationSummary::all_passed() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const Claim& c) { return c.passed(); });
}

namespace {

// Runs one claim body, turning any exception into a failed claim so the
// remaining claims still execute.
Claim run_claim(const std::string& id, const std::string& anchor,
                const std::function<Claim(Claim)>& body) {
    Claim c{id, anchor, ClaimStatus::Fail, ""};
    try {
        return body(std::move(c));
    } catch (const std::exception& e) {
        c.status = ClaimStatus::Fail;
        c.detail = std::string("error: ") + e.what();
        return c;
    }
}

Claim pass(Claim c, const std::string& detail) {
    c.status = ClaimStatus::Pass;
    c.detail = detail;
    return c;
}

Claim fail(Claim c, const std::string& detail) {
    c.status = ClaimStatus::Fail;
    c.detail = detail;
    return c;
}

std::multiset<long> degree_multiset(const CharTable& t) {
    return {t.degrees.begin(), t.degrees.end()};
}

Claim claim_group(const PipelineArtifacts& art) {
    return run_claim("group-reconstruction", "group order 96 with 16 conjugacy classes",
                     [&](Claim c) {
                         if (art.group.order() != h1ref::kOrder) {
                             return fail(std::move(c), "order " + std::to_string(art.group.order()));
                         }
                         if (art.classes.count != h1ref::kClassCount) {
                             return fail(std::move(c),
                                         "class count " + std::to_string(art.classes.count));
                         }
                         return pass(std::move(c), "order 96, 16 classes, exponent " +
                                                       std::to_string(art.group.exponent()));
                     });
}

Claim claim_subgroups(const PipelineArtifacts& art) {
    return run_claim(
        "subgroup-census",
        "24 subgroup classes; 5 with trivial core; faithful degrees {96,48,32,24,24}",
        [&](Claim c) {
            if (static_cast<int>(art.subgroups.size()) != h1ref::kSubgroupClassCount) {
                return fail(std::move(c),
                            "subgroup classes: " + std::to_string(art.subgroups.size()));
            }
            std::multiset<long> degrees;
            for (const auto& s : art.subgroups) {
                if (s.faithful_action) degrees.insert(s.index);
            }
            std::multiset<long> expected(h1ref::kFaithfulDegrees.begin(),
                                         h1ref::kFaithfulDegrees.end());
            if (degrees != expected) {
                std::ostringstream os;
                os << "faithful degrees {";
                for (long d : degrees) os << d << " ";
                os << "}";
                return fail(std::move(c), os.str());
            }
            return pass(std::move(c), "24 classes; faithful action degrees 96, 48, 32, 24, 24");
        });
}

Claim claim_chartable(const PipelineArtifacts& art) {
    return run_claim(
        "character-table",
        "orthogonality exact; degrees {1^4,2^6,3^4,4^2}; sum 36; square sum 96",
        [&](Claim c) {
            const auto& t = art.table;
            const Cyclotomic one = Cyclotomic::from_integer(1);
            for (int i = 0; i < t.count(); ++i) {
                for (int j = 0; j < t.count(); ++j) {
                    Cyclotomic ip = inner_product(t.rows[i], t.rows[j], art.classes);
                    if (ip != (i == j ? one : Cyclotomic())) {
                        return fail(std::move(c), "row orthogonality fails at (" +
                                                      std::to_string(i) + "," + std::to_string(j) +
                                                      ")");
                    }
                }
            }
            for (int j = 0; j < t.count(); ++j) {
                for (int k = 0; k < t.count(); ++k) {
                    Cyclotomic acc;
                    for (int i = 0; i < t.count(); ++i) {
                        acc += t.rows[i].values[j] * t.rows[i].values[k].conj();
                    }
                    Cyclotomic expected =
                        j == k ? Cyclotomic::from_rational(
                                     make_rat(t.group_order, art.classes.sizes[j]))
                               : Cyclotomic();
                    if (acc != expected) {
                        return fail(std::move(c), "column orthogonality fails at (" +
                                                      std::to_string(j) + "," + std::to_string(k) +
                                                      ")");
                    }
                }
            }
            std::multiset<long> expected_degrees(std::begin(h1ref::kIrreducibleDegrees),
                                                 std::end(h1ref::kIrreducibleDegrees));
            if (degree_multiset(t) != expected_degrees) {
                return fail(std::move(c), "degree multiset differs");
            }
            long sum = sum_of_degrees(t);
            long sq = 0;
            for (long d : t.degrees) sq += d * d;
            if (sum != h1ref::kDegreeSum || sq != h1ref::kOrder) {
                return fail(std::move(c), "degree sums: " + std::to_string(sum) + ", " +
                                              std::to_string(sq));
            }
            return pass(std::move(c),
                        "both orthogonality relations exact; degree sum 36, square sum 96");
        });
}

Claim claim_prop1(const PipelineArtifacts& art, const ReferenceMatch& match) {
    return run_claim(
        "prop1-character-values",
        "five permutation-character rows match the reference rows up to a class permutation",
        [&](Claim c) {
            if (!match.matched) return fail(std::move(c), match.detail);
            for (int t = 0; t < 5; ++t) {
                const auto& theta = art.thetas[match.theta_order[t]];
                for (int j = 0; j < art.classes.count; ++j) {
                    if (theta.character.values[j] !=
                        h1ref::kThetaValues[t][match.class_witness[j]]) {
                        return fail(std::move(c), "witnessed row differs for " + theta.name);
                    }
                }
            }
            // pinned structure of the nonzero columns
            auto count_value = [&](int t, long v, long* size_of_unique) {
                const auto& theta = art.thetas[match.theta_order[t]];
                int count = 0;
                for (int j = 1; j < art.classes.count; ++j) {
                    if (theta.character.values[j] == v) {
                        ++count;
                        if (size_of_unique) *size_of_unique = art.classes.sizes[j];
                    }
                }
                return count;
            };
            long size3 = 0, size4 = 0;
            if (count_value(1, 8, &size3) != 1 || size3 != h1ref::kTheta3EightClassSize) {
                return fail(std::move(c), "theta_3 value-8 class wrong");
            }
            if (count_value(2, 8, &size4) != 1 || size4 != h1ref::kTheta4EightClassSize) {
                return fail(std::move(c), "theta_4 value-8 class wrong");
            }
            if (count_value(3, 4, nullptr) != 3 || count_value(4, 4, nullptr) != 3) {
                return fail(std::move(c), "theta_8/theta_9 value-4 class count wrong");
            }
            return pass(std::move(c),
                        "witness permutation exhibited; theta_3 hits 8 on one size-6 class, "
                        "theta_4 on one size-8 class, theta_8/theta_9 hit 4 on three classes each");
        });
}

Claim claim_prop2(const PipelineArtifacts& art, const ReferenceMatch& match) {
    return run_claim(
        "prop2-decompositions",
        "decompositions match the five reference multiplicity vectors up to table automorphism; "
        "predicate suite agrees",
        [&](Claim c) {
            if (!match.matched) return fail(std::move(c), match.detail);
            for (int t = 0; t < 5; ++t) {
                const auto& theta = art.thetas[match.theta_order[t]];
                for (int i = 0; i < art.table.count(); ++i) {
                    if (theta.multiplicities.entries[i] !=
                        h1ref::kThetaDecompositions[t][match.irr_witness[i]]) {
                        return fail(std::move(c), "witnessed decomposition differs for " +
                                                      theta.name);
                    }
                }
            }
            for (int t = 0; t < 5; ++t) {
                const auto& theta = art.thetas[match.theta_order[t]];
                bool expect_free = t >= 3;  // theta_8, theta_9
                if (is_multiplicity_free(theta.multiplicities) != expect_free) {
                    return fail(std::move(c), theta.name + ": multiplicity-freeness wrong");
                }
                if (is_doubly_transitive(theta.multiplicities)) {
                    return fail(std::move(c), theta.name + " reported doubly transitive");
                }
                if (!contains_identity_once(theta.multiplicities)) {
                    return fail(std::move(c), theta.name + ": <theta, chi_1> != 1");
                }
                if (orbit_count(theta.character, art.classes) != 1) {
                    return fail(std::move(c), theta.name + " not transitive");
                }
            }
            return pass(std::move(c),
                        std::string("all five vectors witnessed; theta_8, theta_9 "
                                    "multiplicity-free and not doubly transitive; "
                                    "theta_1, theta_3, theta_4 not multiplicity-free") +
                            (match.swapped_pair ? " (degree-24 labels swapped)" : ""));
        });
}

Claim claim_closed_forms(const PipelineArtifacts& art, const ReferenceMatch& match) {
    return run_claim(
        "closed-forms",
        "derived closed forms equal the multiplicity oracle for k = 1..8; constant-p_k misprint "
        "corrected to 96^k/24",
        [&](Claim c) {
            if (!match.matched) return fail(std::move(c), match.detail);
            for (const auto& theta : art.thetas) {
                for (long k = 1; k <= 8; ++k) {
                    MultVector oracle =
                        tensor_multiplicities(theta.character, k, art.table, art.classes);
                    for (int i = 0; i < art.table.count(); ++i) {
                        if (theta.forms[i].eval(k) != oracle.entries[i]) {
                            return fail(std::move(c), theta.name + ": closed form for chi_" +
                                                          std::to_string(i + 1) +
                                                          " differs at k=" + std::to_string(k));
                        }
                    }
                }
            }
            // the reference families (including the corrected p_k) were
            // already matched term-by-term in match_h1_reference
            c.status = ClaimStatus::CorrectedTypo;
            c.detail = "all 5 x 16 forms agree with the oracle at k = 1..8; " +
                       h1ref::kTheta1TypoNote;
            return c;
        });
}

Claim claim_dims(const PipelineArtifacts& art, const ReferenceMatch& match,
                 const RunConfig& cfg) {
    return run_claim(
        "corollary-dim-table",
        "dim A^(k) agrees across square-sum, spectral, and closed-form routes; table of dims "
        "reproduced exactly",
        [&](Claim c) {
            if (!match.matched) return fail(std::move(c), match.detail);
            int checked_table_cols = 0;
            for (int t = 0; t < 5; ++t) {
                const auto& theta = art.thetas[match.theta_order[t]];
                DimClosedForm reference = h1ref::make_dim_form(h1ref::kDimForms[t]);
                for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
                    BigInt dim = dim_centralizer(theta.character, k, art.table, art.classes);
                    if (theta.dim_form.eval(k) != dim) {
                        return fail(std::move(c), theta.name + ": derived dim form differs at k=" +
                                                      std::to_string(k));
                    }
                    if (reference.eval(k) != dim) {
                        return fail(std::move(c), theta.name +
                                                      ": reference dim formula differs at k=" +
                                                      std::to_string(k));
                    }
                    if (k <= 4) {
                        int row = t < 3 ? t : 3;  // theta_8 and theta_9 share the last row
                        if (dim != BigInt(h1ref::kDimTable[row][k - 1])) {
                            return fail(std::move(c), theta.name + ": dim table entry k=" +
                                                          std::to_string(k) + " differs");
                        }
                        ++checked_table_cols;
                    }
                }
            }
            BigInt d8 = dim_centralizer(art.thetas[match.theta_order[3]].character, cfg.k_max,
                                        art.table, art.classes);
            BigInt d9 = dim_centralizer(art.thetas[match.theta_order[4]].character, cfg.k_max,
                                        art.table, art.classes);
            if (d8 != d9) return fail(std::move(c), "theta_8 and theta_9 dims differ");
            return pass(std::move(c), "three routes agree for k = " + std::to_string(cfg.k_min) +
                                          ".." + std::to_string(cfg.k_max) + "; " +
                                          std::to_string(checked_table_cols) +
                                          " pinned table entries reproduced");
        });
}

Claim claim_properties(const PipelineArtifacts& art, const ReferenceMatch& match,
                       const RunConfig& cfg) {
    return run_claim(
        "property-suite",
        "orbit counting for every coset action; exact reconstruction; degree bookkeeping for "
        "k <= 8; byte-identical reruns",
        [&](Claim c) {
            for (const auto& s : art.subgroups) {
                CosetAction action = coset_action(art.group, s);
                PermChar theta = permutation_character(action, art.classes, art.group);
                if (orbit_count(theta, art.classes) != 1) {
                    return fail(std::move(c), "coset action of class " +
                                                  std::to_string(s.class_id + 1) +
                                                  " has orbit count != 1");
                }
            }
            for (const auto& theta : art.thetas) {
                for (int j = 0; j < art.classes.count; ++j) {
                    Cyclotomic acc;
                    for (int i = 0; i < art.table.count(); ++i) {
                        acc += Cyclotomic::from_rational(BigRat(theta.multiplicities.entries[i]),
                                                         art.table.conductor) *
                               art.table.rows[i].values[j];
                    }
                    if (acc != Cyclotomic::from_integer(theta.character.values[j],
                                                        art.table.conductor)) {
                        return fail(std::move(c), theta.name + ": reconstruction fails");
                    }
                }
                for (long k = 1; k <= 8; ++k) {
                    MultVector m = tensor_multiplicities(theta.character, k, art.table,
                                                         art.classes);
                    BigInt weighted = 0;
                    for (int i = 0; i < art.table.count(); ++i) {
                        weighted += m.entries[i] * BigInt(art.table.degrees[i]);
                    }
                    if (weighted != big_pow(BigInt(theta.character.degree()),
                                            static_cast<unsigned long>(k))) {
                        return fail(std::move(c), theta.name + ": degree bookkeeping fails at k=" +
                                                      std::to_string(k));
                    }
                }
            }

            // determinism: a second full run must emit identical bytes
            PipelineArtifacts second = run_computation(cfg);
            ReferenceMatch second_match = match_h1_reference(second);
            if (chartable_json(art) != chartable_json(second) ||
                subgroups_json(art) != subgroups_json(second) ||
                tensor_json(art, match, cfg.k_min, cfg.k_max) !=
                    tensor_json(second, second_match, cfg.k_min, cfg.k_max) ||
                dim_table_csv(art, match, cfg.k_min, cfg.k_max) !=
                    dim_table_csv(second, second_match, cfg.k_min, cfg.k_max)) {
                return fail(std::move(c), "re-run emitted different bytes");
            }
            return pass(std::move(c),
                        "24 transitive actions orbit-counted; reconstruction and degree "
                        "bookkeeping exact; re-run byte-identical");
        });
}

// ---- small-group cross-checks ------------------------------------------

struct SmallGroupSpec {
    std::string name;
    Presentation presentation;
    long order;
    int class_count;
    int subgroup_classes;
    std::vector<long> degrees;
    // expected character rows (conductor = exponent); empty = skip value check
    std::vector<std::vector<Cyclotomic>> expected_rows;
};

std::vector<Cyclotomic> int_row(const std::vector<long>& v, int conductor) {
    std::vector<Cyclotomic> out;
    out.reserve(v.size());
    for (long x : v) out.push_back(Cyclotomic::from_integer(x, conductor));
    return out;
}

bool rows_match_up_to_order(const CharTable& table,
                            std::vector<std::vector<Cyclotomic>> expected) {
    if (static_cast<size_t>(table.count()) != expected.size()) return false;
    std::vector<bool> used(expected.size(), false);
    for (int i = 0; i < table.count(); ++i) {
        bool found = false;
        for (size_t j = 0; j < expected.size(); ++j) {
            if (used[j] || expected[j].size() != table.rows[i].values.size()) continue;
            bool equal = true;
            for (size_t k = 0; k < expected[j].size(); ++k) {
                if (expected[j][k] != table.rows[i].values[k]) {
                    equal = false;
                    break;
                }
            }
            if (equal) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::string check_small_group(const SmallGroupSpec& spec) {
    CosetTable table = todd_coxeter(spec.presentation, {});
    FinGroup g = FinGroup::from_coset_table(table);
    if (g.order() != spec.order) return spec.name + ": order " + std::to_string(g.order());
    ClassData cd = conjugacy_classes(g);
    if (cd.count != spec.class_count) {
        return spec.name + ": class count " + std::to_string(cd.count);
    }
    auto subs = enumerate_subgroups(g);
    if (static_cast<int>(subs.size()) != spec.subgroup_classes) {
        return spec.name + ": subgroup classes " + std::to_string(subs.size());
    }
    CharTable x = dixon_schneider(g, cd);
    std::multiset<long> degrees(x.degrees.begin(), x.degrees.end());
    if (degrees != std::multiset<long>(spec.degrees.begin(), spec.degrees.end())) {
        return spec.name + ": degree multiset differs";
    }
    if (!spec.expected_rows.empty() && !rows_match_up_to_order(x, spec.expected_rows)) {
        return spec.name + ": character values differ from the hand table";
    }
    for (const auto& s : subs) {
        CosetAction action = coset_action(g, s);
        PermChar theta = permutation_character(action, cd, g);
        if (orbit_count(theta, cd) != 1) return spec.name + ": orbit count failure";
        MultVector m = decompose(theta, x, cd);
        if (m.entries != decompose_via_inverse(theta, x).entries) {
            return spec.name + ": decomposition routes disagree";
        }
        if (!contains_identity_once(m)) return spec.name + ": trivial constituent count wrong";
    }
    return "";
}

Claim claim_small_groups() {
    return run_claim(
        "small-group-oracles",
        "S3, cyclic groups up to order 8, and the quaternion group pass the same pipeline "
        "against hand-checked data",
        [&](Claim c) {
            std::vector<SmallGroupSpec> specs;

            {
                SmallGroupSpec s;
                s.name = "S3";
                s.presentation = catalog::symmetric3();
                s.order = 6;
                s.class_count = 3;
                s.subgroup_classes = 4;
                s.degrees = {1, 1, 2};
                s.expected_rows = {int_row({1, 1, 1}, 6), int_row({1, -1, 1}, 6),
                                   int_row({2, 0, -1}, 6)};
                specs.push_back(std::move(s));
            }
            const int divisor_count[9] = {0, 1, 2, 2, 3, 2, 4, 2, 4};
            for (int n = 1; n <= 8; ++n) {
                SmallGroupSpec s;
                s.name = "C" + std::to_string(n);
                s.presentation = catalog::cyclic(n);
                s.order = n;
                s.class_count = n;
                s.subgroup_classes = divisor_count[n];
                s.degrees.assign(n, 1);
                specs.push_back(std::move(s));
            }
            {
                SmallGroupSpec s;
                s.name = "Q8";
                s.presentation = catalog::quaternion8();
                s.order = 8;
                s.class_count = 5;
                s.subgroup_classes = 6;
                s.degrees = {1, 1, 1, 1, 2};
                s.expected_rows = {int_row({1, 1, 1, 1, 1}, 4), int_row({1, 1, 1, -1, -1}, 4),
                                   int_row({1, 1, -1, 1, -1}, 4), int_row({1, 1, -1, -1, 1}, 4),
                                   int_row({2, -2, 0, 0, 0}, 4)};
                specs.push_back(std::move(s));
            }

            for (const auto& spec : specs) {
                std::string err = check_small_group(spec);
                if (!err.empty()) return fail(std::move(c), err);
            }

            // the natural degree-3 action of S3 is the doubly transitive one
            {
                CosetTable t3 = todd_coxeter(catalog::symmetric3(), {});
                FinGroup s3 = FinGroup::from_coset_table(t3);
                ClassData cd = conjugacy_classes(s3);
                CharTable x = dixon_schneider(s3, cd);
                bool found = false;
                for (const auto& s : enumerate_subgroups(s3)) {
                    if (s.order != 2 || !s.faithful_action) continue;
                    PermChar theta =
                        permutation_character(coset_action(s3, s), cd, s3);
                    found = is_doubly_transitive(decompose(theta, x, cd));
                }
                if (!found) return fail(std::move(c), "S3 natural action not doubly transitive");
            }
            return pass(std::move(c),
                        "S3, C1..C8, Q8: orders, class counts, subgroup censuses, degrees, and "
                        "hand character tables all reproduced");
        });
}

}  // namespace

VerificationSummary verify_claims(const RunConfig& cfg) {
    cfg.validate();
    PipelineArtifacts art = run_computation(cfg);
    ReferenceMatch match = match_h1_reference(art);

    VerificationSummary vs;
    vs.claims.push_back(claim_group(art));
    vs.claims.push_back(claim_subgroups(art));
    vs.claims.push_back(claim_chartable(art));
    vs.claims.push_back(claim_prop1(art, match));
    vs.claims.push_back(claim_prop2(art, match));
    vs.claims.push_back(claim_closed_forms(art, match));
    vs.claims.push_back(claim_dims(art, match, cfg));
    vs.claims.push_back(claim_properties(art, match, cfg));
    vs.claims.push_back(claim_small_groups());
    return vs;
}

std::string verification_text(const VerificationSummary& summary) {
    std::ostringstream os;
    for (const auto& c : summary.claims) {
        const char* tag = c.status == ClaimStatus::Pass          ? "PASS"
                          : c.status == ClaimStatus::CorrectedTypo ? "PASS*"
                                                                   : "FAIL";
        os << "[" << tag << "] " << c.id << ": " << c.detail << "\n";
    }
    os << (summary.all_passed() ? "all claims passed" : "SOME CLAIMS FAILED") << "\n";
    return os.str();
}

std::string verification_json(const VerificationSummary& summary) {
    json arr = json::array();
    for (const auto& c : summary.claims) {
        arr.push_back(json{
            {"id", c.id},
            {"anchor", c.anchor},
            {"status", c.status == ClaimStatus::Pass          ? "pass"
                       : c.status == ClaimStatus::CorrectedTypo ? "corrected-typo"
                                                                : "fail"},
            {"detail", c.detail},
        });
    }
    json out{{"claims", arr}, {"all_passed", summary.all_passed()}};
    return out.dump(2) + "\n";
}

std::string verification_csv(const VerificationSummary& summary) {
    std::ostringstream os;
    os << "id,status,detail\n";
    for (const auto& c : summary.claims) {
        std::string detail = c.detail;
        for (char& ch : detail) {
            if (ch == ',') ch = ';';
        }
        os << c.id << ","
           << (c.status == ClaimStatus::Pass          ? "pass"
               : c.status == ClaimStatus::CorrectedTypo ? "corrected-typo"
                                                        : "fail")
           << "," << detail << "\n";
    }
    return os.str();
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
    out << content;
}

}  // namespace

VerificationSummary run_pipeline(const RunConfig& cfg, const EmitPaths& paths) {
    cfg.validate();
    if (!cfg.presentation_path.empty()) {
        load_presentation_file(cfg.presentation_path);  // parse errors propagate, no reports
    }
    try {
        VerificationSummary summary = verify_claims(cfg);
        write_file(paths.json, verification_json(summary));
        write_file(paths.csv, verification_csv(summary));
        write_file(paths.markdown, verification_text(summary));
        return summary;
    } catch (const std::exception& e) {
        json marker{{"status", "FAILED"}, {"error", e.what()}};
        write_file(paths.json, marker.dump(2) + "\n");
        write_file(paths.csv, std::string("status,error\nFAILED,") + e.what() + "\n");
        write_file(paths.markdown, std::string("FAILED: ") + e.what() + "\n");
        throw;
    }
}

}  // namespace wlab
