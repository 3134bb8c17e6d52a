#include "wlab/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

#include "wlab/h1_reference.hpp"

namespace wlab {

using nlohmann::json;

namespace {

json cyclotomic_json(const Cyclotomic& v) {
    json coeffs = json::array();
    for (const auto& [exp, text] : v.coeff_entries()) {
        coeffs.push_back(json::array({exp, text}));
    }
    return json{{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

json presentation_json(const Presentation& p) {
    json rels = json::array();
    for (const auto& r : p.relators) rels.push_back(p.word_to_string(r));
    return json{{"generators", p.generator_names}, {"relators", rels}};
}

json classes_json(const PipelineArtifacts& art) {
    json out = json::array();
    for (int c = 0; c < art.classes.count; ++c) {
        out.push_back(json{
            {"index", c + 1},
            {"size", art.classes.sizes[c]},
            {"element_order", art.classes.orders[c]},
            {"representative_word",
             art.presentation.word_to_string(art.group.word(art.classes.representatives[c]))},
        });
    }
    return out;
}

// Order in which reports list the actions: reference order when matched.
std::vector<int> report_theta_order(const PipelineArtifacts& art, const ReferenceMatch& match) {
    if (match.matched) return match.theta_order;
    std::vector<int> order(art.thetas.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    return order;
}

std::string rat_text(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string form_key(const ClosedForm& form) {
    std::string key;
    for (const auto& [base, coeff] : form.terms) {
        key += base.get_str() + ":" + rat_to_string(coeff) + ";";
    }
    return key;
}

// coeff * base^(k-1), rendered in the "base^(k-1)/den" style.
std::string form_term_text(const BigInt& base, const BigRat& coeff, const std::string& power) {
    const BigInt num = coeff.get_num() > 0 ? coeff.get_num() : BigInt(-coeff.get_num());
    const BigInt& den = coeff.get_den();
    std::string out;
    if (num != 1) out += num.get_str() + "*";
    out += base.get_str() + "^" + power;
    if (den != 1) out += "/" + den.get_str();
    return out;
}

std::string joined_form_text(const std::map<BigInt, BigRat>& terms, const std::string& power) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {  // dominant base first
        const auto& [base, coeff] = *it;
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        os << form_term_text(base, coeff, power);
    }
    return os.str();
}

}  // namespace

std::string closed_form_text(const ClosedForm& form) {
    return joined_form_text(form.terms, "(k-1)");
}

std::string dim_form_text(const DimClosedForm& form) {
    // coeff * v^(2k) = (coeff*v) * v^(2k-1)
    std::map<BigInt, BigRat> shifted;
    for (const auto& [base, coeff] : form.terms) shifted[base] = coeff * BigRat(base);
    return joined_form_text(shifted, "(2k-1)");
}

std::string group_summary_text(const PipelineArtifacts& art) {
    std::ostringstream os;
    os << "group order:    " << art.group.order() << "\n";
    os << "exponent:       " << art.group.exponent() << "\n";
    os << "degree:         " << art.group.degree() << " (regular coset action)\n";
    os << "generators:     ";
    for (int i = 0; i < art.presentation.ngens(); ++i) {
        if (i) os << ", ";
        os << art.presentation.generator_names[i];
    }
    os << "\nconjugacy classes: " << art.classes.count << "\n";
    os << "class | size | element order | representative\n";
    for (int c = 0; c < art.classes.count; ++c) {
        std::string w =
            art.presentation.word_to_string(art.group.word(art.classes.representatives[c]));
        os << "  c_" << c + 1 << " | " << art.classes.sizes[c] << " | " << art.classes.orders[c]
           << " | " << (w.empty() ? "1" : w) << "\n";
    }
    return os.str();
}

std::string chartable_json(const PipelineArtifacts& art) {
    json irr = json::array();
    for (int i = 0; i < art.table.count(); ++i) {
        json values = json::array();
        for (const auto& v : art.table.rows[i].values) values.push_back(cyclotomic_json(v));
        irr.push_back(json{{"index", i + 1},
                           {"degree", art.table.degrees[i]},
                           {"values", values}});
    }
    json out{
        {"group",
         {{"order", art.group.order()},
          {"exponent", art.group.exponent()},
          {"presentation", presentation_json(art.presentation)}}},
        {"conductor", art.table.conductor},
        {"classes", classes_json(art)},
        {"irreducibles", irr},
    };
    return out.dump(2) + "\n";
}

std::string chartable_markdown(const PipelineArtifacts& art) {
    std::ostringstream os;
    os << "# Character table (order " << art.group.order() << ", " << art.classes.count
       << " classes, values in Q(zeta_" << art.table.conductor << "))\n\n";
    os << "| |";
    for (int c = 0; c < art.classes.count; ++c) os << " c_" << c + 1 << " |";
    os << "\n|---|";
    for (int c = 0; c < art.classes.count; ++c) os << "---|";
    os << "\n| size |";
    for (int c = 0; c < art.classes.count; ++c) os << " " << art.classes.sizes[c] << " |";
    os << "\n| element order |";
    for (int c = 0; c < art.classes.count; ++c) os << " " << art.classes.orders[c] << " |";
    os << "\n";
    for (int i = 0; i < art.table.count(); ++i) {
        os << "| chi_" << i + 1 << " |";
        for (const auto& v : art.table.rows[i].values) os << " " << v.str() << " |";
        os << "\n";
    }
    return os.str();
}

std::string subgroups_json(const PipelineArtifacts& art) {
    json arr = json::array();
    for (const auto& s : art.subgroups) {
        json gens = json::array();
        for (int e : s.generators) {
            gens.push_back(art.presentation.word_to_string(art.group.word(e)));
        }
        arr.push_back(json{
            {"class_id", s.class_id + 1},
            {"order", s.order},
            {"index", s.index},
            {"conjugates", s.conjugate_count},
            {"core_order", s.core_order},
            {"faithful", s.faithful_action},
            {"generators", gens},
        });
    }
    json out{{"group_order", art.group.order()},
             {"subgroup_classes", static_cast<long>(art.subgroups.size())},
             {"subgroups", arr}};
    return out.dump(2) + "\n";
}

std::string permchars_markdown(const PipelineArtifacts& art, const ReferenceMatch& match) {
    std::ostringstream os;
    const auto order = report_theta_order(art, match);

    os << "# Permutation characters of the faithful transitive actions\n\n";
    os << "## Conjugacy classes (our canonical order)\n\n";
    os << "| class | size | element order |\n|---|---|---|\n";
    for (int c = 0; c < art.classes.count; ++c) {
        os << "| c_" << c + 1 << " | " << art.classes.sizes[c] << " | " << art.classes.orders[c]
           << " |\n";
    }

    os << "\n## Values (our class order)\n\n| theta |";
    for (int c = 0; c < art.classes.count; ++c) os << " c_" << c + 1 << " |";
    os << "\n|---|";
    for (int c = 0; c < art.classes.count; ++c) os << "---|";
    os << "\n";
    for (int t : order) {
        os << "| " << art.thetas[t].name << " |";
        for (long v : art.thetas[t].character.values) os << " " << v << " |";
        os << "\n";
    }

    if (match.matched) {
        os << "\n## Witness permutation to the reference class order\n\n";
        for (int c = 0; c < art.classes.count; ++c) {
            if (c) os << ", ";
            os << "c_" << c + 1 << " -> C_" << match.class_witness[c] + 1;
        }
        os << "\n\n## Values (reference class order)\n\n| theta |";
        for (int c = 0; c < art.classes.count; ++c) os << " C_" << c + 1 << " |";
        os << "\n|---|";
        for (int c = 0; c < art.classes.count; ++c) os << "---|";
        os << "\n";
        for (int t : order) {
            std::vector<long> row(art.classes.count);
            for (int c = 0; c < art.classes.count; ++c) {
                row[match.class_witness[c]] = art.thetas[t].character.values[c];
            }
            os << "| " << art.thetas[t].name << " |";
            for (long v : row) os << " " << v << " |";
            os << "\n";
        }
    }

    os << "\n## Decompositions into irreducibles (our row order)\n\n";
    for (int t : order) {
        os << art.thetas[t].name << " =";
        bool first = true;
        for (int i = 0; i < art.table.count(); ++i) {
            const BigInt& m = art.thetas[t].multiplicities.entries[i];
            if (m == 0) continue;
            os << (first ? " " : " + ");
            first = false;
            if (m != 1) os << m.get_str() << "*";
            os << "chi_" << i + 1;
        }
        os << "\n\n";
    }
    if (match.matched) {
        os << "Witness to the reference character order"
           << (match.swapped_pair ? " (degree-24 labels swapped by the table automorphism)"
                                  : " (up to table automorphism)")
           << ":\n\n";
        for (int i = 0; i < art.table.count(); ++i) {
            if (i) os << ", ";
            os << "chi_" << i + 1 << " -> chi_" << match.irr_witness[i] + 1;
        }
        os << "\n";
    }

    os << "\n## Predicates\n\n";
    os << "| theta | degree | transitive | trivial constituent once | multiplicity-free | "
          "commutative centralizer ring | doubly transitive |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (int t : order) {
        const auto& td = art.thetas[t];
        bool mf = is_multiplicity_free(td.multiplicities);
        bool dt = is_doubly_transitive(td.multiplicities);
        os << "| " << td.name << " | " << td.action.degree << " | yes | "
           << (contains_identity_once(td.multiplicities) ? "yes" : "no") << " | "
           << (mf ? "yes" : "no") << " | " << (mf ? "yes" : "no") << " | "
           << (dt ? "yes" : "no") << " |\n";
    }
    return os.str();
}

namespace {

std::string wedderburn_text(const WedderburnStructure& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, count] : w.components) {
        if (!first) os << " + ";
        first = false;
        if (count > 1) os << count;
        os << "M_" << d.get_str();
    }
    if (first) os << "0";
    os << "  (dim " << w.dimension.get_str() << ")";
    return os.str();
}

// Letters for the distinct closed forms of one theta: reference letters when
// matched, else f1, f2, ... in order of first appearance.
std::map<std::string, std::string> form_letters(const PipelineArtifacts& art,
                                                const ReferenceMatch& match, int ref_index,
                                                int theta_index) {
    std::map<std::string, std::string> letters;
    if (match.matched) {
        for (const auto& [letter, spec] : h1ref::kFormFamilies[ref_index]) {
            letters[form_key(h1ref::make_closed_form(spec))] = std::string(1, letter);
        }
        return letters;
    }
    int next = 1;
    for (const auto& form : art.thetas[theta_index].forms) {
        std::string key = form_key(form);
        if (!letters.count(key)) letters[key] = "f" + std::to_string(next++);
    }
    return letters;
}

}  // namespace

std::string tensor_json(const PipelineArtifacts& art, const ReferenceMatch& match,
                        int k_min, int k_max) {
    json thetas = json::array();
    for (int t : report_theta_order(art, match)) {
        const ThetaData& td = art.thetas[t];
        json forms = json::array();
        for (int i = 0; i < art.table.count(); ++i) {
            json terms = json::array();
            for (const auto& [base, coeff] : td.forms[i].terms) {
                terms.push_back(json{{"base", base.get_str()}, {"coeff", rat_text(coeff)}});
            }
            forms.push_back(json{{"chi", i + 1}, {"terms", terms}});
        }
        json per_k = json::array();
        for (int k = k_min; k <= k_max; ++k) {
            MultVector m = tensor_multiplicities(td.character, k, art.table, art.classes);
            json mult = json::array();
            for (const auto& e : m.entries) mult.push_back(e.get_str());
            WedderburnStructure w = wedderburn(td.character, k, art.table, art.classes);
            json comps = json::array();
            for (const auto& [d, count] : w.components) {
                comps.push_back(json{{"block", d.get_str()}, {"count", count}});
            }
            per_k.push_back(json{{"k", k},
                                 {"multiplicities", mult},
                                 {"wedderburn", comps},
                                 {"dim", w.dimension.get_str()}});
        }
        thetas.push_back(json{{"theta", td.name},
                              {"degree", td.action.degree},
                              {"closed_forms", forms},
                              {"dim_form", dim_form_text(td.dim_form)},
                              {"powers", per_k}});
    }
    json out{{"group_order", art.group.order()},
             {"k_min", k_min},
             {"k_max", k_max},
             {"reference_match", match.matched},
             {"notes", match.notes},
             {"thetas", thetas}};
    return out.dump(2) + "\n";
}

std::string tensor_markdown(const PipelineArtifacts& art, const ReferenceMatch& match,
                            const RunConfig& cfg) {
    std::ostringstream os;
    os << "# Centralizer rings of tensor powers\n\n";
    os << "d^(k) is the multiplicity vector of theta^k over the irreducible characters; "
          "the centralizer ring of the k-th tensor power is the direct sum of the matrix "
          "algebras M_d over its nonzero entries, of dimension sum d^2.\n";

    for (int idx = 0; idx < static_cast<int>(art.thetas.size()); ++idx) {
        int t = report_theta_order(art, match)[idx];
        const ThetaData& td = art.thetas[t];
        os << "\n## " << td.name << " (degree " << td.action.degree << ")\n";

        auto letters = form_letters(art, match, idx, t);
        if (cfg.wants("theorem")) {
            os << "\nClosed forms d_i^(k), grouped by shape:\n\n";
            std::map<std::string, std::vector<int>> by_form;
            for (int i = 0; i < art.table.count(); ++i) {
                by_form[form_key(td.forms[i])].push_back(i + 1);
            }
            std::vector<std::pair<std::string, std::vector<int>>> listed(by_form.begin(),
                                                                         by_form.end());
            std::sort(listed.begin(), listed.end(), [&](const auto& a, const auto& b) {
                return letters.at(a.first) < letters.at(b.first);
            });
            for (const auto& [key, chis] : listed) {
                os << "  " << letters.at(key) << "_k = "
                   << closed_form_text(td.forms[chis.front() - 1]) << "   [";
                for (size_t j = 0; j < chis.size(); ++j) {
                    if (j) os << ", ";
                    os << "chi_" << chis[j];
                }
                os << "]\n";
            }
            os << "\nWedderburn structure for every k >= 1: ";
            bool first = true;
            for (const auto& [key, chis] : listed) {
                if (!first) os << " + ";
                first = false;
                if (chis.size() > 1) os << chis.size();
                os << "M_" << letters.at(key);
            }
            os << "\n";
            if (match.matched) {
                os << "As printed in the reference (split by its chi blocks): ";
                bool f2 = true;
                for (const auto& [count, letter] : h1ref::kWedderburnPrinted[idx]) {
                    if (!f2) os << " + ";
                    f2 = false;
                    if (count > 1) os << count;
                    os << "M_" << letter;
                }
                os << "\n";
            }
        }

        os << "\nPowers k = " << cfg.k_min << ".." << cfg.k_max << ":\n\n";
        for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
            MultVector m = tensor_multiplicities(td.character, k, art.table, art.classes);
            os << "  k=" << k << ": d = (";
            for (int i = 0; i < art.table.count(); ++i) {
                if (i) os << ", ";
                os << m.entries[i].get_str();
            }
            os << "), " << wedderburn_text(wedderburn(td.character, k, art.table, art.classes))
               << "\n";
        }

        if (cfg.wants("corollary")) {
            os << "\ndim formula: dim A^(k) = " << dim_form_text(td.dim_form) << "\n";
        }
    }

    if (cfg.wants("dimtable")) {
        os << "\n" << dim_table_markdown(art, match, cfg.k_min, cfg.k_max);
    }
    if (match.matched) {
        os << "\nNotes:\n";
        for (const auto& n : match.notes) os << "  - " << n << "\n";
    }
    return os.str();
}

namespace {

struct DimRow {
    std::string label;
    std::vector<BigInt> dims;
};

std::vector<DimRow> dim_rows(const PipelineArtifacts& art, const ReferenceMatch& match,
                             int k_min, int k_max) {
    std::vector<DimRow> rows;
    auto order = report_theta_order(art, match);
    size_t count = order.size();
    bool merge_pair = match.matched && count == 5;
    for (size_t idx = 0; idx < count; ++idx) {
        const ThetaData& td = art.thetas[order[idx]];
        DimRow row;
        row.label = td.name;
        for (int k = k_min; k <= k_max; ++k) {
            row.dims.push_back(dim_centralizer(td.character, k, art.table, art.classes));
        }
        if (merge_pair && idx == 4) {
            if (row.dims != rows.back().dims) {
                throw std::logic_error("dim table: the two degree-24 rows differ");
            }
            rows.back().label = rows.back().label + "=" + row.label;
            continue;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string dim_table_csv(const PipelineArtifacts& art, const ReferenceMatch& match,
                          int k_min, int k_max) {
    std::ostringstream os;
    os << "theta";
    for (int k = k_min; k <= k_max; ++k) os << ",k=" << k;
    os << "\n";
    for (const auto& row : dim_rows(art, match, k_min, k_max)) {
        os << row.label;
        for (const auto& d : row.dims) os << "," << d.get_str();
        os << "\n";
    }
    return os.str();
}

std::string dim_table_markdown(const PipelineArtifacts& art, const ReferenceMatch& match,
                               int k_min, int k_max) {
    std::ostringstream os;
    os << "## dim A^(k)\n\n| theta |";
    for (int k = k_min; k <= k_max; ++k) os << " k=" << k << " |";
    os << "\n|---|";
    for (int k = k_min; k <= k_max; ++k) os << "---|";
    os << "\n";
    for (const auto& row : dim_rows(art, match, k_min, k_max)) {
        os << "| " << row.label << " |";
        for (const auto& d : row.dims) os << " " << d.get_str() << " |";
        os << "\n";
    }
    return os.str();
}

}  // namespace wlab
