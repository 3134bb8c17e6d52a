// wlab: exact group-theory pipeline for small finitely presented groups.
// Subcommands: group build, subgroups, chartable, permchars, tensor, verify.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "wlab/pipeline.hpp"
#include "wlab/report.hpp"
#include "wlab/verify.hpp"

namespace {

struct CommonOpts {
    std::string presentation;
    int coset_limit = wlab::kDefaultCosetLimit;
    bool coset_limit_set = false;
    std::string k_range = "1..4";
    std::string json_path, csv_path, markdown_path;
    std::string theta = "all";
    std::vector<std::string> targets;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_k = false) {
    cmd->add_option("--presentation", o.presentation,
                    "presentation file (default: built-in h1)");
    cmd->add_option("--coset-limit", o.coset_limit, "coset enumeration bound")
        ->check(CLI::PositiveNumber)
        ->each([&o](const std::string&) { o.coset_limit_set = true; });
    cmd->add_option("--json", o.json_path, "write JSON output to this file");
    cmd->add_option("--csv", o.csv_path, "write CSV output to this file");
    cmd->add_option("--markdown", o.markdown_path, "write markdown output to this file");
    if (with_k) {
        cmd->add_option("--k", o.k_range, "tensor power range, e.g. 3 or 1..4");
    }
}

std::pair<int, int> parse_k_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int k = std::stoi(text);
            return {k, k};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--k", "expected K or KMIN..KMAX, got '" + text + "'");
    }
}

wlab::RunConfig make_config(const CommonOpts& o) {
    wlab::RunConfig cfg;
    cfg.presentation_path = o.presentation;
    cfg.coset_limit = o.coset_limit;
    if (!o.coset_limit_set) {
        if (const char* env = std::getenv("WLAB_COSET_LIMIT")) {
            cfg.coset_limit = std::atoi(env);
        }
    }
    auto [k_min, k_max] = parse_k_range(o.k_range);
    cfg.k_min = k_min;
    cfg.k_max = k_max;
    cfg.formats.clear();
    if (!o.json_path.empty()) cfg.formats.insert("json");
    if (!o.csv_path.empty()) cfg.formats.insert("csv");
    if (!o.markdown_path.empty()) cfg.formats.insert("markdown");
    if (cfg.formats.empty()) cfg.formats.insert("json");  // stdout fallback counts as json
    if (!o.targets.empty()) {
        cfg.targets = std::set<std::string>(o.targets.begin(), o.targets.end());
    }
    cfg.validate();
    return cfg;
}

void write_or_print(const std::string& path, const std::string& content, bool print_if_no_path) {
    if (path.empty()) {
        if (print_if_no_path) std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for small finitely presented groups"};
    app.require_subcommand(1);

    CommonOpts group_opts, subgroup_opts, chartable_opts, permchars_opts, tensor_opts,
        verify_opts;

    CLI::App* group = app.add_subcommand("group", "group construction");
    group->require_subcommand(1);
    CLI::App* group_build =
        group->add_subcommand("build", "enumerate the group and its conjugacy classes");
    add_common(group_build, group_opts);

    CLI::App* subgroups =
        app.add_subcommand("subgroups", "subgroup classes, cores, faithful actions");
    add_common(subgroups, subgroup_opts);

    CLI::App* chartable = app.add_subcommand("chartable", "exact irreducible character table");
    add_common(chartable, chartable_opts);

    CLI::App* permchars =
        app.add_subcommand("permchars", "permutation characters and decompositions");
    add_common(permchars, permchars_opts);

    CLI::App* tensor = app.add_subcommand("tensor", "centralizer rings of tensor powers");
    add_common(tensor, tensor_opts, true);
    tensor->add_option("--theta", tensor_opts.theta,
                       "restrict to one action by name (default all)");
    tensor->add_option("--targets", tensor_opts.targets,
                       "report sections: theorem corollary dimtable all")
        ->delimiter(',');

    CLI::App* verify = app.add_subcommand("verify", "run every reference claim");
    add_common(verify, verify_opts, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (group_build->parsed()) {
            wlab::RunConfig cfg = make_config(group_opts);
            wlab::PipelineArtifacts art = wlab::run_computation(cfg);
            std::cout << wlab::group_summary_text(art);
            write_or_print(group_opts.json_path, wlab::chartable_json(art), false);
        } else if (subgroups->parsed()) {
            wlab::RunConfig cfg = make_config(subgroup_opts);
            wlab::PipelineArtifacts art = wlab::run_computation(cfg);
            write_or_print(subgroup_opts.json_path, wlab::subgroups_json(art), true);
        } else if (chartable->parsed()) {
            wlab::RunConfig cfg = make_config(chartable_opts);
            wlab::PipelineArtifacts art = wlab::run_computation(cfg);
            write_or_print(chartable_opts.json_path, wlab::chartable_json(art), false);
            write_or_print(chartable_opts.markdown_path, wlab::chartable_markdown(art),
                           chartable_opts.json_path.empty());
        } else if (permchars->parsed()) {
            wlab::RunConfig cfg = make_config(permchars_opts);
            wlab::PipelineArtifacts art = wlab::run_computation(cfg);
            wlab::ReferenceMatch match = wlab::match_h1_reference(art);
            write_or_print(permchars_opts.markdown_path, wlab::permchars_markdown(art, match),
                           true);
        } else if (tensor->parsed()) {
            wlab::RunConfig cfg = make_config(tensor_opts);
            wlab::PipelineArtifacts art = wlab::run_computation(cfg);
            wlab::ReferenceMatch match = wlab::match_h1_reference(art);
            if (tensor_opts.theta != "all") {
                std::vector<wlab::ThetaData> kept;
                for (auto& t : art.thetas) {
                    if (t.name == tensor_opts.theta) kept.push_back(std::move(t));
                }
                if (kept.empty()) {
                    throw std::runtime_error("no action named '" + tensor_opts.theta + "'");
                }
                art.thetas = std::move(kept);
                match = wlab::ReferenceMatch{};  // reference framing is off for a slice
            }
            write_or_print(tensor_opts.json_path,
                           wlab::tensor_json(art, match, cfg.k_min, cfg.k_max), false);
            write_or_print(tensor_opts.csv_path,
                           wlab::dim_table_csv(art, match, cfg.k_min, cfg.k_max), false);
            write_or_print(tensor_opts.markdown_path, wlab::tensor_markdown(art, match, cfg),
                           tensor_opts.json_path.empty() && tensor_opts.csv_path.empty());
        } else if (verify->parsed()) {
            wlab::RunConfig cfg = make_config(verify_opts);
            wlab::EmitPaths paths{verify_opts.json_path, verify_opts.csv_path,
                                  verify_opts.markdown_path};
            wlab::VerificationSummary summary = wlab::run_pipeline(cfg, paths);
            std::cout << wlab::verification_text(summary);
            return summary.all_passed() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
