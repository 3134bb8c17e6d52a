#pragma once

#include <string>

#include "wlab/pipeline.hpp"

namespace wlab {

// Report emitters. JSON is the canonical machine format (stable key order,
// arbitrary-precision values as decimal strings); markdown is for reading
// next to the published tables; CSV is RFC 4180 with LF line endings.

std::string group_summary_text(const PipelineArtifacts& art);

std::string chartable_json(const PipelineArtifacts& art);
std::string chartable_markdown(const PipelineArtifacts& art);

std::string subgroups_json(const PipelineArtifacts& art);

std::string permchars_markdown(const PipelineArtifacts& art, const ReferenceMatch& match);

std::string tensor_json(const PipelineArtifacts& art, const ReferenceMatch& match,
                        int k_min, int k_max);
std::string tensor_markdown(const PipelineArtifacts& art, const ReferenceMatch& match,
                            const RunConfig& cfg);

std::string dim_table_csv(const PipelineArtifacts& art, const ReferenceMatch& match,
                          int k_min, int k_max);
std::string dim_table_markdown(const PipelineArtifacts& art, const ReferenceMatch& match,
                               int k_min, int k_max);

/// Closed form rendered like "48^(k-1)/2 + 8^(k-1)/2".
std::string closed_form_text(const ClosedForm& form);
/// Dim form rendered like "24^(2k-1)/4 + 3*4^(2k-1)/4".
std::string dim_form_text(const DimClosedForm& form);

}  // namespace wlab
