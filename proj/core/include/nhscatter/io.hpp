#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "nhscatter/model.hpp"
#include "nhscatter/pt_builder.hpp"

namespace nhs {

/// A center together with its leads, as stored in a network spec file.
struct NetworkSpec {
    ScatteringCenter center;
    LeadAttachment lead;

    friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

/// Network spec document:
///
///     { "kappa": 1.0, "g_left": [re, im], "g_right": [re, im],
///       "joint_left": 1, "joint_right": 2,
///       "H_A": [[[re, im], ...], ...], "H_B": [...], "H_AB": [...] }
///
/// Joints are 1-based sites of cluster A. H_B and H_AB may be empty arrays.
/// Unknown fields are rejected. Throws ParseError for malformed input and
/// the build_center / validate_lead errors for invalid content.
NetworkSpec parse_network_spec(std::string_view text);
std::string serialize_network_spec(const ScatteringCenter& c, const LeadAttachment& lead);
inline std::string serialize_network_spec(const NetworkSpec& s) {
    return serialize_network_spec(s.center, s.lead);
}

/// PT graph document: "n1", "n2", "H_gamma", "H_alpha", "H_alpha_beta",
/// "H_gamma_alpha" and "V" (list of [re, im]). Real specs store plain
/// numbers in the matrices; with "generalized": true every matrix entry is
/// an [re, im] pair. The lead fields of the network format are optional
/// and default to kappa = 1, g = 1, joints 1 and n1.
struct PTDocument {
    std::variant<PTGraphSpec, GeneralPTGraphSpec> spec;
    LeadAttachment lead;
};

PTDocument parse_pt_spec(std::string_view text);
std::string serialize_pt_spec(const PTDocument& doc);

/// Folds the PT document into a network spec (joints carried over).
NetworkSpec fold_document(const PTDocument& doc);

}  // namespace nhs
