#include "nhscatter/io.hpp"

#include <initializer_list>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "nhscatter/error.hpp"

namespace nhs {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ParseError("field '" + field + "': " + what);
}

json parse_document(std::string_view text) {
    try {
        json doc = json::parse(text.begin(), text.end());
        if (!doc.is_object()) throw ParseError("document root must be a JSON object");
        return doc;
    } catch (const json::parse_error& e) {
        // The message carries "line L, column C".
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

void reject_unknown(const json& doc, std::initializer_list<const char*> allowed) {
    const std::set<std::string> known(allowed.begin(), allowed.end());
    for (const auto& [key, value] : doc.items())
        if (!known.contains(key)) throw ParseError("unknown field '" + key + "'");
}

const json& require(const json& doc, const char* field) {
    const auto it = doc.find(field);
    if (it == doc.end()) fail(field, "missing");
    return *it;
}

double read_number(const json& v, const std::string& field) {
    if (!v.is_number()) fail(field, "expected a number");
    return v.get<double>();
}

cplx read_complex(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(field, "expected a [re, im] pair");
    return {v[0].get<double>(), v[1].get<double>()};
}

std::size_t read_index(const json& v, const std::string& field) {
    if (!v.is_number_integer()) fail(field, "expected an integer");
    const auto i = v.get<long long>();
    if (i < 1) fail(field, "1-based index must be >= 1");
    return static_cast<std::size_t>(i);
}

std::size_t read_count(const json& v, const std::string& field, std::size_t min) {
    if (!v.is_number_integer()) fail(field, "expected an integer");
    const auto i = v.get<long long>();
    if (i < static_cast<long long>(min)) fail(field, "must be >= " + std::to_string(min));
    return static_cast<std::size_t>(i);
}

// Matrices are arrays of rows. Entries are [re, im] pairs or, for real
// matrices, plain numbers. `cols_if_empty` fixes the column count of an
// empty matrix.
ComplexMatrix read_matrix(const json& v, const std::string& field, bool complex_entries,
                          std::size_t cols_if_empty = 0) {
    if (!v.is_array()) fail(field, "expected an array of rows");
    if (v.empty()) return ComplexMatrix(0, cols_if_empty);
    const std::size_t rows = v.size();
    std::size_t cols = 0;
    std::vector<cplx> data;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string where = field + "[" + std::to_string(r + 1) + "]";
        const json& row = v[r];
        if (!row.is_array()) fail(where, "expected a row array");
        if (r == 0) cols = row.size();
        if (row.size() != cols)
            fail(where, "has " + std::to_string(row.size()) + " entries, expected " +
                            std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string at = where + "[" + std::to_string(c + 1) + "]";
            data.push_back(complex_entries ? read_complex(row[c], at)
                                           : cplx{read_number(row[c], at), 0.0});
        }
    }
    return ComplexMatrix(rows, cols, std::move(data));
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix& m, bool complex_entries) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(complex_entries ? complex_json(m(r, c)) : json(m(r, c).real()));
        rows.push_back(std::move(row));
    }
    return rows;
}

LeadAttachment read_lead(const json& doc, std::size_t default_right, bool required) {
    LeadAttachment lead;
    lead.joint_right = default_right;
    auto get = [&](const char* field) -> const json* {
        const auto it = doc.find(field);
        if (it != doc.end()) return &*it;
        if (required) fail(field, "missing");
        return nullptr;
    };
    if (const json* v = get("kappa")) lead.kappa = read_number(*v, "kappa");
    if (const json* v = get("g_left")) lead.g_left = read_complex(*v, "g_left");
    if (const json* v = get("g_right")) lead.g_right = read_complex(*v, "g_right");
    if (const json* v = get("joint_left")) lead.joint_left = read_index(*v, "joint_left");
    if (const json* v = get("joint_right")) lead.joint_right = read_index(*v, "joint_right");
    return lead;
}

void write_lead(json& doc, const LeadAttachment& lead) {
    doc["kappa"] = lead.kappa;
    doc["g_left"] = complex_json(lead.g_left);
    doc["g_right"] = complex_json(lead.g_right);
    doc["joint_left"] = lead.joint_left;
    doc["joint_right"] = lead.joint_right;
}

}  // namespace

NetworkSpec parse_network_spec(std::string_view text) {
    const json doc = parse_document(text);
    reject_unknown(doc, {"kappa", "g_left", "g_right", "joint_left", "joint_right", "H_A", "H_B",
                         "H_AB"});
    const LeadAttachment lead = read_lead(doc, 2, true);
    ComplexMatrix h_a = read_matrix(require(doc, "H_A"), "H_A", true);
    ComplexMatrix h_b = read_matrix(require(doc, "H_B"), "H_B", true);
    ComplexMatrix h_ab = read_matrix(require(doc, "H_AB"), "H_AB", true);
    ScatteringCenter center = build_center(std::move(h_a), std::move(h_b), std::move(h_ab));
    validate_lead(lead, center.n_a());
    return {std::move(center), lead};
}

std::string serialize_network_spec(const ScatteringCenter& c, const LeadAttachment& lead) {
    json doc = json::object();
    write_lead(doc, lead);
    doc["H_A"] = matrix_json(c.h_a(), true);
    doc["H_B"] = matrix_json(c.h_b(), true);
    doc["H_AB"] = c.n_b() == 0 ? json::array() : matrix_json(c.h_ab(), true);
    return doc.dump(2) + "\n";
}

PTDocument parse_pt_spec(std::string_view text) {
    const json doc = parse_document(text);
    reject_unknown(doc, {"n1", "n2", "H_gamma", "H_alpha", "H_alpha_beta", "H_gamma_alpha", "V",
                         "generalized", "kappa", "g_left", "g_right", "joint_left",
                         "joint_right"});
    bool generalized = false;
    if (const auto it = doc.find("generalized"); it != doc.end()) {
        if (!it->is_boolean()) fail("generalized", "expected true or false");
        generalized = it->get<bool>();
    }
    const std::size_t n1 = read_count(require(doc, "n1"), "n1", 1);
    const std::size_t n2 = read_count(require(doc, "n2"), "n2", 1);

    PTBlocks blocks;
    blocks.h_gamma = read_matrix(require(doc, "H_gamma"), "H_gamma", generalized);
    blocks.h_alpha = read_matrix(require(doc, "H_alpha"), "H_alpha", generalized);
    blocks.h_alpha_beta = read_matrix(require(doc, "H_alpha_beta"), "H_alpha_beta", generalized);
    blocks.h_gamma_alpha =
        read_matrix(require(doc, "H_gamma_alpha"), "H_gamma_alpha", generalized);
    const json& v = require(doc, "V");
    if (!v.is_array()) fail("V", "expected an array of [re, im] pairs");
    for (std::size_t j = 0; j < v.size(); ++j)
        blocks.v.push_back(read_complex(v[j], "V[" + std::to_string(j + 1) + "]"));

    if (blocks.n1() != n1) fail("H_gamma", "row count does not match n1");
    if (blocks.n2() != n2) fail("H_alpha", "row count does not match n2");

    PTDocument out;
    out.lead = read_lead(doc, n1, false);
    if (generalized) {
        GeneralPTGraphSpec s{blocks};
        validate(s);
        out.spec = std::move(s);
    } else {
        PTGraphSpec s{blocks};
        validate(s);
        out.spec = std::move(s);
    }
    return out;
}

std::string serialize_pt_spec(const PTDocument& doc) {
    const bool generalized = std::holds_alternative<GeneralPTGraphSpec>(doc.spec);
    const PTBlocks& b = std::visit([](const auto& s) -> const PTBlocks& { return s; }, doc.spec);
    json out = json::object();
    out["n1"] = b.n1();
    out["n2"] = b.n2();
    if (generalized) out["generalized"] = true;
    out["H_gamma"] = matrix_json(b.h_gamma, generalized);
    out["H_alpha"] = matrix_json(b.h_alpha, generalized);
    out["H_alpha_beta"] = matrix_json(b.h_alpha_beta, generalized);
    out["H_gamma_alpha"] = matrix_json(b.h_gamma_alpha, generalized);
    json v = json::array();
    for (const auto& z : b.v) v.push_back(complex_json(z));
    out["V"] = std::move(v);
    write_lead(out, doc.lead);
    return out.dump(2) + "\n";
}

NetworkSpec fold_document(const PTDocument& doc) {
    return std::visit(
        [&](const auto& s) -> NetworkSpec {
            FoldedNetwork f = [&] {
                if constexpr (std::is_same_v<std::decay_t<decltype(s)>, GeneralPTGraphSpec>)
                    return fold_generalized(s, doc.lead);
                else
                    return fold(s, doc.lead);
            }();
            return {std::move(f.center), f.lead};
        },
        doc.spec);
}

}  // namespace nhs
