#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "nhscatter/ensemble.hpp"
#include "nhscatter/error.hpp"
#include "nhscatter/four_site.hpp"
#include "nhscatter/io.hpp"

using namespace nhs;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(NHSCATTER_DATA_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kMinimal = R"({
  "kappa": 1.0, "g_left": [1, 0], "g_right": [1, 0],
  "joint_left": 1, "joint_right": 2,
  "H_A": [[[0, 0], [-1, 0]], [[-1, 0], [0, 0]]],
  "H_B": [], "H_AB": []
})";

}  // namespace

TEST(NetworkSpecIo, ParsesMinimalDocument) {
    const NetworkSpec s = parse_network_spec(kMinimal);
    EXPECT_EQ(s.center.n_a(), 2u);
    EXPECT_EQ(s.center.n_b(), 0u);
    EXPECT_EQ(s.center.h_a()(0, 1), cplx(-1.0));
    EXPECT_EQ(s.lead.joint_right, 2u);
}

TEST(NetworkSpecIo, RoundTripRandomSpecs) {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        Rng rng = trial_rng(77, trial);
        const auto net = random_network(rng);
        const std::string text = serialize_network_spec(net.center, net.lead);
        const NetworkSpec back = parse_network_spec(text);
        ASSERT_EQ(back.center, net.center) << "trial " << trial;
        ASSERT_EQ(back.lead, net.lead) << "trial " << trial;
        ASSERT_EQ(serialize_network_spec(back), text);
    }
}

TEST(NetworkSpecIo, RejectsUnknownField) {
    std::string text = kMinimal;
    text.insert(1, "\"colour\": 3,");
    try {
        parse_network_spec(text);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos);
    }
}

TEST(NetworkSpecIo, RejectsMalformedJson) {
    EXPECT_THROW(parse_network_spec("{\"kappa\": 1.0,"), ParseError);
    EXPECT_THROW(parse_network_spec("[]"), ParseError);
}

TEST(NetworkSpecIo, RejectsBadEntries) {
    std::string missing = kMinimal;
    missing.replace(missing.find("\"kappa\": 1.0,"), 13, "");
    EXPECT_THROW(parse_network_spec(missing), ParseError);

    std::string bad_entry = kMinimal;
    bad_entry.replace(bad_entry.find("[0, 0], [-1, 0]]"), 6, "[0]");
    EXPECT_THROW(parse_network_spec(bad_entry), ParseError);
}

TEST(NetworkSpecIo, RejectsEqualJoints) {
    std::string text = kMinimal;
    text.replace(text.find("\"joint_right\": 2"), 16, "\"joint_right\": 1");
    EXPECT_THROW(parse_network_spec(text), InvalidLead);
}

TEST(NetworkSpecIo, RejectsNonHermitianBlock) {
    std::string text = kMinimal;
    text.replace(text.find("[[-1, 0], [0, 0]]"), 17, "[[-2, 0], [0, 0]]");
    EXPECT_THROW(parse_network_spec(text), NotHermitian);
}

TEST(NetworkSpecIo, ShippedFoldedRingMatchesBuilder) {
    const NetworkSpec s = parse_network_spec(read_data("four_site_folded.json"));
    const auto f = four_site::folded_four_site({1.0, 1.0});
    EXPECT_LE(max_abs_diff(s.center.h_a(), f.center.h_a()), 1e-15);
    EXPECT_LE(max_abs_diff(s.center.h_b(), f.center.h_b()), 1e-15);
    EXPECT_LE(max_abs_diff(s.center.h_ab(), f.center.h_ab()), 1e-15);
    EXPECT_EQ(s.lead, f.lead);
}

TEST(PtSpecIo, ParsesShippedRealSpec) {
    const PTDocument doc = parse_pt_spec(read_data("pt_four_site.json"));
    ASSERT_TRUE(std::holds_alternative<PTGraphSpec>(doc.spec));
    const auto& spec = std::get<PTGraphSpec>(doc.spec);
    EXPECT_EQ(spec.n1(), 2u);
    EXPECT_EQ(spec.n2(), 1u);
    const NetworkSpec net = fold_document(doc);
    EXPECT_EQ(net.center.n_a(), 3u);
    EXPECT_EQ(net.center.n_b(), 1u);
}

TEST(PtSpecIo, ParsesShippedGeneralizedSpec) {
    const PTDocument doc = parse_pt_spec(read_data("pt_generalized.json"));
    EXPECT_TRUE(std::holds_alternative<GeneralPTGraphSpec>(doc.spec));
    EXPECT_NO_THROW(fold_document(doc));
}

TEST(PtSpecIo, RoundTripRandomSpecs) {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        Rng rng = trial_rng(13, trial);
        PTDocument doc;
        if (trial % 2 == 0) {
            auto spec = random_pt_spec(rng);
            if (spec.n1() < 2) continue;
            doc.lead = random_axis_lead(rng, spec.n1());
            doc.spec = spec;
        } else {
            auto spec = random_general_pt_spec(rng);
            if (spec.n1() < 2) continue;
            doc.lead = random_axis_lead(rng, spec.n1());
            doc.spec = spec;
        }
        const std::string text = serialize_pt_spec(doc);
        const PTDocument back = parse_pt_spec(text);
        ASSERT_EQ(back.spec.index(), doc.spec.index());
        ASSERT_EQ(back.lead, doc.lead);
        ASSERT_EQ(serialize_pt_spec(back), text);
    }
}

TEST(PtSpecIo, LeadDefaults) {
    const char* text = R"({"n1": 3, "n2": 1,
        "H_gamma": [[0, -1, 0], [-1, 0, -1], [0, -1, 0]],
        "H_alpha": [[0]], "H_alpha_beta": [[0]], "H_gamma_alpha": [[0], [-1], [0]],
        "V": [[0, 0.5]]})";
    const PTDocument doc = parse_pt_spec(text);
    EXPECT_EQ(doc.lead.joint_left, 1u);
    EXPECT_EQ(doc.lead.joint_right, 3u);
    EXPECT_EQ(doc.lead.kappa, 1.0);
}

TEST(PtSpecIo, RejectsEmptyPairs) {
    const char* text = R"({"n1": 2, "n2": 0, "H_gamma": [[0, -1], [-1, 0]],
        "H_alpha": [], "H_alpha_beta": [], "H_gamma_alpha": [[], []], "V": []})";
    EXPECT_THROW(parse_pt_spec(text), ParseError);
}

TEST(PtSpecIo, RejectsComplexEntryInRealSpec) {
    std::string text = read_data("pt_four_site.json");
    const auto pos = text.find("\"H_gamma_alpha\"");
    ASSERT_NE(pos, std::string::npos);
    const auto first = text.find("-1", pos);
    text.replace(first, 4, "[-1, 0.5]");
    EXPECT_THROW(parse_pt_spec(text), ParseError);
}
