#include <gtest/gtest.h>

#include <numbers>

#include "nhscatter/ensemble.hpp"
#include "nhscatter/error.hpp"
#include "nhscatter/four_site.hpp"
#include "nhscatter/scattering.hpp"
#include "unit/oracle.hpp"

using namespace nhs;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

ScatteringCenter chain_center() {
    return build_center(ComplexMatrix::from_rows({{0.0, -1.0}, {-1.0, 0.0}}), ComplexMatrix(0, 0),
                        ComplexMatrix(0, 0));
}

struct FixedNetwork {
    ScatteringCenter center;
    LeadAttachment lead;
};

FixedNetwork five_site() {
    auto h_a = ComplexMatrix::from_rows({{0.5, 1.0 + 0.5i, -0.3i},
                                         {1.0 - 0.5i, -1.0, 0.2},
                                         {0.3i, 0.2, 0.8}});
    auto h_b = ComplexMatrix::from_rows({{0.1, 0.4 - 0.2i}, {0.4 + 0.2i, -0.6}});
    auto h_ab = ComplexMatrix::from_rows({{2.0 + 1.0i, -0.5}, {0.0, 1.5i}, {-1.0 + 0.3i, 0.7}});
    LeadAttachment lead{1.3, 0.8 + 0.3i, -0.5 + 1.1i, 1, 3};
    return {build_center(h_a, h_b, h_ab), lead};
}

// High-precision self-energy reference for five_site() at k = 0.9.
const cplx kFiveSiteR{-0.87912065285156396, -0.31109289785768993};
const cplx kFiveSiteT{-0.32132153503274962, 0.16468320423328642};

}  // namespace

TEST(Dispersion, Values) {
    EXPECT_NEAR(dispersion(kPi / 2, 1.0), 0.0, 1e-15);
    EXPECT_NEAR(dispersion(kPi / 3, 1.0), -1.0, 1e-15);
    EXPECT_NEAR(dispersion(kPi / 3, -2.0), 2.0, 1e-15);
}

TEST(Dispersion, RejectsBandEdges) {
    EXPECT_THROW(dispersion(0.0, 1.0), MomentumOutOfBand);
    EXPECT_THROW(dispersion(kPi, 1.0), MomentumOutOfBand);
    EXPECT_THROW(dispersion(1e-9, 1.0), MomentumOutOfBand);
    EXPECT_THROW(dispersion(-0.5, 1.0), MomentumOutOfBand);
    EXPECT_THROW(dispersion(3.5, 1.0), MomentumOutOfBand);
}

TEST(Coefficients, UniformChainIsReflectionless) {
    const auto chain = chain_center();
    const LeadAttachment lead{};
    const double k = 0.7;
    const auto abc = coefficients_abc(chain, lead, k);
    // Perfect chain: b~ = conj(b) and a, c real.
    EXPECT_LE(std::abs(abc.a.imag()), 1e-12);
    EXPECT_LE(std::abs(abc.c.imag()), 1e-12);
    EXPECT_LE(std::abs(abc.b_tilde - std::conj(abc.b)), 1e-12);
    const auto sol = solve_rt_formula(chain, lead, k);
    EXPECT_NEAR(std::abs(sol.t), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(sol.r), 0.0, 1e-12);
}

TEST(Coefficients, RealityOnRandomCenters) {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        Rng rng = trial_rng(42, trial);
        const auto net = random_network(rng);
        const double k = random_momentum(rng);
        AbcCoefficients abc;
        try {
            abc = coefficients_abc(net.center, net.lead, k);
        } catch (const SingularDelta&) {
            continue;
        }
        const double scale = std::max({1.0, std::abs(abc.a), std::abs(abc.c), std::abs(abc.b)});
        EXPECT_LE(std::abs(abc.a.imag()), 1e-9 * scale);
        EXPECT_LE(std::abs(abc.c.imag()), 1e-9 * scale);
        EXPECT_LE(std::abs(abc.b_tilde - std::conj(abc.b)), 1e-9 * scale);
    }
}

TEST(Coefficients, SingularDeltaThrows) {
    // Rows for sites 1 and 3 of the folded ring coincide at E = 0.
    const auto f = four_site::folded_four_site({1.0, 1.0});
    EXPECT_THROW(coefficients_abc(f.center, f.lead, kPi / 2), SingularDelta);
}

TEST(SolveRt, UniformChainBothSolvers) {
    const auto chain = chain_center();
    for (double k : {0.3, 1.0, 2.0, 2.9}) {
        const auto f = solve_rt_formula(chain, LeadAttachment{}, k);
        const auto d = solve_rt_direct(chain, LeadAttachment{}, k);
        EXPECT_NEAR(std::norm(f.t), 1.0, 1e-12);
        EXPECT_NEAR(std::norm(d.t), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(d.r), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(d.t - std::polar(1.0, k)), 0.0, 1e-12);
    }
}

TEST(SolveRt, FiveSiteAgainstReference) {
    const auto net = five_site();
    const auto f = solve_rt_formula(net.center, net.lead, 0.9);
    const auto d = solve_rt_direct(net.center, net.lead, 0.9);
    EXPECT_LE(std::abs(f.r - kFiveSiteR), 1e-12);
    EXPECT_LE(std::abs(f.t - kFiveSiteT), 1e-12);
    EXPECT_LE(std::abs(d.r - kFiveSiteR), 1e-12);
    EXPECT_LE(std::abs(d.t - kFiveSiteT), 1e-12);
    EXPECT_LE(std::abs(f.deficit), 1e-12);
    EXPECT_LE(std::abs(d.deficit), 1e-12);
}

TEST(SolveRt, AgreesWithSelfEnergyOracle) {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        Rng rng = trial_rng(5150, trial);
        const auto net = random_network(rng);
        const double k = random_momentum(rng);
        const ComplexMatrix full = assemble_full_center_matrix(net.center);
        test::OracleRT ref;
        ScatteringSolution d;
        try {
            ref = test::self_energy_rt(full, net.lead, k);
            d = solve_rt_direct(net.center, net.lead, k);
        } catch (const Error&) {
            continue;
        }
        EXPECT_LE(std::abs(d.r - ref.r), 1e-9) << "trial " << trial;
        EXPECT_LE(std::abs(d.t - ref.t), 1e-9) << "trial " << trial;
        EXPECT_LE(std::abs(d.deficit), 1e-10) << "trial " << trial;
    }
}

TEST(SolveRt, TotalReflectionAtHalfBandForRing) {
    const auto f = four_site::folded_four_site({1.0, 1.0});
    const auto d = solve_rt_direct(f.center, f.lead, kPi / 2);
    EXPECT_LE(std::abs(d.t), 1e-12);
    EXPECT_NEAR(std::abs(d.r), 1.0, 1e-12);
    EXPECT_THROW(solve_rt_formula(f.center, f.lead, kPi / 2), SingularDelta);
}

TEST(SolveRt, DirectWorksWhereDeltaIsSingular) {
    const auto c = build_center(ComplexMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}}),
                                ComplexMatrix(0, 0), ComplexMatrix(0, 0));
    EXPECT_THROW(solve_rt_formula(c, LeadAttachment{}, kPi / 2), SingularDelta);
    const auto d = solve_rt_direct(c, LeadAttachment{}, kPi / 2);
    const auto ref = test::self_energy_rt(c.h_a(), LeadAttachment{}, kPi / 2);
    EXPECT_LE(std::abs(d.r - ref.r), 1e-12);
    EXPECT_LE(std::abs(d.t - ref.t), 1e-12);
    EXPECT_LE(std::abs(d.deficit), 1e-12);
}

TEST(SolveRt, RawRingMatchesFrozenReference) {
    struct Case {
        double g1, g2, k;
        cplx r, t;
        double deficit;
    };
    const Case cases[] = {
        {2.0, 0.0, kPi / 3, {-0.23417985834473259, 0.022240388920266255},
         {-0.73417985834473259, 0.8882657927047049}, -0.38337102384209312},
        {0.0, 2.0, kPi / 3, {-0.024052377357173821, -0.17533326792548764},
         {-0.52405237735717382, 0.690692135858951}, 0.21699320755093194},
        {1.0, 1.0, kPi / 3, {0.0, 0.0}, {-0.5, 0.86602540378443865}, 0.0},
        {0.7, 1.9, 1.1, {0.063919123346133345, 0.12451530545252027},
         {-0.52458199390921251, 0.93301170927211035}, -0.16528683359390267},
    };
    for (const auto& c : cases) {
        const auto raw = four_site::four_site_center({c.g1, c.g2});
        const auto s = solve_rt_direct_raw(raw.matrix, raw.lead, c.k);
        EXPECT_LE(std::abs(s.r - c.r), 1e-12) << c.g1 << "," << c.g2;
        EXPECT_LE(std::abs(s.t - c.t), 1e-12) << c.g1 << "," << c.g2;
        EXPECT_NEAR(s.deficit, c.deficit, 1e-12);
    }
}

TEST(SolveRt, SpectralSingularityIsReported) {
    // Each decoupled site absorbs the self-energy of its lead exactly at k.
    const double k = 0.8;
    const cplx s = dispersion(k, 1.0) + std::polar(1.0, k);
    const auto m = ComplexMatrix::from_rows({{s, 0.0}, {0.0, s}});
    EXPECT_THROW(solve_rt_direct_raw(m, LeadAttachment{}, k), SingularSystem);
    EXPECT_NO_THROW(solve_rt_direct_raw(m, LeadAttachment{}, k + 0.1));
}

TEST(SolveRt, RejectsInvalidLead) {
    LeadAttachment lead{};
    lead.joint_right = 1;
    EXPECT_THROW(solve_rt_direct(chain_center(), lead, 1.0), InvalidLead);
    EXPECT_THROW(solve_rt_formula(chain_center(), lead, 1.0), InvalidLead);
}

TEST(Reconstruct, PlaneWaveForms) {
    const auto net = five_site();
    const auto s = solve_rt_direct(net.center, net.lead, 0.9);
    for (long j : {-1L, -3L, -10L}) {
        const double x = static_cast<double>(j);
        const cplx expected = std::polar(1.0, 0.9 * x) + s.r * std::polar(1.0, -0.9 * x);
        EXPECT_LE(std::abs(reconstruct_wavefunction(s, j) - expected), 1e-14);
    }
    for (long j : {1L, 4L}) {
        const cplx expected = s.t * std::polar(1.0, 0.9 * static_cast<double>(j));
        EXPECT_LE(std::abs(reconstruct_wavefunction(s, j) - expected), 1e-14);
    }
    EXPECT_THROW(reconstruct_wavefunction(s, 0), InvalidSite);
}

TEST(Reconstruct, ResidualVanishesForBothSolvers) {
    const auto net = five_site();
    const ComplexMatrix full = assemble_full_center_matrix(net.center);
    for (double k : {0.4, 0.9, 2.2}) {
        const auto f = solve_rt_formula(net.center, net.lead, k);
        const auto d = solve_rt_direct(net.center, net.lead, k);
        EXPECT_LE(schrodinger_residual(full, net.lead, f), 1e-10);
        EXPECT_LE(schrodinger_residual(full, net.lead, d), 1e-10);
    }
}

TEST(Reconstruct, ResidualDetectsWrongAmplitude) {
    const auto net = five_site();
    auto d = solve_rt_direct(net.center, net.lead, 0.9);
    d.r += 1e-3;
    EXPECT_GT(schrodinger_residual(assemble_full_center_matrix(net.center), net.lead, d), 1e-4);
}

TEST(Deficit, Definition) {
    ScatteringSolution s;
    s.r = 0.6;
    s.t = 0.8i;
    EXPECT_NEAR(current_deficit(s), 0.0, 1e-15);
    s.t = 0.0;
    EXPECT_NEAR(current_deficit(s), 0.64, 1e-15);
}

TEST(Spectrum, GridAndValues) {
    const auto net = five_site();
    const auto res = spectrum(net.center, net.lead, 0.1, 3.0, 30);
    ASSERT_EQ(res.entries.size(), 30u);
    EXPECT_DOUBLE_EQ(res.entries.front().k, 0.1);
    EXPECT_DOUBLE_EQ(res.entries.back().k, 3.0);
    for (const auto& e : res.entries) {
        ASSERT_EQ(e.status, PointStatus::ok);
        EXPECT_NEAR(e.transmission + e.reflection + e.deficit, 1.0, 1e-12);
        EXPECT_LE(std::abs(e.deficit), 1e-10);
    }
}

TEST(Spectrum, RingTransmissionMatchesClosedForm) {
    const auto f = four_site::folded_four_site({0.8, 0.8});
    const auto res = spectrum(f.center, f.lead, 0.05, kPi - 0.05, 101);
    for (const auto& e : res.entries)
        EXPECT_NEAR(e.transmission, four_site::transmission_T(e.k, 0.8), 1e-10) << e.k;
}

TEST(Spectrum, FlagsPoleInsteadOfDropping) {
    const double k = 0.8;
    const double e = dispersion(k, 1.0);
    const cplx s = e + std::polar(1.0, k);
    const auto m = ComplexMatrix::from_rows({{s, 0.0}, {0.0, s}});
    const auto res = spectrum_raw(m, LeadAttachment{}, 0.4, 1.2, 3);
    ASSERT_EQ(res.entries.size(), 3u);
    EXPECT_EQ(res.entries[0].status, PointStatus::ok);
    EXPECT_EQ(res.entries[1].status, PointStatus::pole);
    EXPECT_TRUE(std::isnan(res.entries[1].transmission));
    EXPECT_EQ(res.entries[2].status, PointStatus::ok);
}

TEST(Spectrum, RejectsBadRanges) {
    const auto chain = chain_center();
    EXPECT_THROW(spectrum(chain, LeadAttachment{}, 1.0, 0.5, 10), InvalidRange);
    EXPECT_THROW(spectrum(chain, LeadAttachment{}, 0.0, 1.0, 10), InvalidRange);
    EXPECT_THROW(spectrum(chain, LeadAttachment{}, 0.1, 1.0, 1), InvalidRange);
}
