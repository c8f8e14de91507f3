#include <gtest/gtest.h>

#include <numbers>

#include "nhscatter/error.hpp"
#include "nhscatter/four_site.hpp"
#include "nhscatter/pt_builder.hpp"
#include "nhscatter/scattering.hpp"
#include "unit/oracle.hpp"

using namespace nhs;
using namespace nhs::four_site;
using namespace std::complex_literals;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(FourSite, RawCenterLayout) {
    const RawCenter raw = four_site_center({0.5, 1.5});
    EXPECT_EQ(raw.matrix(1, 1), cplx(0.0, 0.5));
    EXPECT_EQ(raw.matrix(3, 3), cplx(0.0, -1.5));
    EXPECT_EQ(raw.matrix(0, 1), cplx(-1.0));
    EXPECT_EQ(raw.matrix(0, 3), cplx(-1.0));
    EXPECT_EQ(raw.matrix(0, 2), cplx(0.0));
    EXPECT_EQ(raw.lead.joint_left, 1u);
    EXPECT_EQ(raw.lead.joint_right, 3u);
}

TEST(FourSite, PtSymmetryOnlyWhenBalanced) {
    EXPECT_EQ(check_pt_symmetry(four_site_center({1.0, 1.0}).matrix, ring_parity()), 0.0);
    EXPECT_GT(check_pt_symmetry(four_site_center({1.0, 0.5}).matrix, ring_parity()), 0.1);
}

TEST(FourSite, FoldedMatrixEntries) {
    const ComplexMatrix f = folded_matrix({0.6, 1.4});
    const double s2 = std::numbers::sqrt2;
    EXPECT_NEAR(std::abs(f(0, 2) + s2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f(1, 2) + s2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f(0, 3)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f(2, 2) - 1i * (0.6 - 1.4) / 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f(3, 3) - 1i * (0.6 - 1.4) / 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f(2, 3) - 1i * (0.6 + 1.4) / 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f(3, 2) - 1i * (0.6 + 1.4) / 2.0), 0.0, 1e-15);
    const ComplexMatrix u = fold_unitary();
    EXPECT_LE(max_abs_diff(u * four_site_center({0.6, 1.4}).matrix * u.adjoint(), f), 1e-15);
}

TEST(FourSite, FoldedCenterRequiresBalance) {
    EXPECT_THROW(folded_four_site({1.0, 0.9}), NotInConservingClass);
    const auto fc = folded_four_site({0.9, 0.9});
    EXPECT_EQ(fc.lead.joint_left, 1u);
    EXPECT_EQ(fc.lead.joint_right, 2u);
    EXPECT_EQ(fc.center.h_ab()(2, 0), cplx(0.0, 0.9));
}

TEST(FourSite, ZetaDefinition) {
    const double k = 1.1;
    const Params p{0.7, 1.9};
    const cplx expected = 1.0 / (std::cos(k) + 0.35i) + 1.0 / (std::cos(k) - 0.95i);
    EXPECT_LE(std::abs(zeta(k, p) - expected), 1e-15);
    EXPECT_THROW(zeta(kPi / 2, {0.0, 1.0}), ZetaPole);
}

TEST(FourSite, ClosedFormMatchesNumerics) {
    const Params cases[] = {{2.0, 0.0}, {0.0, 2.0}, {1.0, 1.0}, {0.7, 1.9}, {0.3, 0.3}};
    for (const auto& p : cases)
        for (double k : {0.3, kPi / 3, 1.1, 2.0, 2.8}) {
            const auto cf = closed_form_rt(k, p);
            const auto raw = four_site_center(p);
            const auto ref = test::self_energy_rt(raw.matrix, raw.lead, k);
            EXPECT_LE(std::abs(cf.r - ref.r), 1e-12) << p.gamma1 << "," << p.gamma2 << " k=" << k;
            EXPECT_LE(std::abs(cf.t - ref.t), 1e-12) << p.gamma1 << "," << p.gamma2 << " k=" << k;
            const double def = 1.0 - std::norm(ref.r) - std::norm(ref.t);
            EXPECT_NEAR(closed_form_deficit(k, p), def, 1e-12);
        }
}

TEST(FourSite, DeficitSigns) {
    EXPECT_NEAR(closed_form_deficit(kPi / 3, {2.0, 0.0}), -0.38337102384209312, 1e-12);
    EXPECT_NEAR(closed_form_deficit(kPi / 3, {0.0, 2.0}), 0.21699320755093194, 1e-12);
    EXPECT_NEAR(closed_form_deficit(1.1, {0.7, 1.9}), -0.16528683359390267, 1e-12);
    EXPECT_NEAR(closed_form_deficit(kPi / 3, {1.0, 1.0}), 0.0, 1e-15);
}

TEST(FourSite, BalancedRingConservesAcrossBand) {
    for (double gamma : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        const auto fc = folded_four_site({gamma, gamma});
        for (int i = 1; i < 100; ++i) {
            const double k = kPi * i / 100.0;
            const auto s = solve_rt_direct(fc.center, fc.lead, k);
            ASSERT_LE(std::abs(s.deficit), 1e-10) << gamma << " " << k;
            ASSERT_NEAR(std::norm(s.t), transmission_T(k, gamma), 1e-10) << gamma << " " << k;
        }
    }
}

TEST(FourSite, TransmissionLimits) {
    // gamma = 0 is the plain two-path ring: 4 sin^2 k / (4 sin^2 k + cos^2 k).
    const double s = std::sin(1.0), c = std::cos(1.0);
    EXPECT_NEAR(transmission_T(1.0, 0.0), 4 * s * s / (4 * s * s + c * c), 1e-15);
    const auto plain = four_site_center({0.0, 0.0});
    EXPECT_NEAR(std::norm(solve_rt_direct_raw(plain.matrix, plain.lead, 1.0).t),
                transmission_T(1.0, 0.0), 1e-12);
    EXPECT_NEAR(transmission_T(kPi / 2, 1.0), 0.0, 1e-15);
    EXPECT_NEAR(transmission_T(kPi / 3, 1.0), 1.0, 1e-15);
    EXPECT_NEAR(transmission_T(kPi / 2, 1e-6), 0.0, 1e-6);
}

TEST(FourSite, TprimeIsHermitianSideCoupledRing) {
    for (double gamma : {0.3, 1.0, 2.5})
        for (double k : {0.2, 0.8, 1.5, 2.4}) {
            const RawCenter h = hermitian_side_coupled_center(gamma);
            EXPECT_LE(hermiticity_defect(h.matrix), 0.0);
            const auto s = solve_rt_direct_raw(h.matrix, h.lead, k);
            EXPECT_NEAR(std::norm(s.t), transmission_Tprime(k, gamma), 1e-12) << gamma << " " << k;
            EXPECT_NEAR(std::abs(s.deficit), 0.0, 1e-12);
        }
    const RawCenter h = hermitian_side_coupled_center(1.0);
    EXPECT_NEAR(std::norm(solve_rt_direct_raw(h.matrix, h.lead, 0.8).t), 0.6488134785878856, 1e-12);
}

TEST(FourSite, TAndTprimeDiffer) {
    EXPECT_GT(std::abs(transmission_T(0.8, 1.0) - transmission_Tprime(0.8, 1.0)), 1e-3);
}
