#include "nhscatter/four_site.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nhscatter/error.hpp"
#include "nhscatter/scattering.hpp"

namespace nhs::four_site {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kZetaPoleTolerance = 1e-13;
constexpr double kDeficitTolerance = 1e-13;

ComplexMatrix ring(cplx site2, cplx site4) {
    ComplexMatrix h(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        const std::size_t next = (j + 1) % 4;
        h(j, next) = -1.0;
        h(next, j) = -1.0;
    }
    h(1, 1) = site2;
    h(3, 3) = site4;
    return h;
}

LeadAttachment ring_lead() { return LeadAttachment{1.0, 1.0, 1.0, 1, 3}; }

}  // namespace

RawCenter four_site_center(const Params& p) {
    return {ring(kI * p.gamma1, -kI * p.gamma2), ring_lead()};
}

RawCenter hermitian_side_coupled_center(double gamma) {
    return {ring(-gamma, gamma), ring_lead()};
}

ComplexMatrix ring_parity() {
    ComplexMatrix p(4, 4);
    p(0, 0) = 1.0;
    p(2, 2) = 1.0;
    p(1, 3) = 1.0;
    p(3, 1) = 1.0;
    return p;
}

ComplexMatrix fold_unitary() {
    const double s = std::numbers::sqrt2 / 2.0;
    ComplexMatrix u(4, 4);
    u(0, 0) = 1.0;  // |1>
    u(1, 2) = 1.0;  // |3>
    u(2, 1) = s;    // |A>
    u(2, 3) = s;
    u(3, 1) = s;    // |B>
    u(3, 3) = -s;
    return u;
}

ComplexMatrix folded_matrix(const Params& p) {
    const double r2 = std::numbers::sqrt2;
    const cplx diag = kI * (p.gamma1 - p.gamma2) / 2.0;
    const cplx coupling = kI * (p.gamma1 + p.gamma2) / 2.0;
    return ComplexMatrix::from_rows({
        {0.0, 0.0, -r2, 0.0},
        {0.0, 0.0, -r2, 0.0},
        {-r2, -r2, diag, coupling},
        {0.0, 0.0, coupling, diag},
    });
}

FoldedCenter folded_four_site(const Params& p) {
    if (p.gamma1 != p.gamma2) {
        std::ostringstream os;
        os << "gamma1 = " << p.gamma1 << " != gamma2 = " << p.gamma2
           << ": the folded ring has no Hermitian diagonal blocks";
        throw NotInConservingClass(os.str());
    }
    const ComplexMatrix m = folded_matrix(p);
    return {build_center(m.block(0, 0, 3, 3), m.block(3, 3, 1, 1), m.block(0, 3, 3, 1)),
            LeadAttachment{1.0, 1.0, 1.0, 1, 2}};
}

cplx zeta(double k, const Params& p) {
    const double ck = std::cos(k);
    const cplx d1 = ck + kI * p.gamma1 / 2.0;
    const cplx d2 = ck - kI * p.gamma2 / 2.0;
    if (std::abs(d1) <= kZetaPoleTolerance || std::abs(d2) <= kZetaPoleTolerance) {
        std::ostringstream os;
        os << "zeta has a pole at k = " << k;
        throw ZetaPole(os.str());
    }
    return 1.0 / d1 + 1.0 / d2;
}

Coefficients closed_form_rt(double k, const Params& p) {
    const cplx z = zeta(k, p);
    const cplx eik = std::polar(1.0, k);
    const cplx denom = std::conj(eik) - z;
    if (std::abs(denom) <= kPoleTolerance) {
        std::ostringstream os;
        os << "closed-form r, t have a pole at k = " << k;
        throw PoleAtK(os.str());
    }
    return {(z * std::cos(k) - 1.0) * eik / denom, -kI * z * std::sin(k) * eik / denom};
}

double transmission_T(double k, double gamma) {
    const double s = std::sin(2.0 * k);
    const double num = s * s;
    const double d = std::cos(k) * std::cos(k) - gamma * gamma / 4.0;
    // At k = pi/2 with gamma != 0 only the numerator vanishes: total reflection.
    const double den = num + d * d;
    return den == 0.0 ? 0.0 : num / den;
}

double transmission_Tprime(double k, double gamma) {
    const double s = std::sin(2.0 * k);
    const double num = s * s;
    const double d = std::cos(k) * std::cos(k) + gamma * gamma / 4.0;
    const double den = num + d * d;
    return den == 0.0 ? 0.0 : num / den;
}

double closed_form_deficit(double k, const Params& p) {
    const cplx z = zeta(k, p);
    const double sk = std::sin(k);
    const double den = 1.0 + std::norm(z) - 2.0 * z.real() * std::cos(k) + 2.0 * z.imag() * sk;
    if (std::abs(den) <= kDeficitTolerance) {
        std::ostringstream os;
        os << "deficit denominator vanishes at k = " << k;
        throw DegenerateDenominator(os.str());
    }
    return 2.0 * z.imag() * sk / den;
}

}  // namespace nhs::four_site
