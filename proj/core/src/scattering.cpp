#include "nhscatter/scattering.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "nhscatter/error.hpp"

namespace nhs {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx phase(double x) { return std::polar(1.0, x); }

// Splits a full solution vector into cluster A and cluster B parts.
void split_amplitudes(const CVector& x, std::size_t n_a, ScatteringSolution& sol) {
    sol.alpha.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n_a));
    sol.beta.assign(x.begin() + static_cast<std::ptrdiff_t>(n_a), x.end());
}

CVector solve_augmented(const ComplexMatrix& center, const LeadAttachment& lead, double k,
                        double energy) {
    const std::size_t n = center.rows();
    const std::size_t L = lead.joint_left - 1;
    const std::size_t R = lead.joint_right - 1;
    const std::size_t ir = n;      // unknown r
    const std::size_t it = n + 1;  // unknown t
    const double kappa = lead.kappa;

    ComplexMatrix sys(n + 2, n + 2);
    sys.set_block(0, 0, center);
    for (std::size_t i = 0; i < n; ++i) sys(i, i) -= energy;

    // Center rows: Delta x = e_L g_L f_{-1} + e_R g_R f_1 with the r and t
    // parts of f_{-1} = e^{-ik} + r e^{ik} and f_1 = t e^{ik} moved left.
    sys(L, ir) -= lead.g_left * phase(k);
    sys(R, it) -= lead.g_right * phase(k);

    // Lead rows: -kappa f_{-2} - g_L^* alpha_L = E f_{-1}, and the mirror
    // relation on the right, with f_{-2} = e^{-2ik} + r e^{2ik}, f_2 = t e^{2ik}.
    const cplx outgoing = -kappa * phase(2 * k) - energy * phase(k);
    sys(ir, L) = -std::conj(lead.g_left);
    sys(ir, ir) = outgoing;
    sys(it, R) = -std::conj(lead.g_right);
    sys(it, it) = outgoing;

    CVector rhs(n + 2);
    rhs[L] = lead.g_left * phase(-k);
    rhs[ir] = energy * phase(-k) + kappa * phase(-2 * k);

    const LuDecomposition lu(sys);
    if (lu.singular()) {
        std::ostringstream os;
        os << "augmented scattering system is singular at k = " << k;
        throw SingularSystem(os.str());
    }
    return lu.solve(rhs);
}

template <class Solver>
SpectrumResult sweep(double k_min, double k_max, std::size_t steps, Solver&& solve,
                     const ComplexMatrix& center_matrix, double kappa) {
    if (!(k_min > 0.0 && k_min < k_max && k_max < std::numbers::pi) || steps < 2)
        throw InvalidRange("spectrum requires 0 < k_min < k_max < pi and steps >= 2");
    SpectrumResult out;
    out.entries.reserve(steps);
    const double dk = (k_max - k_min) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        SpectrumEntry e;
        e.k = (i + 1 == steps) ? k_max : k_min + dk * static_cast<double>(i);
        try {
            const ScatteringSolution sol = solve(e.k);
            e.transmission = std::norm(sol.t);
            e.reflection = std::norm(sol.r);
            e.deficit = sol.deficit;
        } catch (const SingularSystem&) {
            // Regular Delta with a singular augmented system: a pole of r and t.
            ComplexMatrix delta = center_matrix;
            const double energy = dispersion(e.k, kappa);
            for (std::size_t d = 0; d < delta.rows(); ++d) delta(d, d) -= energy;
            e.status = LuDecomposition(delta).singular() ? PointStatus::singular : PointStatus::pole;
            e.transmission = e.reflection = e.deficit = std::numeric_limits<double>::quiet_NaN();
        }
        out.entries.push_back(e);
    }
    return out;
}

}  // namespace

std::string_view to_string(PointStatus s) noexcept {
    switch (s) {
        case PointStatus::ok: return "ok";
        case PointStatus::pole: return "pole";
        case PointStatus::singular: return "singular";
    }
    return "unknown";
}

double dispersion(double k, double kappa) {
    if (!(k > 0.0 && k < std::numbers::pi) || std::sin(k) <= kBandEdgeTolerance) {
        std::ostringstream os;
        os << "momentum k = " << k << " is outside the open band (0, pi)";
        throw MomentumOutOfBand(os.str());
    }
    return -2.0 * kappa * std::cos(k);
}

AbcCoefficients coefficients_abc(const ScatteringCenter& c, const LeadAttachment& lead, double k) {
    validate_lead(lead, c.n_a());
    const double energy = dispersion(k, lead.kappa);
    const DeltaMatrix delta = assemble_delta(c, energy);
    const LuDecomposition lu(delta.matrix);
    if (lu.singular()) {
        std::ostringstream os;
        os << "Delta is singular at E = " << energy;
        throw SingularDelta(os.str());
    }
    const std::size_t n = c.size();
    const std::size_t L = lead.joint_left - 1;
    const std::size_t R = lead.joint_right - 1;
    CVector e(n);
    e[L] = 1.0;
    const CVector col_l = lu.solve(e);
    e[L] = 0.0;
    e[R] = 1.0;
    const CVector col_r = lu.solve(e);

    const double kappa = lead.kappa;
    const cplx gl = lead.g_left;
    const cplx gr = lead.g_right;
    AbcCoefficients abc;
    abc.a = col_l[L] * std::norm(gl) / kappa;
    abc.c = col_r[R] * std::norm(gr) / kappa;
    abc.b = col_r[L] * std::conj(gl) * gr / kappa;
    abc.b_tilde = col_l[R] * gl * std::conj(gr) / kappa;
    abc.eta = (abc.b * abc.b_tilde - abc.a * abc.c) * phase(2 * k) + (abc.a + abc.c) * phase(k) -
              1.0;
    return abc;
}

ScatteringSolution solve_rt_formula(const ScatteringCenter& c, const LeadAttachment& lead,
                                    double k) {
    const AbcCoefficients abc = coefficients_abc(c, lead, k);
    if (std::abs(abc.eta) <= kPoleTolerance) {
        std::ostringstream os;
        os << "eta vanishes at k = " << k << " (|eta| = " << std::abs(abc.eta) << ")";
        throw PoleAtK(os.str());
    }
    ScatteringSolution sol;
    sol.k = k;
    sol.energy = dispersion(k, lead.kappa);
    const auto& [a, b, bt, cc, eta] = abc;
    sol.r = (-b * bt + a * cc - a * phase(-k) - cc * phase(k) + 1.0) / eta;
    sol.t = 2.0 * kI * bt * std::sin(k) / eta;

    // Interior amplitudes from Delta x = e_L g_L f_{-1} + e_R g_R f_1.
    const cplx f_m1 = phase(-k) + sol.r * phase(k);
    const cplx f_p1 = sol.t * phase(k);
    CVector src(c.size());
    src[lead.joint_left - 1] += lead.g_left * f_m1;
    src[lead.joint_right - 1] += lead.g_right * f_p1;
    const CVector x = lu_solve(assemble_delta(c, sol.energy).matrix, src);
    split_amplitudes(x, c.n_a(), sol);
    sol.deficit = current_deficit(sol);
    return sol;
}

ScatteringSolution solve_rt_direct(const ScatteringCenter& c, const LeadAttachment& lead,
                                   double k) {
    validate_lead(lead, c.n_a());
    const double energy = dispersion(k, lead.kappa);
    const CVector x = solve_augmented(assemble_full_center_matrix(c), lead, k, energy);
    ScatteringSolution sol;
    sol.k = k;
    sol.energy = energy;
    sol.r = x[c.size()];
    sol.t = x[c.size() + 1];
    split_amplitudes(CVector(x.begin(), x.end() - 2), c.n_a(), sol);
    sol.deficit = current_deficit(sol);
    return sol;
}

ScatteringSolution solve_rt_direct_raw(const ComplexMatrix& center, const LeadAttachment& lead,
                                       double k) {
    if (!center.square() || center.empty())
        throw DimensionMismatch("raw center matrix must be square and non-empty");
    validate_lead(lead, center.rows());
    const double energy = dispersion(k, lead.kappa);
    const CVector x = solve_augmented(center, lead, k, energy);
    const std::size_t n = center.rows();
    ScatteringSolution sol;
    sol.k = k;
    sol.energy = energy;
    sol.r = x[n];
    sol.t = x[n + 1];
    sol.alpha.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
    sol.deficit = current_deficit(sol);
    return sol;
}

cplx reconstruct_wavefunction(const ScatteringSolution& sol, long site) {
    if (site == 0) throw InvalidSite("lead site index 0 is not a lead site");
    const double j = static_cast<double>(site);
    if (site < 0) return phase(sol.k * j) + sol.r * phase(-sol.k * j);
    return sol.t * phase(sol.k * j);
}

double current_deficit(const ScatteringSolution& sol) {
    return 1.0 - std::norm(sol.r) - std::norm(sol.t);
}

double schrodinger_residual(const ComplexMatrix& center, const LeadAttachment& lead,
                            const ScatteringSolution& sol) {
    const std::size_t n = center.rows();
    CVector x(sol.alpha);
    x.insert(x.end(), sol.beta.begin(), sol.beta.end());
    if (x.size() != n) throw DimensionMismatch("solution length does not match center");
    const std::size_t L = lead.joint_left - 1;
    const std::size_t R = lead.joint_right - 1;
    const double e = sol.energy;
    const cplx f_m1 = reconstruct_wavefunction(sol, -1);
    const cplx f_m2 = reconstruct_wavefunction(sol, -2);
    const cplx f_p1 = reconstruct_wavefunction(sol, 1);
    const cplx f_p2 = reconstruct_wavefunction(sol, 2);

    CVector hx = center * std::span<const cplx>(x);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cplx row = hx[i] - e * x[i];
        if (i == L) row -= lead.g_left * f_m1;
        if (i == R) row -= lead.g_right * f_p1;
        worst = std::max(worst, std::abs(row));
    }
    worst = std::max(worst, std::abs(-lead.kappa * f_m2 - std::conj(lead.g_left) * x[L] - e * f_m1));
    worst = std::max(worst, std::abs(-lead.kappa * f_p2 - std::conj(lead.g_right) * x[R] - e * f_p1));
    return worst;
}

SpectrumResult spectrum(const ScatteringCenter& c, const LeadAttachment& lead, double k_min,
                        double k_max, std::size_t steps) {
    validate_lead(lead, c.n_a());
    return sweep(k_min, k_max, steps, [&](double k) { return solve_rt_direct(c, lead, k); },
                 assemble_full_center_matrix(c), lead.kappa);
}

SpectrumResult spectrum_raw(const ComplexMatrix& center, const LeadAttachment& lead, double k_min,
                            double k_max, std::size_t steps) {
    validate_lead(lead, center.rows());
    return sweep(k_min, k_max, steps,
                 [&](double k) { return solve_rt_direct_raw(center, lead, k); }, center,
                 lead.kappa);
}

}  // namespace nhs
