#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "nhscatter/linalg.hpp"
#include "nhscatter/model.hpp"

namespace nhs {

/// |eta| at or below this is reported as PoleAtK.
inline constexpr double kPoleTolerance = 1e-12;
/// Momenta with sin(k) at or below this are treated as band edges.
inline constexpr double kBandEdgeTolerance = 1e-8;

/// Joint-site elements of the inverse Delta matrix, scaled by the leads.
struct AbcCoefficients {
    cplx a;
    cplx b;
    cplx b_tilde;
    cplx c;
    cplx eta;
};

/// A left-incident unit plane wave scattered by the center.
///
/// alpha spans cluster A (or the whole raw center), beta spans cluster B.
struct ScatteringSolution {
    double k = 0.0;
    double energy = 0.0;
    cplx r;
    cplx t;
    CVector alpha;
    CVector beta;
    double deficit = 0.0;
};

enum class PointStatus { ok, pole, singular };
std::string_view to_string(PointStatus s) noexcept;

struct SpectrumEntry {
    double k = 0.0;
    double transmission = 0.0;
    double reflection = 0.0;
    double deficit = 0.0;
    PointStatus status = PointStatus::ok;
};

struct SpectrumResult {
    std::vector<SpectrumEntry> entries;
};

/// E = -2 kappa cos k. Throws MomentumOutOfBand when sin k <= 1e-8 or
/// k lies outside (0, pi).
double dispersion(double k, double kappa);

AbcCoefficients coefficients_abc(const ScatteringCenter& c, const LeadAttachment& lead, double k);

/// r and t from the closed-form expressions in a, b, b~, c and eta.
/// Interior amplitudes follow from the two joint columns of Delta^{-1}.
ScatteringSolution solve_rt_formula(const ScatteringCenter& c, const LeadAttachment& lead,
                                    double k);

/// Solves for (alpha, beta, r, t) in one augmented linear system built
/// from the center rows and the two lead rows adjacent to the joints.
/// Never forms Delta^{-1}, so it works where Delta alone is singular.
ScatteringSolution solve_rt_direct(const ScatteringCenter& c, const LeadAttachment& lead, double k);

/// Same augmented system for an arbitrary square center matrix, with the
/// joints indexing the full matrix. Used for centers outside the
/// anti-Hermitian-coupled class. beta is left empty.
ScatteringSolution solve_rt_direct_raw(const ComplexMatrix& center, const LeadAttachment& lead,
                                       double k);

/// Lead amplitude f_j for j <= -1 (left lead) or j >= 1 (right lead).
cplx reconstruct_wavefunction(const ScatteringSolution& sol, long site);

/// 1 - |r|^2 - |t|^2.
double current_deficit(const ScatteringSolution& sol);

/// Largest absolute residual of the stationary Schroedinger equation over
/// the center rows and the two lead sites adjacent to the joints.
/// center is the full (n_a + n_b) matrix; the solution vector is alpha ++ beta.
double schrodinger_residual(const ComplexMatrix& center, const LeadAttachment& lead,
                            const ScatteringSolution& sol);

/// Uniform k grid over [k_min, k_max], each point solved with the direct
/// path. Failed points are flagged, never dropped.
SpectrumResult spectrum(const ScatteringCenter& c, const LeadAttachment& lead, double k_min,
                        double k_max, std::size_t steps);
SpectrumResult spectrum_raw(const ComplexMatrix& center, const LeadAttachment& lead, double k_min,
                            double k_max, std::size_t steps);

}  // namespace nhs
