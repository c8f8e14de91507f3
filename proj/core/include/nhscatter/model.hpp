#pragma once

#include <cstddef>

#include "nhscatter/linalg.hpp"

namespace nhs {

/// Hermiticity tolerance applied when validating H_A and H_B.
inline constexpr double kHermiticityTolerance = 1e-12;

/// Two Hermitian clusters A and B joined by an anti-Hermitian coupling.
///
/// The full matrix is [[H_A, H_AB], [-H_AB^dagger, H_B]]; the lower-left
/// block is always derived from H_AB and never stored. Instances only come
/// out of build_center(), so every center in circulation is valid.
class ScatteringCenter {
public:
    std::size_t n_a() const noexcept { return h_a_.rows(); }
    std::size_t n_b() const noexcept { return h_b_.rows(); }
    std::size_t size() const noexcept { return n_a() + n_b(); }

    const ComplexMatrix& h_a() const noexcept { return h_a_; }
    const ComplexMatrix& h_b() const noexcept { return h_b_; }
    const ComplexMatrix& h_ab() const noexcept { return h_ab_; }

    friend bool operator==(const ScatteringCenter&, const ScatteringCenter&) = default;

private:
    friend ScatteringCenter build_center(ComplexMatrix, ComplexMatrix, ComplexMatrix);
    ScatteringCenter() = default;

    ComplexMatrix h_a_;
    ComplexMatrix h_b_;
    ComplexMatrix h_ab_;
};

/// Validates the blocks and returns the center.
///
/// h_b may be 0x0, in which case h_ab must be n_a x 0 (or 0x0). Throws
/// DimensionMismatch on incompatible shapes or non-finite entries and
/// NotHermitian when h_a or h_b exceeds kHermiticityTolerance.
ScatteringCenter build_center(ComplexMatrix h_a, ComplexMatrix h_b, ComplexMatrix h_ab);

/// Two semi-infinite chains with hopping kappa, attached at 1-based
/// joint sites through couplings g_left and g_right.
struct LeadAttachment {
    double kappa = 1.0;
    cplx g_left{1.0, 0.0};
    cplx g_right{1.0, 0.0};
    std::size_t joint_left = 1;
    std::size_t joint_right = 2;

    friend bool operator==(const LeadAttachment&, const LeadAttachment&) = default;
};

/// Checks the lead against a center whose joint-eligible sites are
/// [1, n_sites]. Throws InvalidLead.
void validate_lead(const LeadAttachment& lead, std::size_t n_sites);

/// Full center matrix with the anti-Hermitian lower-left block filled in.
ComplexMatrix assemble_full_center_matrix(const ScatteringCenter& c);

/// The center shifted by the scattering energy.
struct DeltaMatrix {
    double energy = 0.0;
    ComplexMatrix matrix;
};

DeltaMatrix assemble_delta(const ScatteringCenter& c, double e);

}  // namespace nhs
