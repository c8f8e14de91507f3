#pragma once

#include <cstddef>

#include "nhscatter/linalg.hpp"
#include "nhscatter/model.hpp"

namespace nhs {

/// Blocks of a parity-symmetric graph with n1 sites on the mirror axis and
/// n2 mirror pairs. Site order is (axis 1..n1, first halves of the pairs,
/// their mirror images).
///
/// h_gamma carries the on-axis potentials on its diagonal. v holds the
/// pair potentials: V_j sits on the first half of pair j and conj(V_j) on
/// its mirror image, so Re(V_j) enters both diagonals and i Im(V_j) forms
/// the gain/loss block H_delta.
struct PTBlocks {
    ComplexMatrix h_gamma;        // n1 x n1
    ComplexMatrix h_alpha;        // n2 x n2
    ComplexMatrix h_gamma_alpha;  // n1 x n2
    ComplexMatrix h_alpha_beta;   // n2 x n2, couples a pair half to the mirror halves
    CVector v;                    // n2

    std::size_t n1() const noexcept { return h_gamma.rows(); }
    std::size_t n2() const noexcept { return h_alpha.rows(); }

    friend bool operator==(const PTBlocks&, const PTBlocks&) = default;
};

/// All hoppings and axis potentials real; h_gamma, h_alpha, h_alpha_beta symmetric.
struct PTGraphSpec : PTBlocks {};

/// Complex Hermitian h_gamma, h_alpha, h_alpha_beta and complex h_gamma_alpha.
/// The mirror-mirror coupling block is conj(h_alpha_beta).
struct GeneralPTGraphSpec : PTBlocks {};

/// Throws DimensionMismatch, NotReal or NotHermitian.
void validate(const PTGraphSpec& spec);
void validate(const GeneralPTGraphSpec& spec);

ComplexMatrix assemble_hpt(const PTGraphSpec& spec);
ComplexMatrix assemble_hpt(const GeneralPTGraphSpec& spec);

/// Permutation fixing the axis and swapping each pair site with its mirror.
ComplexMatrix parity_matrix(std::size_t n1, std::size_t n2);
inline ComplexMatrix parity_matrix(const PTBlocks& spec) {
    return parity_matrix(spec.n1(), spec.n2());
}

/// max |P conj(H) P - H|; zero for a PT-symmetric H.
double check_pt_symmetry(const ComplexMatrix& h, const ComplexMatrix& p);

/// Real orthogonal change of basis to (axis, symmetric pair combinations,
/// antisymmetric pair combinations).
ComplexMatrix fold_unitary(std::size_t n1, std::size_t n2);
inline ComplexMatrix fold_unitary(const PTBlocks& spec) {
    return fold_unitary(spec.n1(), spec.n2());
}

/// Cluster A = axis + symmetric combinations, cluster B = antisymmetric
/// combinations, coupled through [0; H_delta].
ScatteringCenter fold(const PTGraphSpec& spec);

/// As fold(), with the coupling H_delta - i Im(H_alpha_beta). The real part
/// of h_alpha_beta shifts the A and B diagonal blocks in opposite directions.
ScatteringCenter fold_generalized(const GeneralPTGraphSpec& spec);

struct FoldedNetwork {
    ScatteringCenter center;
    LeadAttachment lead;
};

/// Folds and carries the lead over. Joints index the original graph and
/// must be axis sites; axis sites keep their indices in the folded basis.
/// Throws JointOutsideAxis otherwise.
FoldedNetwork fold(const PTGraphSpec& spec, const LeadAttachment& lead);
FoldedNetwork fold_generalized(const GeneralPTGraphSpec& spec, const LeadAttachment& lead);

}  // namespace nhs
