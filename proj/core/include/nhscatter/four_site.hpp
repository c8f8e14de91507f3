#pragma once

#include "nhscatter/linalg.hpp"
#include "nhscatter/model.hpp"

/// Exactly solvable four-site ring with on-site gain i*gamma1 at site 2 and
/// loss -i*gamma2 at site 4, leads attached at sites 1 and 3, kappa = 1.
namespace nhs::four_site {

struct Params {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
};

/// The ring matrix in site order (1, 2, 3, 4).
struct RawCenter {
    ComplexMatrix matrix;
    LeadAttachment lead;
};

RawCenter four_site_center(const Params& p);

/// Parity for the ring: swaps sites 2 and 4.
ComplexMatrix ring_parity();

/// Orthogonal map to the basis (1, 3, A, B) with A = (|2> + |4>)/sqrt2 and
/// B = (|2> - |4>)/sqrt2. Rows are the new basis vectors.
ComplexMatrix fold_unitary();

/// The ring in the (1, 3, A, B) basis, for any gamma1, gamma2.
ComplexMatrix folded_matrix(const Params& p);

/// The folded ring as a validated center with h_a on (1, 3, A) and h_b on B;
/// leads at folded sites 1 and 2. Throws NotInConservingClass unless
/// gamma1 == gamma2.
struct FoldedCenter {
    ScatteringCenter center;
    LeadAttachment lead;
};
FoldedCenter folded_four_site(const Params& p);

/// zeta = 1/(cos k + i gamma1/2) + 1/(cos k - i gamma2/2). Throws ZetaPole.
cplx zeta(double k, const Params& p);

struct Coefficients {
    cplx r;
    cplx t;
};

/// Closed-form r and t. Throws PoleAtK when |e^{-ik} - zeta| <= 1e-12.
Coefficients closed_form_rt(double k, const Params& p);

/// T(k) for gamma1 == gamma2 == gamma; T(pi/2) = 0.
double transmission_T(double k, double gamma);

/// T'(k) for the Hermitian side-coupled variant (gamma -> i gamma).
double transmission_Tprime(double k, double gamma);

/// The Hermitian counterpart realizing gamma -> i gamma: real potentials
/// -gamma at site 2 and +gamma at site 4.
RawCenter hermitian_side_coupled_center(double gamma);

/// 1 - |r|^2 - |t|^2 in closed form. Throws DegenerateDenominator.
double closed_form_deficit(double k, const Params& p);

}  // namespace nhs::four_site
