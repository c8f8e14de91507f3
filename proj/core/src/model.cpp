#include "nhscatter/model.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "nhscatter/error.hpp"

namespace nhs {

NotHermitian::NotHermitian(std::string block, double defect)
    : Error([&] {
          std::ostringstream os;
          os << "block " << block << " is not Hermitian (defect " << defect << ", tolerance "
             << kHermiticityTolerance << ")";
          return os.str();
      }()),
      block_(std::move(block)),
      defect_(defect) {}

ScatteringCenter build_center(ComplexMatrix h_a, ComplexMatrix h_b, ComplexMatrix h_ab) {
    const std::size_t n_a = h_a.rows();
    const std::size_t n_b = h_b.rows();
    if (n_a == 0 || !h_a.square()) throw DimensionMismatch("H_A must be a non-empty square matrix");
    if (!h_b.square()) throw DimensionMismatch("H_B must be square");
    if (n_b == 0) {
        // Accept 0x0 or n_a x 0 for the empty coupling.
        if (!h_ab.empty()) throw DimensionMismatch("H_AB must be empty when H_B is empty");
        h_ab = ComplexMatrix(n_a, 0);
    } else if (h_ab.rows() != n_a || h_ab.cols() != n_b) {
        throw DimensionMismatch("H_AB must be " + std::to_string(n_a) + "x" + std::to_string(n_b) +
                                ", got " + std::to_string(h_ab.rows()) + "x" +
                                std::to_string(h_ab.cols()));
    }
    if (!h_a.all_finite() || !h_b.all_finite() || !h_ab.all_finite())
        throw DimensionMismatch("center blocks contain non-finite entries");

    if (const double d = hermiticity_defect(h_a); d > kHermiticityTolerance)
        throw NotHermitian("H_A", d);
    if (n_b > 0) {
        if (const double d = hermiticity_defect(h_b); d > kHermiticityTolerance)
            throw NotHermitian("H_B", d);
    }

    ScatteringCenter c;
    c.h_a_ = std::move(h_a);
    c.h_b_ = n_b == 0 ? ComplexMatrix(0, 0) : std::move(h_b);
    c.h_ab_ = std::move(h_ab);
    return c;
}

void validate_lead(const LeadAttachment& lead, std::size_t n_sites) {
    if (!std::isfinite(lead.kappa) || lead.kappa == 0.0)
        throw InvalidLead("kappa must be real, finite and nonzero");
    if (lead.g_left == cplx{} || lead.g_right == cplx{})
        throw InvalidLead("joint couplings g_left and g_right must be nonzero");
    if (!std::isfinite(std::abs(lead.g_left)) || !std::isfinite(std::abs(lead.g_right)))
        throw InvalidLead("joint couplings must be finite");
    if (lead.joint_left < 1 || lead.joint_left > n_sites || lead.joint_right < 1 ||
        lead.joint_right > n_sites)
        throw InvalidLead("joint sites must lie in [1, " + std::to_string(n_sites) + "]");
    if (lead.joint_left == lead.joint_right)
        throw InvalidLead("joint_left and joint_right must differ");
}

ComplexMatrix assemble_full_center_matrix(const ScatteringCenter& c) {
    const std::size_t n_a = c.n_a();
    ComplexMatrix m(c.size(), c.size());
    m.set_block(0, 0, c.h_a());
    if (c.n_b() > 0) {
        m.set_block(0, n_a, c.h_ab());
        m.set_block(n_a, 0, cplx{-1.0} * c.h_ab().adjoint());
        m.set_block(n_a, n_a, c.h_b());
    }
    return m;
}

DeltaMatrix assemble_delta(const ScatteringCenter& c, double e) {
    DeltaMatrix d{e, assemble_full_center_matrix(c)};
    for (std::size_t i = 0; i < d.matrix.rows(); ++i) d.matrix(i, i) -= e;
    return d;
}

}  // namespace nhs
