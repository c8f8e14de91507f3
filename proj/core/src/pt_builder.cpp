#include "nhscatter/pt_builder.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nhscatter/error.hpp"

namespace nhs {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_shape(const ComplexMatrix& m, std::size_t r, std::size_t c, const char* name) {
    if (m.rows() != r || m.cols() != c)
        throw DimensionMismatch(std::string(name) + " must be " + std::to_string(r) + "x" +
                                std::to_string(c) + ", got " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
    if (!m.all_finite()) throw DimensionMismatch(std::string(name) + " has non-finite entries");
}

void check_shapes(const PTBlocks& s) {
    const std::size_t n1 = s.n1();
    const std::size_t n2 = s.n2();
    if (n1 == 0 || n2 == 0) throw DimensionMismatch("n1 and n2 must both be positive");
    check_shape(s.h_gamma, n1, n1, "H_gamma");
    check_shape(s.h_alpha, n2, n2, "H_alpha");
    check_shape(s.h_gamma_alpha, n1, n2, "H_gamma_alpha");
    check_shape(s.h_alpha_beta, n2, n2, "H_alpha_beta");
    if (s.v.size() != n2) throw DimensionMismatch("V must have n2 entries");
    for (const auto& z : s.v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DimensionMismatch("V has non-finite entries");
}

void check_real(const ComplexMatrix& m, const char* name) {
    for (const auto& z : m.entries())
        if (z.imag() != 0.0) throw NotReal(std::string(name) + " must be real");
}

void check_hermitian(const ComplexMatrix& m, const char* name) {
    if (const double d = hermiticity_defect(m); d > kHermiticityTolerance) throw NotHermitian(name, d);
}

// H_alpha with Re(V) added to its diagonal: the potential seen by both pair halves.
ComplexMatrix pair_block(const PTBlocks& s) {
    ComplexMatrix h = s.h_alpha;
    for (std::size_t j = 0; j < s.n2(); ++j) h(j, j) += s.v[j].real();
    return h;
}

ComplexMatrix gain_loss_block(const PTBlocks& s) {
    ComplexMatrix h(s.n2(), s.n2());
    for (std::size_t j = 0; j < s.n2(); ++j) h(j, j) = kI * s.v[j].imag();
    return h;
}

ComplexMatrix assemble(const PTBlocks& s, const ComplexMatrix& mirror_coupling) {
    const std::size_t n1 = s.n1();
    const std::size_t n2 = s.n2();
    const ComplexMatrix ha = pair_block(s);
    const ComplexMatrix hd = gain_loss_block(s);
    const ComplexMatrix hga_dag = s.h_gamma_alpha.adjoint();

    ComplexMatrix h(n1 + 2 * n2, n1 + 2 * n2);
    h.set_block(0, 0, s.h_gamma);
    h.set_block(0, n1, s.h_gamma_alpha);
    h.set_block(0, n1 + n2, s.h_gamma_alpha);
    h.set_block(n1, 0, hga_dag);
    h.set_block(n1, n1, ha + hd);
    h.set_block(n1, n1 + n2, s.h_alpha_beta);
    h.set_block(n1 + n2, 0, hga_dag);
    h.set_block(n1 + n2, n1, mirror_coupling);
    h.set_block(n1 + n2, n1 + n2, ha - hd);
    return h;
}

// Folded blocks given the symmetric part `hab_sym` (enters A and B with
// opposite signs) and the antisymmetric-imaginary part `hab_skew` of the
// pair-mirror coupling.
ScatteringCenter fold_blocks(const PTBlocks& s, const ComplexMatrix& hab_sym,
                             const ComplexMatrix& hab_skew) {
    const std::size_t n1 = s.n1();
    const std::size_t n2 = s.n2();
    const ComplexMatrix ha = pair_block(s);
    const cplx root2 = std::numbers::sqrt2;

    ComplexMatrix h_a(n1 + n2, n1 + n2);
    h_a.set_block(0, 0, s.h_gamma);
    h_a.set_block(0, n1, root2 * s.h_gamma_alpha);
    h_a.set_block(n1, 0, root2 * s.h_gamma_alpha.adjoint());
    h_a.set_block(n1, n1, ha + hab_sym);

    ComplexMatrix h_ab(n1 + n2, n2);
    h_ab.set_block(n1, 0, gain_loss_block(s) - hab_skew);

    return build_center(std::move(h_a), ha - hab_sym, std::move(h_ab));
}

LeadAttachment carry_lead(const PTBlocks& s, const LeadAttachment& lead) {
    for (const std::size_t j : {lead.joint_left, lead.joint_right})
        if (j < 1 || j > s.n1())
            throw JointOutsideAxis("joint site " + std::to_string(j) + " is not an axis site [1, " +
                                   std::to_string(s.n1()) + "]");
    validate_lead(lead, s.n1());
    return lead;
}

}  // namespace

void validate(const PTGraphSpec& spec) {
    check_shapes(spec);
    check_real(spec.h_gamma, "H_gamma");
    check_real(spec.h_alpha, "H_alpha");
    check_real(spec.h_gamma_alpha, "H_gamma_alpha");
    check_real(spec.h_alpha_beta, "H_alpha_beta");
    check_hermitian(spec.h_gamma, "H_gamma");
    check_hermitian(spec.h_alpha, "H_alpha");
    check_hermitian(spec.h_alpha_beta, "H_alpha_beta");
}

void validate(const GeneralPTGraphSpec& spec) {
    check_shapes(spec);
    check_hermitian(spec.h_gamma, "H_gamma");
    check_hermitian(spec.h_alpha, "H_alpha");
    check_hermitian(spec.h_alpha_beta, "H_alpha_beta");
}

ComplexMatrix assemble_hpt(const PTGraphSpec& spec) {
    validate(spec);
    return assemble(spec, spec.h_alpha_beta);
}

ComplexMatrix assemble_hpt(const GeneralPTGraphSpec& spec) {
    validate(spec);
    return assemble(spec, spec.h_alpha_beta.conj());
}

ComplexMatrix parity_matrix(std::size_t n1, std::size_t n2) {
    const std::size_t n = n1 + 2 * n2;
    ComplexMatrix p(n, n);
    for (std::size_t j = 0; j < n1; ++j) p(j, j) = 1.0;
    for (std::size_t j = n1; j < n1 + n2; ++j) {
        p(j, j + n2) = 1.0;
        p(j + n2, j) = 1.0;
    }
    return p;
}

double check_pt_symmetry(const ComplexMatrix& h, const ComplexMatrix& p) {
    if (!h.square() || !p.square() || h.rows() != p.rows())
        throw DimensionMismatch("check_pt_symmetry: H and P must be square of equal size");
    return max_abs_diff(p * h.conj() * p, h);
}

ComplexMatrix fold_unitary(std::size_t n1, std::size_t n2) {
    const std::size_t n = n1 + 2 * n2;
    const double s = std::numbers::sqrt2 / 2.0;
    ComplexMatrix u(n, n);
    for (std::size_t j = 0; j < n1; ++j) u(j, j) = 1.0;
    for (std::size_t j = 0; j < n2; ++j) {
        const std::size_t pair = n1 + j;
        const std::size_t mirror = n1 + n2 + j;
        u(pair, pair) = s;
        u(pair, mirror) = s;
        u(mirror, pair) = s;
        u(mirror, mirror) = -s;
    }
    return u;
}

ScatteringCenter fold(const PTGraphSpec& spec) {
    validate(spec);
    return fold_blocks(spec, spec.h_alpha_beta, ComplexMatrix(spec.n2(), spec.n2()));
}

ScatteringCenter fold_generalized(const GeneralPTGraphSpec& spec) {
    validate(spec);
    const std::size_t n2 = spec.n2();
    ComplexMatrix re(n2, n2);
    ComplexMatrix i_im(n2, n2);
    for (std::size_t r = 0; r < n2; ++r)
        for (std::size_t c = 0; c < n2; ++c) {
            re(r, c) = spec.h_alpha_beta(r, c).real();
            i_im(r, c) = kI * spec.h_alpha_beta(r, c).imag();
        }
    return fold_blocks(spec, re, i_im);
}

FoldedNetwork fold(const PTGraphSpec& spec, const LeadAttachment& lead) {
    validate(spec);
    return {fold(spec), carry_lead(spec, lead)};
}

FoldedNetwork fold_generalized(const GeneralPTGraphSpec& spec, const LeadAttachment& lead) {
    validate(spec);
    return {fold_generalized(spec), carry_lead(spec, lead)};
}

}  // namespace nhs
