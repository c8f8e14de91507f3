#include "nhscatter/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nhscatter/error.hpp"

namespace nhs {

namespace {

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

cplx random_coupling(Rng& rng) {
    return std::polar(uniform(rng, 0.3, 2.0), uniform(rng, -std::numbers::pi, std::numbers::pi));
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

ComplexMatrix random_complex_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale) {
    std::normal_distribution<double> nd(0.0, scale);
    ComplexMatrix m(rows, cols);
    for (auto& z : m.entries()) z = {nd(rng), nd(rng)};
    return m;
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t n, double scale) {
    std::normal_distribution<double> nd(0.0, scale);
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        m(r, r) = nd(rng);
        for (std::size_t c = r + 1; c < n; ++c) {
            m(r, c) = {nd(rng), nd(rng)};
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

ComplexMatrix random_real_symmetric(Rng& rng, std::size_t n, double scale) {
    std::normal_distribution<double> nd(0.0, scale);
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            m(r, c) = nd(rng);
            m(c, r) = m(r, c);
        }
    return m;
}

ScatteringCenter random_center(Rng& rng, std::size_t n_a, std::size_t n_b,
                               double max_coupling_ratio) {
    ComplexMatrix h_a = random_hermitian(rng, n_a);
    ComplexMatrix h_b = random_hermitian(rng, n_b);
    ComplexMatrix h_ab(n_a, n_b);
    if (n_b > 0) {
        h_ab = random_complex_matrix(rng, n_a, n_b);
        const double target = uniform(rng, 0.0, max_coupling_ratio) * h_a.norm_inf();
        const double current = h_ab.norm_inf();
        if (current > 0.0) h_ab = cplx{target / current} * h_ab;
    }
    return build_center(std::move(h_a), std::move(h_b), std::move(h_ab));
}

RandomNetwork random_network(Rng& rng, const EnsembleOptions& opts) {
    const std::size_t n_a = uniform_size(rng, 2, std::max<std::size_t>(2, opts.max_n_a));
    const std::size_t n_b = uniform_size(rng, 0, opts.max_n_b);
    ScatteringCenter center = random_center(rng, n_a, n_b, opts.max_coupling_ratio);

    LeadAttachment lead;
    lead.kappa = uniform(rng, 0.5, 2.0) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    lead.g_left = random_coupling(rng);
    lead.g_right = random_coupling(rng);
    lead.joint_left = uniform_size(rng, 1, n_a);
    do {
        lead.joint_right = uniform_size(rng, 1, n_a);
    } while (lead.joint_right == lead.joint_left);
    return {std::move(center), lead};
}

double random_momentum(Rng& rng) { return uniform(rng, 0.01, std::numbers::pi - 0.01); }

ComplexMatrix mutate_to_hermitian_coupling(const ScatteringCenter& c, Rng& rng) {
    if (c.n_b() == 0) throw DimensionMismatch("mutation needs a non-empty cluster B");
    ComplexMatrix m = assemble_full_center_matrix(c);
    m.set_block(c.n_a(), 0, c.h_ab().adjoint());
    for (std::size_t j = 0; j < c.n_b(); ++j)
        m(c.n_a() + j, c.n_a() + j) += cplx{0.0, uniform(rng, 0.5, 2.0)};
    return m;
}

PTGraphSpec random_pt_spec(Rng& rng, std::size_t max_n1, std::size_t max_n2) {
    const std::size_t n1 = uniform_size(rng, 2, std::max<std::size_t>(2, max_n1));
    const std::size_t n2 = uniform_size(rng, 1, std::max<std::size_t>(1, max_n2));
    PTGraphSpec s;
    s.h_gamma = random_real_symmetric(rng, n1);
    s.h_alpha = random_real_symmetric(rng, n2);
    s.h_alpha_beta = random_real_symmetric(rng, n2);
    s.h_gamma_alpha = random_complex_matrix(rng, n1, n2);
    for (auto& z : s.h_gamma_alpha.entries()) z = z.real();
    for (std::size_t j = 0; j < n2; ++j)
        s.v.emplace_back(uniform(rng, -1.0, 1.0), uniform(rng, -3.0, 3.0));
    return s;
}

GeneralPTGraphSpec random_general_pt_spec(Rng& rng, std::size_t max_n1, std::size_t max_n2) {
    const std::size_t n1 = uniform_size(rng, 2, std::max<std::size_t>(2, max_n1));
    const std::size_t n2 = uniform_size(rng, 1, std::max<std::size_t>(1, max_n2));
    GeneralPTGraphSpec s;
    s.h_gamma = random_hermitian(rng, n1);
    s.h_alpha = random_hermitian(rng, n2);
    s.h_alpha_beta = random_hermitian(rng, n2);
    s.h_gamma_alpha = random_complex_matrix(rng, n1, n2);
    for (std::size_t j = 0; j < n2; ++j)
        s.v.emplace_back(uniform(rng, -1.0, 1.0), uniform(rng, -3.0, 3.0));
    return s;
}

LeadAttachment random_axis_lead(Rng& rng, std::size_t n1) {
    if (n1 < 2) throw DimensionMismatch("need at least two axis sites for two joints");
    LeadAttachment lead;
    lead.kappa = uniform(rng, 0.5, 2.0);
    lead.g_left = random_coupling(rng);
    lead.g_right = random_coupling(rng);
    lead.joint_left = uniform_size(rng, 1, n1);
    do {
        lead.joint_right = uniform_size(rng, 1, n1);
    } while (lead.joint_right == lead.joint_left);
    return lead;
}

}  // namespace nhs
