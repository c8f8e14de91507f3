#pragma once

#include <cstdint>
#include <random>

#include "nhscatter/linalg.hpp"
#include "nhscatter/model.hpp"
#include "nhscatter/pt_builder.hpp"

namespace nhs {

using Rng = std::mt19937_64;

/// Independent generator for trial `index` of a run seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

ComplexMatrix random_complex_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0);
ComplexMatrix random_hermitian(Rng& rng, std::size_t n, double scale = 1.0);
ComplexMatrix random_real_symmetric(Rng& rng, std::size_t n, double scale = 1.0);

struct EnsembleOptions {
    std::size_t max_n_a = 8;
    std::size_t max_n_b = 8;
    /// Coupling norm drawn uniformly up to this multiple of ||H_A||_inf.
    double max_coupling_ratio = 10.0;
};

struct RandomNetwork {
    ScatteringCenter center;
    LeadAttachment lead;
};

/// Random Hermitian H_A (n_a >= 2) and H_B (n_b may be 0), unrestricted
/// complex H_AB, random kappa of either sign, random complex couplings
/// and two distinct random joints.
RandomNetwork random_network(Rng& rng, const EnsembleOptions& opts = {});

/// Center with fixed block sizes, coupling as in random_network.
ScatteringCenter random_center(Rng& rng, std::size_t n_a, std::size_t n_b,
                               double max_coupling_ratio = 10.0);

/// Uniform in-band momentum, kept 0.01 away from the band edges.
double random_momentum(Rng& rng);

/// [[H_A, H_AB], [+H_AB^dagger, H_B + i diag(g)]] with random g: Hermitian
/// coupling plus unbalanced gain/loss on cluster B, a center outside the
/// conserving class. Requires n_b > 0.
ComplexMatrix mutate_to_hermitian_coupling(const ScatteringCenter& c, Rng& rng);

PTGraphSpec random_pt_spec(Rng& rng, std::size_t max_n1 = 5, std::size_t max_n2 = 5);
GeneralPTGraphSpec random_general_pt_spec(Rng& rng, std::size_t max_n1 = 5, std::size_t max_n2 = 5);

/// Two distinct random axis joints for a spec with n1 >= 2 axis sites.
LeadAttachment random_axis_lead(Rng& rng, std::size_t n1);

}  // namespace nhs
