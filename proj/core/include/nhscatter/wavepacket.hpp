#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "nhscatter/linalg.hpp"
#include "nhscatter/model.hpp"

namespace nhs {

/// Site layout of a finite system: left lead sites [0, left_end), center
/// sites [left_end, center_end), right lead sites [center_end, total).
/// Left lead site i sits at lead coordinate j = i - left_end (j = -n..-1),
/// right lead site i at j = i - center_end + 1 (j = 1..n).
struct Boundaries {
    std::size_t left_end = 0;
    std::size_t center_end = 0;
    std::size_t total = 0;
};

struct FiniteSystem {
    ComplexMatrix hamiltonian;
    Boundaries boundaries;
};

/// Both leads truncated to n sites with hard walls at the ends.
FiniteSystem build_finite_system(const ComplexMatrix& center, const LeadAttachment& lead,
                                 std::size_t n);
FiniteSystem build_finite_system(const ScatteringCenter& c, const LeadAttachment& lead,
                                 std::size_t n);

/// Lead coordinate of site i; 0 for center sites.
long lead_coordinate(const Boundaries& b, std::size_t i);

struct WavepacketConfig {
    std::size_t chain_half_length = 600;
    double x0 = -300.0;
    double sigma = 15.0;
    double k0 = 1.0;
    double t_final = 0.0;
    /// 0 selects default_time_step().
    double dt = 0.0;
};

/// Packet launched from the middle of the left lead, evolved until the
/// scattered lobes sit halfway between the center and the walls.
WavepacketConfig default_config(std::size_t chain_half_length, double sigma, double k0,
                                double kappa);

/// Throws InvalidConfig when the packet would overlap the center or a wall
/// initially, or would not separate from the center by t_final.
void validate(const WavepacketConfig& cfg, double kappa);

/// psi_j ~ exp(-(j - x0)^2 / (4 sigma^2)) exp(i k0 j) on lead sites, zero
/// on the center, normalized to 1.
CVector gaussian_packet(const Boundaries& b, double x0, double sigma, double k0);

/// Largest dt accepted by evolve() for a given Hamiltonian.
double max_time_step(const ComplexMatrix& h);

/// 0.02 / ||H||_inf, used when WavepacketConfig::dt is 0.
double default_time_step(const ComplexMatrix& h);

using Observer = std::function<void(double time, std::span<const cplx> psi)>;

/// Integrates i dpsi/dt = H psi with classical RK4. The step is shrunk so
/// an integer number of steps reaches t_final. The observer, if any, sees
/// t = 0, every `observe_every` steps, and the final state.
/// Throws StepTooLarge when dt > 0.05 / ||H||_inf.
CVector evolve(const ComplexMatrix& h, std::span<const cplx> psi0, double t_final, double dt,
               const Observer& observer = {}, std::size_t observe_every = 0);

struct Partition {
    double left = 0.0;
    double center = 0.0;
    double right = 0.0;
    double total() const noexcept { return left + center + right; }
};

Partition measure_partition(std::span<const cplx> psi, const Boundaries& b);

struct ProbeRow {
    double time;
    Partition partition;
};

struct WavepacketRun {
    Partition initial;
    Partition final;
    std::vector<ProbeRow> probes;
};

/// Builds the finite system, launches the packet and evolves it.
WavepacketRun run_wavepacket(const ComplexMatrix& center, const LeadAttachment& lead,
                             const WavepacketConfig& cfg, std::size_t probe_every = 0);

/// CSV with header time,p_left,p_center,p_right,total_norm.
void write_probe_csv(std::ostream& os, std::span<const ProbeRow> rows);

}  // namespace nhs
