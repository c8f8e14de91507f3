#include "nhscatter/wavepacket.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "nhscatter/error.hpp"

namespace nhs {

namespace {

constexpr cplx kMinusI{0.0, -1.0};
constexpr double kStepFactor = 0.05;
constexpr double kDefaultStepFactor = 0.02;

// Compressed rows of H; the finite chain is tridiagonal away from the center.
struct SparseRows {
    std::vector<std::size_t> row_start;
    std::vector<std::size_t> col;
    std::vector<cplx> val;

    explicit SparseRows(const ComplexMatrix& h) {
        row_start.reserve(h.rows() + 1);
        row_start.push_back(0);
        for (std::size_t r = 0; r < h.rows(); ++r) {
            for (std::size_t c = 0; c < h.cols(); ++c)
                if (h(r, c) != cplx{}) {
                    col.push_back(c);
                    val.push_back(h(r, c));
                }
            row_start.push_back(col.size());
        }
    }

    // out = -i H x
    void apply(std::span<const cplx> x, std::span<cplx> out) const {
        for (std::size_t r = 0; r + 1 < row_start.size(); ++r) {
            cplx s{};
            for (std::size_t p = row_start[r]; p < row_start[r + 1]; ++p) s += val[p] * x[col[p]];
            out[r] = kMinusI * s;
        }
    }
};

}  // namespace

FiniteSystem build_finite_system(const ComplexMatrix& center, const LeadAttachment& lead,
                                 std::size_t n) {
    if (!center.square() || center.empty())
        throw DimensionMismatch("center matrix must be square and non-empty");
    if (n < 1) throw DimensionMismatch("leads need at least one site");
    validate_lead(lead, center.rows());
    const std::size_t nc = center.rows();
    Boundaries b{n, n + nc, 2 * n + nc};
    ComplexMatrix h(b.total, b.total);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        h(i, i + 1) = -lead.kappa;
        h(i + 1, i) = -lead.kappa;
    }
    for (std::size_t i = b.center_end; i + 1 < b.total; ++i) {
        h(i, i + 1) = -lead.kappa;
        h(i + 1, i) = -lead.kappa;
    }
    h.set_block(n, n, center);

    // -g_L |L><-1| + h.c. and -g_R |R><1| + h.c.
    const std::size_t site_l = n + lead.joint_left - 1;
    const std::size_t site_r = n + lead.joint_right - 1;
    const std::size_t lead_m1 = n - 1;
    const std::size_t lead_p1 = b.center_end;
    h(site_l, lead_m1) = -lead.g_left;
    h(lead_m1, site_l) = -std::conj(lead.g_left);
    h(site_r, lead_p1) = -lead.g_right;
    h(lead_p1, site_r) = -std::conj(lead.g_right);
    return {std::move(h), b};
}

FiniteSystem build_finite_system(const ScatteringCenter& c, const LeadAttachment& lead,
                                 std::size_t n) {
    validate_lead(lead, c.n_a());
    return build_finite_system(assemble_full_center_matrix(c), lead, n);
}

long lead_coordinate(const Boundaries& b, std::size_t i) {
    if (i < b.left_end) return static_cast<long>(i) - static_cast<long>(b.left_end);
    if (i >= b.center_end) return static_cast<long>(i - b.center_end) + 1;
    return 0;
}

WavepacketConfig default_config(std::size_t chain_half_length, double sigma, double k0,
                                double kappa) {
    WavepacketConfig cfg;
    cfg.chain_half_length = chain_half_length;
    cfg.sigma = sigma;
    cfg.k0 = k0;
    cfg.x0 = -static_cast<double>(chain_half_length) / 2.0;
    const double speed = 2.0 * std::abs(kappa) * std::sin(k0);
    cfg.t_final = speed > 0.0 ? static_cast<double>(chain_half_length) / speed : 0.0;
    return cfg;
}

void validate(const WavepacketConfig& cfg, double kappa) {
    std::ostringstream os;
    const double n = static_cast<double>(cfg.chain_half_length);
    if (cfg.chain_half_length < 200) os << "chain_half_length must be >= 200; ";
    if (!(cfg.sigma >= 5.0)) os << "sigma must be >= 5; ";
    if (!(cfg.k0 > 0.0 && cfg.k0 < std::numbers::pi)) os << "k0 must lie in (0, pi); ";
    if (!(cfg.x0 < 0.0)) os << "x0 must be in the left lead; ";
    if (!(std::abs(cfg.x0) + 4.0 * cfg.sigma < n)) os << "packet overlaps the wall; ";
    if (!(std::abs(cfg.x0) > 4.0 * cfg.sigma)) os << "packet overlaps the center; ";
    if (!(cfg.t_final > 0.0)) os << "t_final must be positive; ";
    if (!(cfg.dt >= 0.0)) os << "dt must be nonnegative; ";
    const double travelled = 2.0 * std::abs(kappa) * std::sin(cfg.k0) * cfg.t_final;
    const double lobe = travelled - std::abs(cfg.x0);
    if (lobe < 4.0 * cfg.sigma) os << "packet does not clear the center by t_final; ";
    if (lobe > n - 4.0 * cfg.sigma) os << "packet reaches the far wall by t_final; ";
    if (const std::string msg = os.str(); !msg.empty())
        throw InvalidConfig(msg.substr(0, msg.size() - 2));
}

CVector gaussian_packet(const Boundaries& b, double x0, double sigma, double k0) {
    if (!(sigma > 0.0)) throw InvalidConfig("sigma must be positive");
    CVector psi(b.total);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < b.total; ++i) {
        const long j = lead_coordinate(b, i);
        if (j == 0) continue;
        const double x = static_cast<double>(j);
        const double envelope = std::exp(-(x - x0) * (x - x0) / (4.0 * sigma * sigma));
        psi[i] = std::polar(envelope, k0 * x);
        norm2 += envelope * envelope;
    }
    if (!(norm2 > 0.0)) throw InvalidConfig("packet has no weight on the lead sites");
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& z : psi) z *= scale;
    return psi;
}

double max_time_step(const ComplexMatrix& h) {
    const double norm = h.norm_inf();
    return norm > 0.0 ? kStepFactor / norm : std::numeric_limits<double>::infinity();
}

double default_time_step(const ComplexMatrix& h) {
    const double norm = h.norm_inf();
    return norm > 0.0 ? kDefaultStepFactor / norm : std::numeric_limits<double>::infinity();
}

CVector evolve(const ComplexMatrix& h, std::span<const cplx> psi0, double t_final, double dt,
               const Observer& observer, std::size_t observe_every) {
    if (!h.square() || h.rows() != psi0.size())
        throw DimensionMismatch("evolve: Hamiltonian and state sizes differ");
    if (!(dt > 0.0)) throw StepTooLarge("evolve: dt must be positive");
    if (dt > max_time_step(h)) {
        std::ostringstream os;
        os << "evolve: dt = " << dt << " exceeds 0.05/||H||_inf = " << max_time_step(h);
        throw StepTooLarge(os.str());
    }
    if (!(t_final >= 0.0)) throw InvalidConfig("evolve: t_final must be nonnegative");

    const std::size_t n = psi0.size();
    const auto steps = static_cast<std::size_t>(std::ceil(t_final / dt));
    const double step = steps == 0 ? 0.0 : t_final / static_cast<double>(steps);

    const SparseRows op(h);
    CVector psi(psi0.begin(), psi0.end());
    CVector k1(n), k2(n), k3(n), k4(n), tmp(n);

    if (observer) observer(0.0, psi);
    for (std::size_t s = 1; s <= steps; ++s) {
        op.apply(psi, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + 0.5 * step * k1[i];
        op.apply(tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + 0.5 * step * k2[i];
        op.apply(tmp, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + step * k3[i];
        op.apply(tmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            psi[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (observer && ((observe_every > 0 && s % observe_every == 0) || s == steps))
            observer(step * static_cast<double>(s), psi);
    }
    return psi;
}

Partition measure_partition(std::span<const cplx> psi, const Boundaries& b) {
    if (psi.size() != b.total) throw DimensionMismatch("measure_partition: state size mismatch");
    Partition p;
    for (std::size_t i = 0; i < b.total; ++i) {
        const double w = std::norm(psi[i]);
        if (i < b.left_end)
            p.left += w;
        else if (i < b.center_end)
            p.center += w;
        else
            p.right += w;
    }
    return p;
}

WavepacketRun run_wavepacket(const ComplexMatrix& center, const LeadAttachment& lead,
                             const WavepacketConfig& cfg, std::size_t probe_every) {
    validate(cfg, lead.kappa);
    const FiniteSystem sys = build_finite_system(center, lead, cfg.chain_half_length);
    const CVector psi0 = gaussian_packet(sys.boundaries, cfg.x0, cfg.sigma, cfg.k0);
    const double dt = cfg.dt > 0.0 ? cfg.dt : default_time_step(sys.hamiltonian);

    WavepacketRun run;
    run.initial = measure_partition(psi0, sys.boundaries);
    Observer obs;
    if (probe_every > 0) {
        obs = [&](double t, std::span<const cplx> psi) {
            run.probes.push_back({t, measure_partition(psi, sys.boundaries)});
        };
    }
    const CVector psi = evolve(sys.hamiltonian, psi0, cfg.t_final, dt, obs, probe_every);
    run.final = measure_partition(psi, sys.boundaries);
    return run;
}

void write_probe_csv(std::ostream& os, std::span<const ProbeRow> rows) {
    os << "time,p_left,p_center,p_right,total_norm\n";
    os << std::setprecision(12);
    for (const auto& row : rows)
        os << row.time << ',' << row.partition.left << ',' << row.partition.center << ','
           << row.partition.right << ',' << row.partition.total() << '\n';
}

}  // namespace nhs
