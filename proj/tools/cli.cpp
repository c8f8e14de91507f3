#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "nhscatter/error.hpp"
#include "nhscatter/four_site.hpp"
#include "nhscatter/io.hpp"
#include "nhscatter/scattering.hpp"
#include "nhscatter/verify.hpp"
#include "nhscatter/wavepacket.hpp"

namespace nhs::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + path + "'");
    return f;
}

std::string digest(std::string_view text) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << std::hash<std::string_view>{}(text);
    return os.str();
}

std::string fmt_complex(cplx z) {
    std::ostringstream os;
    os << std::setprecision(15) << '(' << z.real() << (z.imag() < 0 ? " - " : " + ")
       << std::abs(z.imag()) << "i)";
    return os.str();
}

void print_solution(std::ostream& out, std::string_view method, const ScatteringSolution& s) {
    out << std::setprecision(15);
    out << "method=" << method << " k=" << s.k << " E=" << s.energy << '\n';
    out << "  r = " << fmt_complex(s.r) << '\n';
    out << "  t = " << fmt_complex(s.t) << '\n';
    out << "  T = " << std::norm(s.t) << '\n';
    out << "  R = " << std::norm(s.r) << '\n';
    out << "  deficit = " << s.deficit << "  (conservation tolerance 1e-10)\n";
}

void write_spectrum_csv(std::ostream& os, const SpectrumResult& res) {
    os << "k,T,R,deficit,status\n" << std::setprecision(17);
    for (const auto& e : res.entries)
        os << e.k << ',' << e.transmission << ',' << e.reflection << ',' << e.deficit << ','
           << to_string(e.status) << '\n';
}

std::string echo(std::span<const std::string> args) {
    std::string s;
    for (const auto& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

int cmd_solve(const std::string& spec_path, double k, const std::string& method,
              std::ostream& out) {
    const std::string text = read_file(spec_path);
    const NetworkSpec net = parse_network_spec(text);
    out << "spec " << spec_path << " digest " << digest(text) << '\n';
    std::optional<ScatteringSolution> formula, direct;
    if (method == "formula" || method == "both") {
        formula = solve_rt_formula(net.center, net.lead, k);
        print_solution(out, "formula", *formula);
    }
    if (method == "direct" || method == "both") {
        direct = solve_rt_direct(net.center, net.lead, k);
        print_solution(out, "direct", *direct);
    }
    if (formula && direct) {
        const double d = std::max(std::abs(formula->r - direct->r), std::abs(formula->t - direct->t));
        out << "agreement max(|dr|, |dt|) = " << d << "  (tolerance 1e-10) "
            << (d <= 1e-10 ? "PASS" : "FAIL") << '\n';
    }
    return kExitOk;
}

int cmd_spectrum(const std::string& spec_path, double k_min, double k_max, std::size_t steps,
                 const std::string& out_path, std::ostream& out) {
    const NetworkSpec net = parse_network_spec(read_file(spec_path));
    const SpectrumResult res = spectrum(net.center, net.lead, k_min, k_max, steps);
    auto f = open_output(out_path);
    write_spectrum_csv(f, res);
    std::size_t flagged = 0;
    double worst = 0.0;
    for (const auto& e : res.entries) {
        if (e.status != PointStatus::ok)
            ++flagged;
        else
            worst = std::max(worst, std::abs(e.deficit));
    }
    out << "wrote " << res.entries.size() << " points to " << out_path << " (" << flagged
        << " flagged); max |deficit| = " << worst << '\n';
    return kExitOk;
}

int cmd_verify(std::span<const std::string> args, const VerifyOptions& opts,
               const std::string& suite_name, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const Suite suite = parse_suite(suite_name);
    const std::vector<SuiteReport> reports = run_suites(suite, opts);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    out << "command: " << echo(args) << '\n';
    std::ostringstream inputs;
    inputs << suite_name << '/' << opts.trials << '/' << opts.seed << '/' << opts.negative_control;
    out << "input digest: " << digest(inputs.str()) << '\n';
    out << std::setprecision(6);
    bool ok = true;
    const CheckResult* worst = nullptr;
    for (const auto& rep : reports) {
        out << "[" << rep.suite << "]\n";
        for (const auto& c : rep.checks) {
            const char* tag = c.informational ? "INFO" : (c.passed() ? "PASS" : "FAIL");
            out << "  " << tag << "  " << c.name << ": " << c.worst;
            if (!c.informational) out << " (tolerance " << c.tolerance << ")";
            if (c.failures > 0) out << " [" << c.failures << " evaluation failures]";
            out << '\n';
        }
        if (!rep.passed()) {
            ok = false;
            if (!worst) worst = rep.worst_offender();
        }
    }
    out << "wall time: " << std::setprecision(3) << secs << " s\n";
    if (!ok) {
        out << "verify FAILED; worst offender: " << worst->name << " = " << std::setprecision(6)
            << worst->worst << " at " << worst->worst_at << '\n';
        return kExitVerifyFailed;
    }
    out << "verify passed\n";
    return kExitOk;
}

int cmd_example(double gamma1, double gamma2, double k, const std::string& spectrum_path,
                std::size_t steps, std::ostream& out) {
    const four_site::Params p{gamma1, gamma2};
    const auto raw = four_site::four_site_center(p);
    out << std::setprecision(15);
    out << "four-site ring, gamma1=" << gamma1 << " gamma2=" << gamma2 << " k=" << k << '\n';
    const cplx z = four_site::zeta(k, p);
    const auto cf = four_site::closed_form_rt(k, p);
    const auto num = solve_rt_direct_raw(raw.matrix, raw.lead, k);
    out << "  zeta = " << fmt_complex(z) << '\n';
    out << "  closed form: r = " << fmt_complex(cf.r) << "  t = " << fmt_complex(cf.t) << '\n';
    out << "  numeric:     r = " << fmt_complex(num.r) << "  t = " << fmt_complex(num.t) << '\n';
    out << "  T = " << std::norm(num.t) << "  R = " << std::norm(num.r) << '\n';
    out << "  deficit: numeric " << num.deficit << "  closed form "
        << four_site::closed_form_deficit(k, p) << '\n';
    if (gamma1 == gamma2) {
        out << "  T(k) closed form = " << four_site::transmission_T(k, gamma1)
            << "  T'(k) Hermitian side-coupled = " << four_site::transmission_Tprime(k, gamma1)
            << '\n';
        const auto folded = four_site::folded_four_site(p);
        const auto fs = solve_rt_direct(folded.center, folded.lead, k);
        out << "  folded center deficit = " << fs.deficit << "  (tolerance 1e-10)\n";
    }
    if (!spectrum_path.empty()) {
        const auto res = spectrum_raw(raw.matrix, raw.lead, 0.1, std::numbers::pi - 0.1, steps);
        auto f = open_output(spectrum_path);
        write_spectrum_csv(f, res);
        out << "wrote " << res.entries.size() << " points to " << spectrum_path << '\n';
    }
    return kExitOk;
}

int cmd_pt_fold(const std::string& spec_path, const std::string& out_path, std::ostream& out) {
    const PTDocument doc = parse_pt_spec(read_file(spec_path));
    const NetworkSpec net = fold_document(doc);
    auto f = open_output(out_path);
    f << serialize_network_spec(net);
    out << "folded " << spec_path << " -> " << out_path << " (n_a=" << net.center.n_a()
        << ", n_b=" << net.center.n_b() << ")\n";
    return kExitOk;
}

int cmd_wavepacket(const std::string& spec_path, double k0, double sigma, std::size_t length,
                   const std::string& out_path, std::size_t probe_every, std::ostream& out) {
    const NetworkSpec net = parse_network_spec(read_file(spec_path));
    const WavepacketConfig cfg = default_config(length, sigma, k0, net.lead.kappa);
    const WavepacketRun run =
        run_wavepacket(assemble_full_center_matrix(net.center), net.lead, cfg, probe_every);
    if (!out_path.empty()) {
        auto f = open_output(out_path);
        write_probe_csv(f, run.probes);
    }
    const ScatteringSolution sol = solve_rt_direct(net.center, net.lead, k0);
    out << std::setprecision(6);
    out << "wavepacket k0=" << k0 << " sigma=" << sigma << " n=" << length
        << " t_final=" << cfg.t_final << '\n';
    out << "  p_left  = " << run.final.left << "  |r(k0)|^2 = " << std::norm(sol.r)
        << "  (tolerance 2e-2)\n";
    out << "  p_right = " << run.final.right << "  |t(k0)|^2 = " << std::norm(sol.t)
        << "  (tolerance 2e-2)\n";
    out << "  p_center = " << run.final.center << "  total = " << run.final.total() << '\n';
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scattering off non-Hermitian tight-binding centers", "nhscat"};
    app.require_subcommand(1);

    std::string spec_path, out_path, method = "direct", suite = "all", spectrum_path;
    double k = 0.0, k_min = 0.0, k_max = 0.0, gamma1 = 0.0, gamma2 = 0.0, k0 = 0.0, sigma = 15.0;
    double example_k = std::numbers::pi / 3.0;
    std::size_t steps = 101, length = 600, probe_every = 50, example_steps = 201;
    VerifyOptions vopts;

    auto* solve = app.add_subcommand("solve", "Solve r and t at one momentum");
    solve->add_option("--spec", spec_path, "Network spec JSON")->required();
    solve->add_option("--k", k, "Lattice momentum in (0, pi)")->required();
    solve->add_option("--method", method, "formula, direct or both")
        ->check(CLI::IsMember({"formula", "direct", "both"}));

    auto* spec_cmd = app.add_subcommand("spectrum", "Sweep T, R and the deficit over k");
    spec_cmd->add_option("--spec", spec_path)->required();
    spec_cmd->add_option("--k-min", k_min)->required();
    spec_cmd->add_option("--k-max", k_max)->required();
    spec_cmd->add_option("--steps", steps)->required();
    spec_cmd->add_option("--out", out_path, "CSV output")->required();

    auto* verify = app.add_subcommand("verify", "Run the random-ensemble invariant suites");
    verify->add_option("--trials", vopts.trials)->required();
    verify->add_option("--seed", vopts.seed)->required();
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"conservation", "appendix", "ptfold", "all"}));
    verify->add_option("--momenta", vopts.momenta_per_center, "Momenta per center");
    verify->add_flag("--negative-control", vopts.negative_control,
                     "Use Hermitian coupling with unbalanced gain/loss (must fail)");

    auto* example = app.add_subcommand("example", "Built-in exactly solvable models");
    example->require_subcommand(1);
    auto* four = example->add_subcommand("four-site", "Four-site ring with gain and loss");
    four->add_option("--gamma1", gamma1)->required();
    four->add_option("--gamma2", gamma2)->required();
    four->add_option("--k", example_k, "Momentum (default pi/3)");
    four->add_option("--spectrum", spectrum_path, "CSV spectrum on [0.1, pi-0.1]");
    four->add_option("--steps", example_steps, "Spectrum points");

    auto* pt = app.add_subcommand("pt", "PT-symmetric graph tools");
    pt->require_subcommand(1);
    auto* pt_fold = pt->add_subcommand("fold", "Fold a PT spec into a network spec");
    pt_fold->add_option("--spec", spec_path)->required();
    pt_fold->add_option("--out", out_path)->required();

    auto* wave = app.add_subcommand("wavepacket", "Gaussian wavepacket scattering oracle");
    wave->add_option("--spec", spec_path)->required();
    wave->add_option("--k0", k0)->required();
    wave->add_option("--sigma", sigma);
    wave->add_option("--length", length, "Sites per lead");
    wave->add_option("--out", out_path, "Probe CSV");
    wave->add_option("--probe-every", probe_every, "Integrator steps between probes");

    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();  // program name
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*solve) return cmd_solve(spec_path, k, method, out);
        if (*spec_cmd) return cmd_spectrum(spec_path, k_min, k_max, steps, out_path, out);
        if (*verify) return cmd_verify(args, vopts, suite, out);
        if (*four) return cmd_example(gamma1, gamma2, example_k, spectrum_path, example_steps, out);
        if (*pt_fold) return cmd_pt_fold(spec_path, out_path, out);
        if (*wave) return cmd_wavepacket(spec_path, k0, sigma, length, out_path, probe_every, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace nhs::cli
