#include "hsw/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hsw/coherence.hpp"
#include "hsw/dynamics.hpp"
#include "hsw/format.hpp"
#include "hsw/graph.hpp"
#include "hsw/hsw.hpp"
#include "hsw/metrics.hpp"
#include "hsw/rng.hpp"
#include "hsw/spectrum.hpp"

namespace hsw::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct GraphChoice {
    std::string family = "hsw";
    int r = 2;
    int g = 2;
    int n = 0;

    bool is_hsw() const { return family == "hsw"; }

    Graph build() const {
        if (is_hsw()) return build_hsw(r, g).graph;
        if (n < 2) throw CLI::ValidationError("--n", "baseline families need --n >= 2");
        return build_baseline(family_from_string(family), n);
    }

    std::string label() const {
        if (is_hsw()) return "M_" + std::to_string(g) + "^" + std::to_string(r);
        return family + " n=" + std::to_string(n);
    }
};

void add_graph_flags(CLI::App* cmd, GraphChoice& gc) {
    cmd->add_option("--family", gc.family, "path|cycle|star|complete|hsw")
        ->check(CLI::IsMember({"path", "cycle", "star", "complete", "hsw"}));
    cmd->add_option("--r", gc.r, "branching factor of M_g^r");
    cmd->add_option("--g", gc.g, "generation of M_g^r");
    cmd->add_option("--n", gc.n, "vertex count for baseline families");
}

// Writes `text` to `path`, or to `out` when no path was given. Returns the
// artifact name for the summary line.
std::string emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return "stdout";
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
    return path;
}

bool spectra_match(const SpectrumResult& a, const SpectrumResult& b, double tol) {
    if (a.n != b.n || a.pairs.size() != b.pairs.size()) return false;
    for (size_t i = 0; i < a.pairs.size(); ++i) {
        if (std::fabs(a.pairs[i].first - b.pairs[i].first) > tol) return false;
        if (a.pairs[i].second != b.pairs[i].second) return false;
    }
    return true;
}

// Table-2 closed forms for the elementary families. The cycle's largest
// eigenvalue depends on parity: 4 when n is even, 2-2cos((n-1)pi/n) when odd.
void baseline_extremes(Family f, int n, double& lambda2, double& lambdaN) {
    const double pi = std::numbers::pi;
    switch (f) {
        case Family::path:
            lambda2 = 2.0 - 2.0 * std::cos(pi / n);
            lambdaN = 2.0 - 2.0 * std::cos((n - 1.0) * pi / n);
            break;
        case Family::cycle:
            lambda2 = 2.0 - 2.0 * std::cos(2.0 * pi / n);
            lambdaN = n % 2 == 0 ? 4.0 : 2.0 - 2.0 * std::cos((n - 1.0) * pi / n);
            break;
        case Family::star:
            lambda2 = 1.0;
            lambdaN = n;
            break;
        case Family::complete:
            lambda2 = n;
            lambdaN = n;
            break;
    }
}

int cmd_generate(const GraphChoice& gc, const std::string& out_path, const std::string& format,
                 std::ostream& out, std::ostream& err) {
    if (!gc.is_hsw()) throw CLI::ValidationError("generate", "generate builds M_g^r; use --r/--g");
    HierarchicalNetwork net = build_hsw(gc.r, gc.g);
    std::ostringstream body;
    if (format == "json")
        write_network_json(net, body);
    else
        write_edge_list(net.graph, body);
    std::string artifact = emit(body.str(), out_path, out);
    err << "generated " << gc.label() << " (n=" << net.n() << ", m=" << net.graph.m() << ") -> "
        << artifact << "\n";
    return kExitOk;
}

int cmd_spectrum(const GraphChoice& gc, bool verify, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
    std::ostringstream body;
    if (gc.is_hsw()) {
        SpectrumResult closed = closed_form_spectrum(gc.r, gc.g);
        if (verify) {
            if (closed.n > kDenseLimit) throw CLI::ValidationError("--verify", "graph too large for the numeric oracle");
            SpectrumResult numeric = numeric_spectrum(build_hsw(gc.r, gc.g).graph);
            if (!spectra_match(closed, numeric, 1e-8)) {
                err << "verification FAILED: closed form and numeric spectrum disagree\n";
                return kExitVerifyFailed;
            }
        }
        write_spectrum_json(closed, body);
    } else {
        if (verify) throw CLI::ValidationError("--verify", "--verify applies to the hsw family");
        write_spectrum_json(numeric_spectrum(gc.build()), body);
    }
    std::string artifact = emit(body.str(), out_path, out);
    err << "spectrum of " << gc.label() << (verify ? " (verified against numeric oracle)" : "")
        << " -> " << artifact << "\n";
    return kExitOk;
}

int cmd_coherence(const GraphChoice& gc, int order, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
    SpectrumResult spec = gc.is_hsw() ? closed_form_spectrum(gc.r, gc.g)
                                      : numeric_spectrum(gc.build());
    double h1 = coherence_from_spectrum(spec, 1);
    double h2 = coherence_from_spectrum(spec, 2);
    if (gc.is_hsw()) {
        // closed form and spectral sum must agree; report the closed form
        double c1 = h1_closed(gc.r, gc.g), c2 = h2_closed(gc.r, gc.g);
        if (std::fabs(c1 - h1) > 1e-10 * h1 || std::fabs(c2 - h2) > 1e-10 * h2) {
            err << "internal check FAILED: closed-form coherence deviates from spectral sum\n";
            return kExitVerifyFailed;
        }
        h1 = c1;
        h2 = c2;
    }
    std::ostringstream body;
    body << "{\"graph\": \"" << gc.label() << "\", \"n\": " << spec.n;
    if (order == 0 || order == 1) body << ", \"h1\": " << fmt17(h1);
    if (order == 0 || order == 2) body << ", \"h2\": " << fmt17(h2);
    body << ", \"kirchhoff\": " << fmt17(kirchhoff_index(spec)) << "}\n";
    std::string artifact = emit(body.str(), out_path, out);
    err << "coherence of " << gc.label() << " -> " << artifact << "\n";
    return kExitOk;
}

int cmd_bounds(const GraphChoice& gc, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
    Graph graph = gc.build();
    if (graph.n > kDenseLimit) throw CLI::ValidationError("bounds", "graph too large for dense spectra");
    SpectrumResult spec = numeric_spectrum(graph);
    std::vector<double> theta = transition_spectrum(graph);
    GraphMetrics metrics = compute_metrics(graph);
    CoherenceReport rep = bound_report(graph, spec, theta, metrics);

    std::ostringstream body;
    body << "{\"graph\": \"" << gc.label() << "\", \"n\": " << graph.n
         << ", \"h1\": " << fmt17(rep.h1) << ", \"h2\": " << fmt17(rep.h2)
         << ", \"kirchhoff\": " << fmt17(rep.kirchhoff)
         << ", \"lower_bound_k\": " << fmt17(rep.lower_bound_k)
         << ", \"upper_bound_mu\": " << fmt17(rep.upper_bound_mu)
         << ", \"transition_lower\": " << fmt17(rep.transition_lower)
         << ", \"transition_upper\": " << fmt17(rep.transition_upper)
         << ", \"degree_bounds_hold\": " << (rep.degree_bounds_hold ? "true" : "false")
         << ", \"transition_bounds_hold\": " << (rep.transition_bounds_hold ? "true" : "false")
         << ", \"kirchhoff_identity_holds\": " << (rep.kirchhoff_identity_holds ? "true" : "false")
         << ", \"fiedler_chain_applicable\": " << (rep.fiedler_chain_applicable ? "true" : "false")
         << ", \"fiedler_chain_holds\": " << (rep.fiedler_chain_holds ? "true" : "false")
         << ", \"all_hold\": " << (rep.all_hold ? "true" : "false") << "}\n";
    std::string artifact = emit(body.str(), out_path, out);
    err << "bounds on " << gc.label() << (rep.all_hold ? " hold" : " FAILED") << " -> "
        << artifact << "\n";
    return rep.all_hold ? kExitOk : kExitVerifyFailed;
}

int cmd_scaling(int r, int g_max, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
    std::vector<ScalingRow> rows = scaling_table(r, g_max);
    std::ostringstream body;
    write_scaling_csv(r, rows, body);
    std::string artifact = emit(body.str(), out_path, out);
    err << "scaling table r=" << r << " g=1.." << g_max << " -> " << artifact << "\n";
    return kExitOk;
}

int cmd_compare(int n, const std::string& out_path, std::ostream& out, std::ostream& err) {
    std::ostringstream body;
    body << "family,n,lambda2_closed,lambdaN_closed,lambda2_numeric,lambdaN_numeric\n";
    bool all_match = true;
    for (Family f : {Family::path, Family::cycle, Family::star, Family::complete}) {
        double l2c, lnc;
        baseline_extremes(f, n, l2c, lnc);
        SpectralExtremes ex = extremes(numeric_spectrum(build_baseline(f, n)));
        all_match = all_match && std::fabs(l2c - ex.lambda2) <= 1e-9 &&
                    std::fabs(lnc - ex.lambdaN) <= 1e-9;
        body << family_name(f) << "," << n << "," << fmt17(l2c) << "," << fmt17(lnc) << ","
             << fmt17(ex.lambda2) << "," << fmt17(ex.lambdaN) << "\n";
    }
    std::string artifact = emit(body.str(), out_path, out);
    err << "baseline extremes at n=" << n << (all_match ? " match closed forms" : " MISMATCH")
        << " -> " << artifact << "\n";
    return all_match ? kExitOk : kExitVerifyFailed;
}

struct SimFlags {
    std::string protocol;
    double eps = 0.0;
    double dt = 0.0;
    long long steps = 0;
    long long burnin = -1;
    int trials = 200;
    std::uint64_t seed = 0;
};

std::vector<double> seeded_initial_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng = stream_rng(seed, 0x0578a7e);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> x0(n);
    for (double& v : x0) v = uni(rng);
    return x0;
}

int cmd_simulate(const GraphChoice& gc, SimFlags sf, const std::string& out_path,
                 const std::string& format, std::ostream& out, std::ostream& err) {
    Graph graph = gc.build();
    double lambdaN = stability_lambda_max(graph);
    double lambda2 = stability_lambda2(graph);

    SimConfig cfg;
    cfg.seed = sf.seed;
    cfg.trials = sf.trials;
    if (sf.dt > 0.0) {
        cfg.dt = sf.dt;
    } else if (sf.protocol == "delay" && sf.eps > 0.0) {
        // keep eps on the step grid and dt * lambda_N below 1
        long long slots = std::max<long long>(64, static_cast<long long>(std::ceil(sf.eps * lambdaN)));
        cfg.dt = sf.eps / static_cast<double>(slots);
    } else {
        cfg.dt = 0.1 / lambdaN;
    }
    cfg.delay = sf.eps;
    long long default_burn = static_cast<long long>(std::ceil(20.0 / lambda2 / cfg.dt));
    cfg.burn_in = sf.burnin >= 0 ? sf.burnin : default_burn;
    cfg.steps = sf.steps > 0
                    ? sf.steps
                    : cfg.burn_in + static_cast<long long>(std::ceil(100.0 / lambda2 / cfg.dt));
    cfg.sample_stride = std::max<long long>(1, cfg.steps / 1000);

    std::ostringstream summary;
    std::ostringstream trace_csv;
    bool pass = true;

    if (sf.protocol == "noiseless" || sf.protocol == "delay") {
        std::vector<double> x0 = seeded_initial_state(graph.n, cfg.seed);
        SimulationTrace trace = sf.protocol == "delay" ? simulate_delay(graph, x0, cfg)
                                                       : simulate_noiseless(graph, x0, cfg);
        trace_csv << "t";
        for (int i = 0; i < graph.n; ++i) trace_csv << ",x_" << i;
        trace_csv << ",disagreement\n";
        for (size_t s = 0; s < trace.times.size(); ++s) {
            trace_csv << fmt17(trace.times[s]);
            for (double v : trace.states[s]) trace_csv << "," << fmt17(v);
            trace_csv << "," << fmt17(trace.disagreement[s]) << "\n";
        }
        summary << "{\"protocol\": \"" << sf.protocol << "\", \"graph\": \"" << gc.label()
                << "\", \"n\": " << graph.n << ", \"dt\": " << fmt17(cfg.dt)
                << ", \"steps\": " << cfg.steps << ", \"steps_run\": " << trace.steps_run
                << ", \"seed\": " << cfg.seed;
        if (sf.protocol == "delay")
            summary << ", \"eps\": " << fmt17(cfg.delay)
                    << ", \"eps_max\": " << fmt17(std::numbers::pi / (2.0 * lambdaN));
        summary << ", \"converged\": " << (trace.converged ? "true" : "false")
                << ", \"diverged\": " << (trace.diverged ? "true" : "false")
                << ", \"final_disagreement\": " << fmt17(trace.final_disagreement)
                << ", \"mean_drift_max\": " << fmt17(trace.mean_drift_max) << "}\n";
    } else if (sf.protocol == "noise1" || sf.protocol == "noise2") {
        int order = sf.protocol == "noise1" ? 1 : 2;
        SpectrumResult spec = gc.is_hsw() ? closed_form_spectrum(gc.r, gc.g)
                                          : numeric_spectrum(graph);
        double target = coherence_from_spectrum(spec, order);
        NoiseEstimate est = order == 1 ? estimate_h1(graph, cfg) : estimate_h2(graph, cfg);
        pass = std::fabs(est.estimate - target) <=
               std::max(3.0 * est.stderr_, 0.15 * std::fabs(target));
        summary << "{\"protocol\": \"" << sf.protocol << "\", \"graph\": \"" << gc.label()
                << "\", \"n\": " << graph.n << ", \"dt\": " << fmt17(cfg.dt)
                << ", \"steps\": " << cfg.steps << ", \"burnin\": " << cfg.burn_in
                << ", \"trials\": " << cfg.trials << ", \"seed\": " << cfg.seed
                << ", \"estimate\": " << fmt17(est.estimate)
                << ", \"stderr\": " << fmt17(est.stderr_)
                << ", \"target\": " << fmt17(target)
                << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
    } else {
        throw CLI::ValidationError("--protocol", "unknown protocol " + sf.protocol);
    }

    out << summary.str();
    if (!out_path.empty()) {
        bool want_csv = format == "csv" ||
                        (format.empty() && (sf.protocol == "noiseless" || sf.protocol == "delay"));
        emit(want_csv && trace_csv.tellp() > 0 ? trace_csv.str() : summary.str(), out_path, out);
        err << "simulate " << sf.protocol << " on " << gc.label() << " -> " << out_path << "\n";
    } else {
        err << "simulate " << sf.protocol << " on " << gc.label() << " done\n";
    }
    return pass ? kExitOk : kExitVerifyFailed;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hierarchical small-world network toolkit"};
    app.require_subcommand(1);

    GraphChoice gc;
    std::string out_path;
    std::string format;
    bool verify = false;
    int order = 0;
    int compare_n = 0;
    SimFlags sf;

    CLI::App* generate = app.add_subcommand("generate", "build M_g^r and write its edge list");
    add_graph_flags(generate, gc);
    generate->add_option("--out", out_path, "output file (default stdout)");
    generate->add_option("--format", format, "edges|json")
        ->check(CLI::IsMember({"edges", "json"}));

    CLI::App* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum (closed form for hsw)");
    add_graph_flags(spectrum, gc);
    spectrum->add_flag("--verify", verify, "cross-check closed form against the numeric oracle");
    spectrum->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* coherence = app.add_subcommand("coherence", "first/second-order network coherence");
    add_graph_flags(coherence, gc);
    coherence->add_option("--order", order, "1 or 2 (default both)")->check(CLI::Range(1, 2));
    coherence->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* bounds = app.add_subcommand("bounds", "coherence bound report (exit 1 when violated)");
    add_graph_flags(bounds, gc);
    bounds->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* scaling = app.add_subcommand("scaling", "closed-form coherence scaling table (CSV)");
    scaling->add_option("--r", gc.r, "branching factor");
    scaling->add_option("--g", gc.g, "largest generation")->required();
    scaling->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* simulate = app.add_subcommand("simulate", "consensus protocol simulation");
    add_graph_flags(simulate, gc);
    simulate->add_option("--protocol", sf.protocol, "noiseless|delay|noise1|noise2")
        ->required()
        ->check(CLI::IsMember({"noiseless", "delay", "noise1", "noise2"}));
    simulate->add_option("--eps", sf.eps, "communication delay (delay protocol)");
    simulate->add_option("--dt", sf.dt, "step size (default 0.1/lambda_N)");
    simulate->add_option("--steps", sf.steps, "step count");
    simulate->add_option("--burnin", sf.burnin, "steps dropped before statistics");
    simulate->add_option("--trials", sf.trials, "noise realizations");
    simulate->add_option("--seed", sf.seed, "master RNG seed");
    simulate->add_option("--out", out_path, "artifact file");
    simulate->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* compare = app.add_subcommand("compare", "baseline lambda_2/lambda_N table");
    compare->add_option("--n", compare_n, "vertex count")->required();
    compare->add_option("--out", out_path, "output file (default stdout)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(gc, out_path, format, out, err);
        if (spectrum->parsed()) return cmd_spectrum(gc, verify, out_path, out, err);
        if (coherence->parsed()) return cmd_coherence(gc, order, out_path, out, err);
        if (bounds->parsed()) return cmd_bounds(gc, out_path, out, err);
        if (scaling->parsed()) return cmd_scaling(gc.r, gc.g, out_path, out, err);
        if (simulate->parsed()) return cmd_simulate(gc, sf, out_path, format, out, err);
        if (compare->parsed()) return cmd_compare(compare_n, out_path, out, err);
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    err << "usage error: no subcommand\n";
    return kExitUsage;
}

} // namespace hsw::cli
