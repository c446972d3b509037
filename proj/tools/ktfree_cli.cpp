#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ktfree/exact_solver.hpp"
#include "ktfree/graph.hpp"
#include "ktfree/kernelizer.hpp"
#include "ktfree/random.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
    int t = 3;
    int k = 0;
    std::string input;
    std::string output;
    std::string trace_path;
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    long long samples = 0;
    bool inject_fault = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << contents;
}

int cmd_kernelize(const RunConfig& cfg) {
    const ktfree::Graph g = ktfree::parse_graph(read_file(cfg.input));
    const ktfree::KernelResult result = ktfree::kernelize(g, cfg.k, cfg.t);
    if (!cfg.output.empty()) write_file(cfg.output, ktfree::serialize_graph(result.kernel_graph));
    if (!cfg.trace_path.empty()) write_file(cfg.trace_path, ktfree::trace_to_json(result));
    std::cout << "kernel: " << result.kernel_graph.vertex_count() << " vertices, "
              << result.kernel_graph.edge_count() << " edges, family "
              << result.reduced_family.size() << ", budget " << result.kernel_budget << "\n";
    return kExitOk;
}

int cmd_solve(const RunConfig& cfg) {
    const ktfree::Graph g = ktfree::parse_graph(read_file(cfg.input));
    const ktfree::Verdict verdict = ktfree::exact_solve({g, cfg.k, cfg.t});
    if (!verdict.yes) {
        std::cout << "no\n";
        return kExitOk;
    }
    std::cout << "yes\n";
    for (const ktfree::Edge& e : *verdict.witness)
        std::cout << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return kExitOk;
}

int cmd_gen(const RunConfig& cfg) {
    ktfree::Rng rng(cfg.seed);
    const ktfree::Graph g = ktfree::random_graph(cfg.n, cfg.p, rng);
    const std::string text = ktfree::serialize_graph(g);
    if (cfg.output.empty())
        std::cout << text;
    else
        write_file(cfg.output, text);
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    ktfree::Rng rng(cfg.seed);
    long long agree = 0;
    bool dumped = false;
    for (long long i = 0; i < cfg.samples; ++i) {
        const int ni = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n) + 1));
        const int ki = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.k) + 1));
        const ktfree::Graph g = ktfree::random_graph(ni, cfg.p, rng);
        ktfree::EquivalenceReport report = ktfree::verify_equivalence(g, ki, cfg.t);
        if (cfg.inject_fault) {
            report.kernel.yes = !report.kernel.yes;
            report.agree = report.original.yes == report.kernel.yes;
        }
        if (report.agree) {
            ++agree;
            continue;
        }
        if (!dumped) {
            dumped = true;
            const std::string prefix = cfg.output.empty() ? "verify_failure_" : cfg.output;
            std::ostringstream inst;
            inst << "c t " << cfg.t << "\nc k " << ki << "\n" << ktfree::serialize_graph(g);
            write_file(prefix + "instance.graph", inst.str());
            write_file(prefix + "trace.json", ktfree::trace_to_json(report.kernelization));
            std::cerr << "disagreement at sample " << i << " (n=" << ni << ", k=" << ki
                      << "): original=" << (report.original.yes ? "yes" : "no")
                      << ", kernel=" << (report.kernel.yes ? "yes" : "no") << "; dumped "
                      << prefix << "instance.graph and " << prefix << "trace.json\n";
        }
    }
    std::cout << agree << "/" << cfg.samples << " agree\n";
    return agree == cfg.samples ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K_t-free edge deletion: kernelization and exact solving"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_tk = [&cfg](CLI::App* cmd) {
        cmd->add_option("--t", cfg.t, "forbidden clique size (>= 3)")->required();
        cmd->add_option("--k", cfg.k, "edge deletion budget (>= 0)")->required();
    };

    CLI::App* kern = app.add_subcommand("kernelize", "reduce an instance to an equivalent kernel");
    add_tk(kern);
    kern->add_option("-i,--input", cfg.input, "input graph file")->required();
    kern->add_option("-o,--output", cfg.output, "kernel graph output file");
    kern->add_option("--trace", cfg.trace_path, "write the reduction trace (JSON)");

    CLI::App* solve = app.add_subcommand("solve", "decide an instance by branching");
    add_tk(solve);
    solve->add_option("-i,--input", cfg.input, "input graph file")->required();

    CLI::App* verify = app.add_subcommand("verify", "cross-check kernel against the exact solver");
    add_tk(verify);
    verify->add_option("--n", cfg.n, "max vertices per sampled graph")->required();
    verify->add_option("--p", cfg.p, "edge probability")->required();
    verify->add_option("--seed", cfg.seed, "RNG seed")->required();
    verify->add_option("--samples", cfg.samples, "number of sampled instances")->required();
    verify->add_option("-o,--output", cfg.output, "prefix for failure dumps");
    verify->add_flag("--inject-fault", cfg.inject_fault)->group("");  // test hook

    CLI::App* gen = app.add_subcommand("gen", "generate a seeded G(n,p) graph");
    gen->add_option("--n", cfg.n, "number of vertices")->required();
    gen->add_option("--p", cfg.p, "edge probability")->required();
    gen->add_option("--seed", cfg.seed, "RNG seed")->required();
    gen->add_option("-o,--output", cfg.output, "output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*kern || *solve || *verify) {
            if (cfg.t < 3) throw std::invalid_argument("--t must be >= 3");
            if (cfg.k < 0) throw std::invalid_argument("--k must be >= 0");
        }
        if (*verify || *gen) {
            if (cfg.n < 0) throw std::invalid_argument("--n must be >= 0");
            if (cfg.p < 0.0 || cfg.p > 1.0) throw std::invalid_argument("--p must be in [0, 1]");
        }
        if (*verify && cfg.samples < 0) throw std::invalid_argument("--samples must be >= 0");

        if (*kern) return cmd_kernelize(cfg);
        if (*solve) return cmd_solve(cfg);
        if (*verify) return cmd_verify(cfg);
        return cmd_gen(cfg);
    } catch (const ktfree::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
