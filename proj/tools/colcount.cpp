#include "colcount/error.hpp"
#include "colcount/estimator.hpp"
#include "colcount/graph.hpp"
#include "colcount/oracles.hpp"
#include "colcount/percolation.hpp"
#include "colcount/report.hpp"
#include "colcount/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace colcount;

namespace {

enum Exit : int {
    kOk = 0,
    kDomainFailure = 1,
    kCriterionFailure = 2,
    kBudget = 3,
    kIoOrParse = 4,
};

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::FallbackInfeasible:
    case ErrorKind::InfeasibleSize:
        return kBudget;
    case ErrorKind::Io:
    case ErrorKind::Parse:
        return kIoOrParse;
    default:
        return kDomainFailure;
    }
}

void emit(const Json& j, const std::string& out_path)
{
    const std::string text = dump(j);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text))
        throw Error(ErrorKind::Io, "cannot write " + out_path);
}

template <class Report>
void emit_csv(const Report& rep, const std::string& path)
{
    if (path.empty())
        return;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::Io, "cannot write " + path);
    write_terms_csv(out, rep);
    if (!out)
        throw Error(ErrorKind::Io, "cannot write " + path);
}

struct Common {
    std::string graph_path;
    std::string out_path;
    int k = 3;
    unsigned threads = 1;
};

void add_common(CLI::App* cmd, Common& c, bool needs_k = true)
{
    cmd->add_option("graph", c.graph_path, "Edge-list file")->required();
    if (needs_k)
        cmd->add_option("-k,--colours", c.k, "Number of colours")->required()->check(CLI::Range(2, kMaxColours));
    cmd->add_option("-o,--out", c.out_path, "Write JSON here instead of standard output");
    cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
}

struct EstimatorFlags {
    std::optional<int> t, ell;
    std::optional<double> d;
    std::uint64_t budget = kDefaultEliminationBudget;
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
    double r_exponent = 0.3;
};

void add_estimator_flags(CLI::App* cmd, EstimatorFlags& f)
{
    cmd->add_option("-t,--radius", f.t, "Truncation radius")->check(CLI::PositiveNumber);
    cmd->add_option("--ell", f.ell, "Short-cycle length")->check(CLI::NonNegativeNumber);
    cmd->add_option("-d,--degree", f.d, "Average-degree parameter d")->check(CLI::NonNegativeNumber);
    cmd->add_option("--budget", f.budget, "Elimination table operations allowed per component")->check(CLI::PositiveNumber);
    cmd->add_option("--enum-budget", f.enumeration_budget, "Brute-force enumeration budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--r-exponent", f.r_exponent, "Fallback when |R| > n^exponent")->check(CLI::NonNegativeNumber);
}

EstimatorConfig to_config(const EstimatorFlags& f, unsigned threads)
{
    EstimatorConfig cfg;
    cfg.t = f.t;
    cfg.ell = f.ell;
    cfg.d = f.d;
    cfg.budget = f.budget;
    cfg.enumeration_budget = f.enumeration_budget;
    cfg.r_threshold_exponent = f.r_exponent;
    cfg.threads = threads;
    return cfg;
}

void require_vertex(const Graph& g, Vertex v, const char* name)
{
    if (v < 0 || v >= g.n())
        throw Error(ErrorKind::InvalidParameter, std::string(name) + " must lie in [0, " + std::to_string(g.n()) + ")");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Approximate and exact counting of proper graph colourings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "colcount 1.0.0");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate G(n, d/n) as an edge list");
    int gen_n = 0;
    double gen_d = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("-n,--vertices", gen_n, "Number of vertices")->required()->check(CLI::PositiveNumber);
    gen->add_option("-d,--degree", gen_d, "Expected average degree")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", gen_seed, "Random seed")->required();
    gen->add_option("-o,--out", gen_out, "Output edge-list file")->required();

    // count
    auto* count = app.add_subcommand("count", "Estimate ln Z / n with the counting schema");
    Common count_c;
    EstimatorFlags count_f;
    bool count_exact = false, count_timing = false;
    std::string count_csv;
    add_common(count, count_c);
    add_estimator_flags(count, count_f);
    count->add_flag("--exact", count_exact, "Also count exactly by enumeration when feasible");
    count->add_flag("--timing", count_timing, "Include wall-clock time in the report");
    count->add_option("--csv", count_csv, "Write the per-term table as CSV");

    // exact
    auto* exact = app.add_subcommand("exact", "Exact colouring count");
    Common exact_c;
    std::string exact_method = "auto";
    std::uint64_t exact_budget = kDefaultEnumerationBudget;
    add_common(exact, exact_c);
    exact->add_option("--method", exact_method, "brute, poly or auto")
        ->check(CLI::IsMember({"auto", "brute", "poly"}));
    exact->add_option("--budget", exact_budget, "Enumeration or recursion budget")->check(CLI::PositiveNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "Check S(n, d) membership and the concentration criterion");
    Common verify_c;
    double verify_d = 0.0;
    VerifierConfig verify_cfg;
    verify_c.k = 3;
    add_common(verify, verify_c);
    verify->add_option("-d,--degree", verify_d, "Average-degree parameter d (> 1)")->required();
    verify->add_option("--epsilon1", verify_cfg.epsilon1, "Per-edge threshold exponent")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--ell", verify_cfg.ell, "Short-cycle length")->check(CLI::NonNegativeNumber);
    verify->add_option("--path-cap", verify_cfg.path_cap, "Maximum paths enumerated per edge")
        ->check(CLI::PositiveNumber);
    verify->add_option("--enum-budget", verify_cfg.enumeration_budget, "Brute-force enumeration budget")
        ->check(CLI::PositiveNumber);

    // diag
    auto* diag = app.add_subcommand("diag", "Exact and sampled diagnostics");
    diag->require_subcommand(1);

    auto* tv = diag->add_subcommand("tv", "Conditional total variation against the percolation bound");
    Common tv_c;
    Vertex tv_x = 0;
    std::vector<Vertex> tv_lambda;
    std::optional<int> tv_sigma, tv_eta;
    add_common(tv, tv_c);
    tv->add_option("--x", tv_x, "Conditioned vertex")->required();
    tv->add_option("--lambda", tv_lambda, "Comma-separated observed vertices")->delimiter(',');
    tv->add_option("--sigma", tv_sigma, "First colour of the pair");
    tv->add_option("--eta", tv_eta, "Second colour of the pair");

    auto* perc = diag->add_subcommand("perc", "Disagreement percolation probability");
    Common perc_c;
    Vertex perc_root = 0;
    std::vector<Vertex> perc_target;
    std::string perc_method = "exact";
    std::uint64_t perc_samples = 1'000'000;
    std::optional<std::uint64_t> perc_seed;
    int perc_cap = kDefaultExactPercolationCap;
    add_common(perc, perc_c);
    perc->add_option("--root", perc_root, "Root vertex")->required();
    perc->add_option("--target", perc_target, "Comma-separated target vertices")->required()->delimiter(',');
    perc->add_option("--method", perc_method, "exact, mc or both")->check(CLI::IsMember({"exact", "mc", "both"}));
    perc->add_option("--samples", perc_samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    perc->add_option("--seed", perc_seed, "Random seed (required for mc)");
    perc->add_option("--cap", perc_cap, "Maximum free vertices for exact enumeration")->check(CLI::PositiveNumber);

    auto* decay = diag->add_subcommand("decay", "Exact decay profile around a vertex");
    Common decay_c;
    Vertex decay_x = 0;
    int decay_t_max = 3;
    std::uint64_t decay_budget = kDefaultEnumerationBudget;
    add_common(decay, decay_c);
    decay->add_option("--x", decay_x, "Centre vertex")->required();
    decay->add_option("--t-max", decay_t_max, "Largest sphere radius")->check(CLI::PositiveNumber);
    decay->add_option("--budget", decay_budget, "Enumeration budget")->check(CLI::PositiveNumber);

    auto* errdecomp = diag->add_subcommand("errdecomp", "Per-term error against exact marginals");
    Common err_c;
    EstimatorFlags err_f;
    std::string err_csv;
    add_common(errdecomp, err_c);
    add_estimator_flags(errdecomp, err_f);
    errdecomp->add_option("--csv", err_csv, "Write the per-term table as CSV");

    auto* glauber = diag->add_subcommand("glauber", "Glauber-dynamics estimate of a disagreement probability");
    Common gl_c;
    Vertex gl_v = 0, gl_u = 1;
    std::uint64_t gl_sweeps = 100'000, gl_burn = 1'000, gl_seed = 0;
    bool gl_exact = false;
    add_common(glauber, gl_c);
    glauber->add_option("--v", gl_v, "First vertex")->required();
    glauber->add_option("--u", gl_u, "Second vertex")->required();
    glauber->add_option("--sweeps", gl_sweeps, "Sweeps averaged after burn-in")->check(CLI::PositiveNumber);
    glauber->add_option("--burn-in", gl_burn, "Sweeps discarded first");
    glauber->add_option("--seed", gl_seed, "Random seed")->required();
    glauber->add_flag("--exact", gl_exact, "Also compute the exact probability by enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kIoOrParse;
    }

    try {
        if (*gen) {
            const Graph g = generate_gnp(gen_n, gen_d, gen_seed);
            save_edge_list(gen_out, g);
            emit(gen_json(g, gen_d, gen_seed), "");
            return kOk;
        }

        if (*count) {
            const Graph g = load_edge_list(count_c.graph_path);
            const auto rep = estimate_log_z(g, count_c.k, to_config(count_f, count_c.threads));
            Json j = estimate_json(rep, count_timing);
            if (count_exact) {
                if (brute_force_feasible(g, count_c.k, count_f.enumeration_budget)) {
                    const BigInt z = brute_force_count(g, count_c.k, count_f.enumeration_budget);
                    const double log_z = log_big(z);
                    const double psi_exact = g.n() > 0 ? log_z / g.n() : 0.0;
                    j["exact"] = {{"count", to_decimal(z)},
                                  {"log_z", log_z},
                                  {"psi", psi_exact},
                                  {"gap", std::abs(rep.psi - psi_exact)}};
                } else {
                    j["exact"] = nullptr;
                }
            }
            emit_csv(rep, count_csv);
            emit(j, count_c.out_path);
            return kOk;
        }

        if (*exact) {
            const Graph g = load_edge_list(exact_c.graph_path);
            std::optional<ChromaticPolynomial> poly;
            BigInt z;
            std::string method = exact_method;
            if (method == "auto")
                method = brute_force_feasible(g, exact_c.k, exact_budget) ? "brute" : "poly";
            if (method == "brute") {
                if (!brute_force_feasible(g, exact_c.k, exact_budget))
                    throw Error(ErrorKind::InfeasibleSize, "brute-force enumeration exceeds --budget " +
                                                               std::to_string(exact_budget));
                z = brute_force_count(g, exact_c.k, exact_budget);
            } else {
                poly = chromatic_polynomial(g, exact_budget);
                z = poly->evaluate(exact_c.k);
            }
            emit(exact_count_json(g, exact_c.k, z, method == "brute" ? "brute-force" : "chromatic-polynomial", poly),
                 exact_c.out_path);
            return kOk;
        }

        if (*verify) {
            const Graph g = load_edge_list(verify_c.graph_path);
            verify_cfg.threads = verify_c.threads;
            const auto rep = verify_concentration(g, verify_d, verify_c.k, verify_cfg);
            emit(verifier_json(rep), verify_c.out_path);
            if (rep.verdict)
                return kOk;
            if (rep.reason == "not-in-S")
                return kDomainFailure;
            if (rep.reason == "criterion-failed")
                return kCriterionFailure;
            return kBudget;
        }

        if (*tv) {
            const Graph g = load_edge_list(tv_c.graph_path);
            require_vertex(g, tv_x, "--x");
            for (Vertex v : tv_lambda)
                require_vertex(g, v, "--lambda");
            if (tv_sigma.has_value() != tv_eta.has_value())
                throw Error(ErrorKind::InvalidParameter, "--sigma and --eta must be given together");
            std::optional<std::pair<int, int>> pair;
            std::optional<double> value;
            if (tv_sigma) {
                pair = {*tv_sigma, *tv_eta};
                value = exact_tv(g, tv_x, *tv_sigma, *tv_eta, tv_lambda, tv_c.k);
            }
            const auto check = tv_vs_percolation_check(g, tv_x, tv_lambda, tv_c.k);
            emit(tv_json(tv_x, tv_lambda, tv_c.k, pair, value, check), tv_c.out_path);
            return check.holds ? kOk : kCriterionFailure;
        }

        if (*perc) {
            const Graph g = load_edge_list(perc_c.graph_path);
            require_vertex(g, perc_root, "--root");
            for (Vertex v : perc_target)
                require_vertex(g, v, "--target");
            const auto cfg = DisagreementConfig::from_degrees(g, perc_c.k, perc_root);
            std::optional<double> exact_value;
            std::optional<McEstimate> mc;
            if (perc_method != "mc")
                exact_value = percolation_probability_exact(g, cfg, perc_target, perc_cap);
            if (perc_method != "exact") {
                if (!perc_seed)
                    throw Error(ErrorKind::InvalidParameter, "--seed is required for Monte Carlo");
                mc = percolation_probability_mc(g, cfg, perc_target, perc_samples, *perc_seed, perc_c.threads);
            }
            emit(perc_json(cfg, perc_target, exact_value, mc, mc ? perc_seed : std::nullopt), perc_c.out_path);
            return kOk;
        }

        if (*decay) {
            const Graph g = load_edge_list(decay_c.graph_path);
            require_vertex(g, decay_x, "--x");
            emit(decay_json(decay_x, decay_c.k, decay_profile(g, decay_x, decay_c.k, decay_t_max, decay_budget)),
                 decay_c.out_path);
            return kOk;
        }

        if (*errdecomp) {
            const Graph g = load_edge_list(err_c.graph_path);
            const auto rep = error_decomposition(g, err_c.k, to_config(err_f, err_c.threads));
            emit_csv(rep, err_csv);
            emit(error_decomposition_json(rep), err_c.out_path);
            return rep.bound_holds ? kOk : kCriterionFailure;
        }

        if (*glauber) {
            const Graph g = load_edge_list(gl_c.graph_path);
            require_vertex(g, gl_v, "--v");
            require_vertex(g, gl_u, "--u");
            const auto est = glauber_disagreement(g, gl_c.k, gl_v, gl_u, gl_sweeps, gl_burn, gl_seed);
            std::optional<double> exact_value;
            if (gl_exact) {
                const std::vector<Vertex> targets{gl_v, gl_u};
                const auto table = exact_joint_marginals(g, {}, targets, gl_c.k);
                if (table.empty_support)
                    throw Error(ErrorKind::EmptySupport, "graph has no proper colouring");
                double same = 0.0;
                for (int c = 0; c < gl_c.k; ++c) {
                    const int cc[2] = {c, c};
                    same += table.at(cc);
                }
                exact_value = 1.0 - same;
            }
            emit(glauber_json(gl_v, gl_u, gl_c.k, gl_burn, gl_seed, est, exact_value), gl_c.out_path);
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "colcount: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "colcount: " << e.what() << '\n';
        return kDomainFailure;
    }
    return kOk;
}
