#include "colcount/estimator.hpp"

#include "colcount/error.hpp"
#include "colcount/parallel.hpp"
#include "colcount/sequence.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace colcount {

Radii resolve_radii(const Graph& g, const EstimatorConfig& config)
{
    Radii r;
    const int n = std::max(1, g.n());
    r.d = config.d ? *config.d : 2.0 * static_cast<double>(g.m()) / static_cast<double>(n);
    const double log_d = std::log(std::max(r.d, 2.0));
    const double log_n = std::log(static_cast<double>(n));
    r.t = config.t ? *config.t : std::max(1, static_cast<int>(std::floor(log_n / (2.0 * log_d))));
    r.ell = config.ell ? *config.ell : static_cast<int>(std::floor(log_n / (10.0 * log_d)));
    if (r.t < 1)
        throw Error(ErrorKind::InvalidParameter, "truncation radius t must be >= 1");
    if (r.ell < 0)
        throw Error(ErrorKind::InvalidParameter, "cycle length ell must be >= 0");
    return r;
}

double compensated_sum(const std::vector<double>& values)
{
    double sum = 0.0, comp = 0.0;
    for (double x : values) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double first_moment_formula(double d, int k)
{
    if (k < 2)
        throw Error(ErrorKind::InvalidParameter, "first_moment_formula: need k >= 2");
    if (d < 0)
        throw Error(ErrorKind::InvalidParameter, "first_moment_formula: need d >= 0");
    return std::log(static_cast<double>(k)) + 0.5 * d * std::log1p(-1.0 / static_cast<double>(k));
}

namespace {

void check_k(int k)
{
    if (k < 3 || k > kMaxColours)
        throw Error(ErrorKind::InvalidParameter,
                    "k must lie in [3, " + std::to_string(kMaxColours) + "], got " + std::to_string(k));
}

bool needs_fallback(const Graph& g, std::size_t r_size, double exponent)
{
    return static_cast<double>(r_size) > std::pow(static_cast<double>(g.n()), exponent);
}

}  // namespace

EstimateReport estimate_log_z(const Graph& g, int k, const EstimatorConfig& config)
{
    check_k(k);
    const auto start = std::chrono::steady_clock::now();
    const Radii radii = resolve_radii(g, config);

    EstimateReport rep;
    rep.n = g.n();
    rep.d = config.d;
    rep.k = k;
    rep.t = radii.t;
    rep.ell = radii.ell;
    if (config.d)
        rep.first_moment = first_moment_formula(*config.d, k);

    const double log_k = std::log(static_cast<double>(k));
    const auto seq = counting_sequence(g, radii.ell, config.cycle_cap);
    rep.r_size = seq.size() - seq.cutoff;

    if (needs_fallback(g, rep.r_size, config.r_threshold_exponent)) {
        if (!brute_force_feasible(g, k, config.enumeration_budget))
            throw Error(ErrorKind::FallbackInfeasible,
                        "|R| = " + std::to_string(rep.r_size) + " exceeds the threshold and exact enumeration of " +
                            std::to_string(g.n()) + " vertices is over budget");
        const BigInt z = brute_force_count(g, k, config.enumeration_budget);
        if (z == 0)
            throw Error(ErrorKind::UncolourableComponent, "graph has no proper " + std::to_string(k) + "-colouring");
        rep.fallback_used = true;
        rep.skipped = g.m();
        rep.psi = g.n() == 0 ? 0.0 : log_big(z) / static_cast<double>(g.n());
    } else {
        const SequenceIndex index(g, seq);
        rep.terms.resize(seq.cutoff);
        parallel_for(seq.cutoff, config.threads, [&](std::size_t i) {
            const auto tc = index.truncated(i, radii.t);
            const auto jt = joint_table(tc, k, config.budget);
            auto& term = rep.terms[i];
            term.edge = seq.edges[i];
            term.p = disagreement_probability(jt);
            term.log_p = std::log(term.p);
            term.component_size = tc.component.n();
            term.extra_edges = tc.extra_edges.size();
            term.disconnected = tc.disconnected;
        });
        rep.skipped = seq.size() - seq.cutoff;
        for (const auto& term : rep.terms)
            if (term.p == 0.0)
                throw Error(ErrorKind::UncolourableComponent,
                            "no colouring of the component around edge (" + std::to_string(term.edge.a) + ", " +
                                std::to_string(term.edge.b) + ") separates its endpoints; k = " +
                                std::to_string(k) + " is too small");
        std::vector<double> logs;
        logs.reserve(rep.terms.size());
        for (const auto& term : rep.terms)
            logs.push_back(term.log_p);
        rep.psi = g.n() == 0 ? 0.0 : log_k + compensated_sum(logs) / static_cast<double>(g.n());
    }
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

ErrorDecomposition error_decomposition(const Graph& g, int k, const EstimatorConfig& config)
{
    check_k(k);
    if (!brute_force_feasible(g, k, config.enumeration_budget))
        throw Error(ErrorKind::InfeasibleSize, "error_decomposition: exact count of " + std::to_string(g.n()) +
                                                   " vertices exceeds the enumeration budget " +
                                                   std::to_string(config.enumeration_budget));
    const auto est = estimate_log_z(g, k, config);
    const Radii radii = resolve_radii(g, config);

    ErrorDecomposition out;
    out.n = g.n();
    out.k = k;
    out.t = radii.t;
    out.ell = radii.ell;
    out.fallback_used = est.fallback_used;

    const BigInt z = brute_force_count(g, k, config.enumeration_budget);
    if (z == 0)
        throw Error(ErrorKind::UncolourableComponent, "graph has no proper " + std::to_string(k) + "-colouring");
    out.log_z_exact = log_big(z);
    out.log_z_approx = est.psi * static_cast<double>(g.n());

    const auto seq = counting_sequence(g, radii.ell, config.cycle_cap);
    const SequenceIndex index(g, seq);
    out.terms.resize(seq.size());
    parallel_for(seq.size(), config.threads, [&](std::size_t i) {
        const auto full = index.full_component(i);
        const Edge e = make_edge(full.anchor_v, full.anchor_u);
        const BigInt before = brute_force_count(full.component, k, config.enumeration_budget);
        const BigInt after = brute_force_count(full.component.with_edge(e), k, config.enumeration_budget);
        auto& term = out.terms[i];
        term.edge = seq.edges[i];
        term.exact_p = ratio_to_double(after, before);
        if (est.fallback_used)
            term.approx_p = term.exact_p;
        else if (i < seq.cutoff)
            term.approx_p = est.terms[i].p;
        else {
            term.approx_p = 1.0;
            term.skipped = true;
        }
        term.ratio_error = std::abs(term.exact_p - term.approx_p) / term.exact_p;
    });

    if (g.n() > 0) {
        const double n = static_cast<double>(g.n());
        out.gap = est.fallback_used ? 0.0 : std::abs(out.log_z_approx - out.log_z_exact) / n;
        std::vector<double> ratios;
        ratios.reserve(out.terms.size());
        for (const auto& term : out.terms)
            ratios.push_back(term.ratio_error);
        out.bound = 2.0 * compensated_sum(ratios) / n;
        out.bound_applicable = std::all_of(out.terms.begin(), out.terms.end(),
                                           [](const ErrorTerm& term) { return term.ratio_error < 0.5; });
        out.bound_holds = !out.bound_applicable || out.gap <= out.bound + 1e-12;
    }
    return out;
}

}  // namespace colcount
