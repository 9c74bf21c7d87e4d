#include "colcount/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace colcount {

namespace {

Json header(const char* kind)
{
    return Json{{"schema_version", kSchemaVersion}, {"kind", kind}};
}

Json edge_json(Edge e)
{
    return Json::array({e.a, e.b});
}

template <class T>
Json optional_json(const std::optional<T>& value)
{
    return value ? Json(*value) : Json(nullptr);
}

// NaN and infinities have no JSON literal.
Json real(double x)
{
    return std::isfinite(x) ? Json(x) : Json(nullptr);
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Json estimate_json(const EstimateReport& rep, bool timing)
{
    Json j = header("estimate");
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["d"] = optional_json(rep.d);
    j["t"] = rep.t;
    j["ell"] = rep.ell;
    j["psi"] = real(rep.psi);
    j["first_moment"] = optional_json(rep.first_moment);
    j["skipped"] = rep.skipped;
    j["fallback"] = rep.fallback_used;
    j["r_size"] = rep.r_size;
    Json terms = Json::array();
    for (const auto& t : rep.terms)
        terms.push_back({{"edge", edge_json(t.edge)},
                         {"p", real(t.p)},
                         {"log_p", real(t.log_p)},
                         {"component_size", t.component_size},
                         {"extra_edges", t.extra_edges},
                         {"disconnected", t.disconnected}});
    j["terms"] = std::move(terms);
    if (timing)
        j["timing"] = {{"elapsed_seconds", rep.elapsed_seconds}};
    return j;
}

Json error_decomposition_json(const ErrorDecomposition& rep)
{
    Json j = header("diag-errdecomp");
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["t"] = rep.t;
    j["ell"] = rep.ell;
    j["log_z_exact"] = real(rep.log_z_exact);
    j["log_z_approx"] = real(rep.log_z_approx);
    j["gap"] = real(rep.gap);
    j["bound"] = real(rep.bound);
    j["bound_applicable"] = rep.bound_applicable;
    j["bound_holds"] = rep.bound_holds;
    j["fallback"] = rep.fallback_used;
    Json terms = Json::array();
    for (const auto& t : rep.terms)
        terms.push_back({{"edge", edge_json(t.edge)},
                         {"exact_p", real(t.exact_p)},
                         {"approx_p", real(t.approx_p)},
                         {"ratio_error", real(t.ratio_error)},
                         {"skipped", t.skipped}});
    j["terms"] = std::move(terms);
    return j;
}

Json membership_json(const MembershipS& m)
{
    return {{"d", m.d},
            {"ell", m.ell},
            {"ball_radius", m.ball_radius},
            {"edge_bound", m.edge_bound},
            {"edge_count_ok", m.edge_count_ok},
            {"short_cycle_count", m.short_cycle_count},
            {"cycle_bound", m.cycle_bound},
            {"cycle_cap_hit", m.cycle_cap_hit},
            {"short_cycles_ok", m.short_cycles_ok},
            {"balls_ok", m.balls_ok},
            {"bad_ball_centre", optional_json(m.bad_ball_centre)},
            {"in_S", m.in_S}};
}

Json verifier_json(const VerifierReport& rep)
{
    Json j = header("verify");
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["k"] = rep.k;
    j["epsilon1"] = rep.epsilon1;
    j["membership"] = membership_json(rep.membership);
    j["cutoff"] = rep.cutoff;
    Json exact = Json::array();
    for (const auto& r : rep.exact_phase)
        exact.push_back({{"edge", edge_json(r.edge)}, {"p", real(r.p)}, {"component_size", r.component_size}});
    j["exact_phase"] = std::move(exact);
    Json paths = Json::array();
    for (const auto& r : rep.path_phase)
        paths.push_back({{"edge", edge_json(r.edge)},
                         {"distance", r.distance},
                         {"a", real(r.a)},
                         {"radius", r.radius},
                         {"radius_clamped", r.radius_clamped},
                         {"path_count", r.path_count},
                         {"sphere_size", r.sphere_size},
                         {"bound_sum", real(r.bound_sum)},
                         {"cap_exceeded", r.cap_exceeded},
                         {"pass", r.pass}});
    j["path_phase"] = std::move(paths);
    j["threshold"] = real(rep.threshold);
    j["max_bound"] = real(rep.max_bound);
    j["verdict"] = rep.verdict;
    j["reason"] = rep.reason;
    j["first_moment"] = real(rep.first_moment);
    j["implied_h"] = {{"value", real(rep.implied_h)}, {"heuristic", true}};
    j["warnings"] = rep.warnings;
    return j;
}

Json exact_count_json(const Graph& g, int k, const BigInt& count, const std::string& method,
                      const std::optional<ChromaticPolynomial>& poly)
{
    Json j = header("exact");
    j["n"] = g.n();
    j["m"] = g.m();
    j["k"] = k;
    j["method"] = method;
    j["count"] = to_decimal(count);
    const bool positive = count > 0;
    j["log_z"] = positive ? real(log_big(count)) : Json(nullptr);
    j["psi"] = positive && g.n() > 0 ? real(log_big(count) / g.n()) : Json(nullptr);
    if (poly) {
        Json coeffs = Json::array();
        for (const auto& c : poly->coefficients())
            coeffs.push_back(to_decimal(c));
        j["chromatic_polynomial"] = std::move(coeffs);
    } else {
        j["chromatic_polynomial"] = nullptr;
    }
    return j;
}

Json gen_json(const Graph& g, double d, std::uint64_t seed)
{
    Json j = header("gen");
    j["n"] = g.n();
    j["m"] = g.m();
    j["d"] = d;
    j["seed"] = seed;
    return j;
}

Json decay_json(Vertex x, int k, const std::vector<DecayRecord>& records)
{
    Json j = header("diag-decay");
    j["x"] = x;
    j["k"] = k;
    Json rows = Json::array();
    for (const auto& r : records)
        rows.push_back({{"t", r.t},
                        {"sphere_size", r.sphere_size},
                        {"reconstruction_tv", real(r.reconstruction_tv)},
                        {"pairwise_tv", real(r.pairwise_tv)},
                        {"weighted_tv", real(r.weighted_tv)}});
    j["profile"] = std::move(rows);
    return j;
}

Json glauber_json(Vertex v, Vertex u, int k, std::uint64_t burn_in, std::uint64_t seed, const GlauberEstimate& est,
                  std::optional<double> exact)
{
    Json j = header("diag-glauber");
    j["v"] = v;
    j["u"] = u;
    j["k"] = k;
    j["sweeps"] = est.sweeps;
    j["burn_in"] = burn_in;
    j["seed"] = seed;
    j["p_diff"] = real(est.p_diff);
    j["std_error"] = real(est.std_error);
    j["exact_p_diff"] = optional_json(exact);
    return j;
}

Json perc_json(const DisagreementConfig& cfg, const std::vector<Vertex>& target, std::optional<double> exact,
               const std::optional<McEstimate>& mc, std::optional<std::uint64_t> seed)
{
    Json j = header("diag-perc");
    j["root"] = cfg.root();
    j["s"] = cfg.s();
    j["target"] = target;
    j["exact"] = optional_json(exact);
    if (mc)
        j["mc"] = {{"estimate", real(mc->estimate)},
                   {"half_width_95", real(mc->half_width_95)},
                   {"hits", mc->hits},
                   {"samples", mc->samples},
                   {"seed", optional_json(seed)}};
    else
        j["mc"] = nullptr;
    return j;
}

Json tv_json(Vertex x, const std::vector<Vertex>& lambda, int k, std::optional<std::pair<int, int>> pair,
             std::optional<double> tv, const TvPercolationCheck& check)
{
    Json j = header("diag-tv");
    j["x"] = x;
    j["lambda"] = lambda;
    j["k"] = k;
    j["sigma"] = pair ? Json(pair->first) : Json(nullptr);
    j["eta"] = pair ? Json(pair->second) : Json(nullptr);
    j["tv"] = optional_json(tv);
    j["tv_max"] = real(check.tv_max);
    j["perc"] = real(check.perc);
    j["holds"] = check.holds;
    j["empty_support"] = check.empty_support;
    return j;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

void write_terms_csv(std::ostream& out, const EstimateReport& rep)
{
    out << "index,a,b,p,log_p,component_size,extra_edges,disconnected\n";
    for (std::size_t i = 0; i < rep.terms.size(); ++i) {
        const auto& t = rep.terms[i];
        out << i << ',' << t.edge.a << ',' << t.edge.b << ',' << fmt(t.p) << ',' << fmt(t.log_p) << ','
            << t.component_size << ',' << t.extra_edges << ',' << (t.disconnected ? 1 : 0) << '\n';
    }
}

void write_terms_csv(std::ostream& out, const ErrorDecomposition& rep)
{
    out << "index,a,b,exact_p,approx_p,ratio_error,skipped\n";
    for (std::size_t i = 0; i < rep.terms.size(); ++i) {
        const auto& t = rep.terms[i];
        out << i << ',' << t.edge.a << ',' << t.edge.b << ',' << fmt(t.exact_p) << ',' << fmt(t.approx_p) << ','
            << fmt(t.ratio_error) << ',' << (t.skipped ? 1 : 0) << '\n';
    }
}

}  // namespace colcount
