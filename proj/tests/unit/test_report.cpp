#include "corpus.hpp"

#include "colcount/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace colcount;
using namespace colcount::testing;

TEST_CASE("estimate JSON carries the versioned fields")
{
    EstimatorConfig cfg;
    cfg.t = 2;
    cfg.d = 2.0;
    const auto rep = estimate_log_z(cycle_graph(5), 3, cfg);
    const Json j = estimate_json(rep);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["kind"] == "estimate");
    CHECK(j["terms"].size() == 5);
    CHECK(j["terms"][0]["edge"] == Json::array({0, 1}));
    CHECK(j["first_moment"].is_number());
    CHECK_FALSE(j.contains("timing"));
    CHECK(estimate_json(rep, true).contains("timing"));
    CHECK(dump(j) == dump(estimate_json(estimate_log_z(cycle_graph(5), 3, cfg))));
}

TEST_CASE("doubles round-trip through the JSON text")
{
    EstimatorConfig cfg;
    cfg.t = 1;
    const auto rep = estimate_log_z(cycle_graph(7), 4, cfg);
    const Json back = Json::parse(dump(estimate_json(rep)));
    CHECK(back["psi"].get<double>() == rep.psi);
}

TEST_CASE("non-finite values serialise as null")
{
    VerifierReport rep;
    rep.exact_phase.push_back({{0, 1}, std::nan(""), 3});
    rep.max_bound = INFINITY;
    const Json j = verifier_json(rep);
    CHECK(j["exact_phase"][0]["p"].is_null());
    CHECK(j["max_bound"].is_null());
    CHECK(j["implied_h"]["heuristic"] == true);
}

TEST_CASE("CSV flattener writes one row per term")
{
    EstimatorConfig cfg;
    cfg.t = 1;
    const auto rep = estimate_log_z(path_graph(4), 3, cfg);
    std::ostringstream out;
    write_terms_csv(out, rep);
    const std::string text = out.str();
    CHECK(text.rfind("index,a,b,p,log_p,component_size,extra_edges,disconnected\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
    CHECK(text.find("\n2,2,3,") != std::string::npos);
}

TEST_CASE("exact count JSON uses decimal strings")
{
    const Graph g = cycle_graph(4);
    const Json j = exact_count_json(g, 3, brute_force_count(g, 3), "brute-force", chromatic_polynomial(g));
    CHECK(j["count"] == "18");
    CHECK(j["chromatic_polynomial"].size() == 5);
    CHECK(j["chromatic_polynomial"][4] == "1");
}
