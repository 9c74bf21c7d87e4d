#pragma once

#include "colcount/estimator.hpp"
#include "colcount/oracles.hpp"
#include "colcount/percolation.hpp"
#include "colcount/verifier.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace colcount {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Every report carries "schema_version" and "kind". Keys are sorted and
// doubles are printed with round-trip precision, so equal reports
// serialise to identical bytes. Wall-clock figures appear only when
// `timing` is set.
Json estimate_json(const EstimateReport& rep, bool timing = false);
Json error_decomposition_json(const ErrorDecomposition& rep);
Json verifier_json(const VerifierReport& rep);
Json membership_json(const MembershipS& m);
Json exact_count_json(const Graph& g, int k, const BigInt& count, const std::string& method,
                      const std::optional<ChromaticPolynomial>& poly);
Json gen_json(const Graph& g, double d, std::uint64_t seed);
Json decay_json(Vertex x, int k, const std::vector<DecayRecord>& records);
Json glauber_json(Vertex v, Vertex u, int k, std::uint64_t burn_in, std::uint64_t seed, const GlauberEstimate& est,
                  std::optional<double> exact);
Json perc_json(const DisagreementConfig& cfg, const std::vector<Vertex>& target, std::optional<double> exact,
               const std::optional<McEstimate>& mc, std::optional<std::uint64_t> seed);
Json tv_json(Vertex x, const std::vector<Vertex>& lambda, int k, std::optional<std::pair<int, int>> pair,
             std::optional<double> tv, const TvPercolationCheck& check);

// Serialises with two-space indentation and a trailing newline.
std::string dump(const Json& j);

// Flattened per-term tables.
void write_terms_csv(std::ostream& out, const EstimateReport& rep);
void write_terms_csv(std::ostream& out, const ErrorDecomposition& rep);

}  // namespace colcount
