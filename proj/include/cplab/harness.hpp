#pragma once

// Batch analysis of (G, phi) instances. Every report is a nlohmann::json
// object (keys sorted, so dump() is canonical). Verdict fields hold
// "pass", "fail" or "skipped: <reason>"; any "fail" makes the instance a
// hard failure.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cplab/automorphism.hpp"
#include "cplab/corpus.hpp"
#include "cplab/group.hpp"
#include "cplab/lie.hpp"
#include "json.hpp"

namespace cplab {

using nlohmann::json;

inline const char* kPass = "pass";
inline const char* kFail = "fail";
std::string skipped(const std::string& reason);
inline std::string verdict(bool ok) { return ok ? kPass : kFail; }

json element_json(const FiniteGroup& g, Elem x);

// order, exponent, nilpotent/class, soluble/derived length, Fitting height.
json group_stats(const GroupPtr& g);

// Verdicts found anywhere inside a report, as "path: verdict" for failures.
std::vector<std::string> collect_failures(const json& report);

// Throws NotCoprime. e is the lcm over x in G_phi u G_{-phi} of the
// exponent of the least phi-invariant subgroup containing x.
json theorem1_probe(const Automorphism& phi);

// Throws NotCoprime. Skipped (with reason) when G_phi is not nilpotent.
json theorem2_probe(const Automorphism& phi, const TwistedData& data);

// Throws NotSoluble, NotCoprime.
json thompson_probe(const Automorphism& phi);

// Pairs scanned exhaustively up to this many twisted elements; beyond it at
// most kPairCap pairs are visited with a fixed stride and d is a lower bound.
inline constexpr std::size_t kFullPairLimit = 1000;
inline constexpr std::uint64_t kPairCap = 1000000;

// Automorphism section: sizes, factorization, coprime facts, decomposition.
json automorphism_report(const Automorphism& phi);

// Lie section for a p-group; phi (if given and coprime) adds fixed points
// and the eigen decomposition for n = |phi|.
json lie_report(const GradedLieAlgebra& a, const Automorphism* phi, bool all_elements = true);
json eigen_report(const ExtendedAlgebra& e);

// Full analysis of one instance.
json analyze_instance(const Instance& inst);

struct SuiteResult {
  json bundle;
  bool hard_failure = false;
};

// corpus: {"schema": 1, "instances": [spec...]}. Throws ParseError on a
// malformed corpus. Results are in corpus order whatever jobs is.
SuiteResult run_suite(const json& corpus, unsigned jobs, std::size_t cap = kDefaultCap);

// Throws ParseError with the byte offset of the problem.
json load_json_file(const std::string& path);

}  // namespace cplab
