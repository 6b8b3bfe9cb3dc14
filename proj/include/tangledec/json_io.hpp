#ifndef TANGLEDEC_JSON_IO_HPP
#define TANGLEDEC_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "tangledec/decider.hpp"
#include "tangledec/oracle.hpp"
#include "tangledec/sepsys.hpp"
#include "tangledec/tangles.hpp"
#include "tangledec/weights.hpp"

namespace tangledec {

using Json = nlohmann::json;

// Reads and parses a file; missing files and malformed JSON raise
// MalformedInput with distinct messages.
Json load_json_file(const std::string& path);

// {"mode":"graph"|"hypergraph"|"setsep","vertices":[..],"edges":[[..],..]}
GroundSystem ground_system_from_json(const Json& j);
Json ground_system_to_json(const GroundSystem& g);

// {"A":[..],"B":[..]} with sorted vertex lists.
Separation separation_from_json(const GroundSystem& g, const Json& j);
Json separation_to_json(const GroundSystem& g, const Separation& s);

// Tangle files: {"k":K,"type":"explicit","maximal":[..]} reconstructs the
// orientation as the downward closure of the listed maximal elements;
// {"type":"majority-set","X":[..]} and {"type":"majority-weights","w":{..}}
// induce it by majority vote (ties are a format error for files). A "k"
// field, when present, must agree with the expected k.
Orientation orientation_from_tangle_json(const GroundSystem& g, const Json& j, int k,
                                         const Limits& limits = {});
Json orientation_to_tangle_json(const GroundSystem& g, const Orientation& o);

Json tie_report_to_json(const GroundSystem& g, const std::vector<Separation>& ties);

// {"weights":{"v":n,..}}; values are non-negative integers (decimal strings
// accepted and emitted for values beyond 64 bits).
WeightFunction weights_from_json(const GroundSystem& g, const Json& j);
Json weights_to_json(const GroundSystem& g, const WeightFunction& w);
// weights plus {"provenance":{"n":..,"x":["p/q",..],"bump_fired":..,"bump_vertex":..}}
Json synthesis_to_json(const GroundSystem& g, const SynthesisResult& r);

Json certificate_to_json(const GroundSystem& g, const TangleCertificate& cert);
Json verify_result_to_json(const GroundSystem& g, const VerifyResult& r);

} // namespace tangledec

#endif // TANGLEDEC_JSON_IO_HPP
