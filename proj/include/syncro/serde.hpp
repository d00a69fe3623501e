#ifndef SYNCRO_SERDE_HPP
#define SYNCRO_SERDE_HPP

#include <json.hpp>

#include "syncro/families.hpp"
#include "syncro/field.hpp"
#include "syncro/scheme.hpp"
#include "syncro/sim.hpp"

namespace syncro {

using json = nlohmann::json;

json coset_table_json(const CosetTable& table);

/// {"n": int, "generator": "bits-LSB-first", "k": int}
json code_json(const CyclicCode& code);

/// {"family": "rm*"|"bch"|"cyclic", "m", "r", "d", "b", "n", "k", "generator"}
json descriptor_json(const CodeDescriptor& descriptor);

json scheme_json(const SyncScheme& scheme);

json batch_report_json(const BatchReport& report);

/// Builds a code from either {"n", "generator"} or a family descriptor
/// ({"family": "rm*", "r", "m"} or {"family": "bch", "m", "d", "b"?}).
CyclicCode code_from_json(const json& j);

/// Designed distance carried by a family descriptor, when it has one.
std::optional<int> designed_distance_from_json(const json& j);

/// Batch specification:
/// {"scheme": {"C": <code>, "D": <code>}, "a_l", "a_r", "trials",
///  "error_weight", "seed"}
struct BatchSpec {
    SyncScheme scheme;
    BatchOptions options;
};

BatchSpec batch_spec_from_json(const json& j);

const char* failure_name(SyncFailure reason);

}  // namespace syncro

#endif
