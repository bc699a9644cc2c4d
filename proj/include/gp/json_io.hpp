#ifndef GP_JSON_IO_HPP
#define GP_JSON_IO_HPP

#include <json.hpp>

#include "gp/checker.hpp"
#include "gp/partition.hpp"
#include "gp/surface.hpp"
#include "gp/vstring.hpp"

namespace gp {

inline constexpr const char* kSchema = "gpcheck/1";

// {"words":[{"A":["a"],"Ap":[]}, ...]}, word order matching the paragraph,
// letters sorted within each array.
nlohmann::json partition_to_json(const WordWisePartition& P);
WordWisePartition partition_from_json(const nlohmann::json& j);

// {"circles":[["a+","b-","a-","b+"], ...]}: "x+" is the tail of arrow x,
// "x-" its head.
nlohmann::json vstring_to_json(const VirtualString& alpha);
VirtualString vstring_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ConditionReport& report);
nlohmann::json surface_to_json(const SurfaceSummary& s);

}  // namespace gp

#endif
