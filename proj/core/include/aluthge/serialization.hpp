#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"

#include "aluthge/diagram.hpp"
#include "aluthge/measures.hpp"
#include "aluthge/positivity.hpp"
#include "aluthge/regions.hpp"
#include "aluthge/transforms.hpp"

namespace aluthge {

using Json = nlohmann::json;

/// {"kind", "params", "table"?}. Table, theta, prop2, thm1 and completion
/// diagrams with reproducible row sequences are written by their parameters;
/// everything else is materialised on [0,window]^2 as a "table" with no tail
/// (or a flat tail when the flat extension commutes).
Json diagram_to_json(const WeightDiagram& w, std::size_t window = kDefaultWindow);

/// Inverse of diagram_to_json. Throws DomainError (or a subclass) on malformed
/// or invalid content.
WeightDiagram diagram_from_json(const Json& j);

Json table_to_json(const TableData& t);
TableData table_from_json(const Json& j);

/// {"atoms": [{"s", "t", "rho"}]}
Json measure_to_json(const AtomicMeasure2D& mu);
AtomicMeasure2D measure_from_json(const Json& j);

Json to_json(const PsdVerdict& v);
Json to_json(const HypoReport& r);
Json to_json(const KHypoResult& r);
Json to_json(const ToralCondition& c);
Json to_json(const ContinuityProbe& p);  // {"n", "level", "lemma_re4": {"i": {"lhs", "rhs"}, ...}}
Json to_json(const StampfliData& d);
Json to_json(const QuasinormalVerdict& v);
Json to_json(const Thm1ProbeReport& r);
Json to_json(const RegionReport& r);

/// File helpers; IoError on open, read, parse or write failure.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace aluthge
