#pragma once

#include <json.hpp>
#include <string>

#include "modist/constructions.hpp"
#include "modist/modular.hpp"

namespace modist {

using Json = nlohmann::json;

/// {"r": int, "a": "num/den", "b": "num/den"}
Json qelem_to_json(const QElem& x);
QElem qelem_from_json(const Json& j);

/// {"r", "ambient": {"model", "d"}, "sqScale", "points"}
Json pointset_to_json(const PointSet& x);
PointSet pointset_from_json(const Json& j);

/// {"r": int, "p": int, "splitting": string, "c": int|null}
Json place_to_json(const PrimePlace& place);

Json verdict_to_json(const TightVerdict& verdict, const PrimePlace& place);
Json obstruction_to_json(const ObstructionReport& report);
Json sweep_row_to_json(const SweepRow& row);
Json tfamily_verdict_to_json(const TFamilyVerdict& verdict);

extern const char* const kSweepTsvHeader;
std::string sweep_row_tsv(const SweepRow& row);

extern const char* const kClassifyTsvHeader;
std::string tfamily_verdict_tsv(const TFamilyVerdict& verdict);

/// Canonical serialization: 2-space indent, sorted keys, trailing newline.
/// Identical values always produce identical bytes.
std::string dump_json(const Json& j);

PointSet read_pointset(const std::string& path);
void write_pointset(const PointSet& x, const std::string& path);

}  // namespace modist
