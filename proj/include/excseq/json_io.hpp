#pragma once

#include <string>

#include <json.hpp>

#include "excseq/census.hpp"
#include "excseq/cluster.hpp"
#include "excseq/exc_seq.hpp"

namespace excseq {

// Field order is fixed so emitted documents are byte-deterministic.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json catalog_to_json(const Catalog& cat);

Json sequence_to_json(const Catalog& cat, const ExcSequence& seq, bool with_classes = false);
ExcSequence sequence_from_json(const Catalog& cat, const Json& j);

Json tuple_to_json(const Catalog& cat, const CompatibleTuple& tuple);
CompatibleTuple tuple_from_json(const Catalog& cat, const Json& j);

Json m_exc_to_json(const Catalog& cat, const MExcSequence& mseq);
MExcSequence m_exc_from_json(const Catalog& cat, const Json& j);

Json census_to_json(const CensusReport& r);
CensusReport census_from_json(const Json& j);

// "24/162 = 4/27"; collapses to one form when already reduced.
std::string ratio_string(long long count, long long total);

// Deterministic DOT digraph; maximal nodes are bold, edges point from the
// smaller support to the larger.
std::string export_dot(const SupportHasse& h);

} // namespace excseq
