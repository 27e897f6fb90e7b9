#pragma once

#include "kdisj/analysis.hpp"
#include "kdisj/cluster.hpp"
#include "kdisj/kdisj.hpp"
#include "kdisj/mca.hpp"
#include "kdisj/som.hpp"
#include "kdisj/tables.hpp"

#include <json.hpp>

#include <string>

namespace kdisj {

using Json = nlohmann::json;

Json to_json(const MapTopology& topology);
MapTopology topology_from_json(const Json& j);

Json to_json(const DisjunctiveTable& t);
Json to_json(const CorrectedTable& t);

Json to_json(const CodeBook& cb);
CodeBook codebook_from_json(const Json& j);

// A plain numeric SOM together with how it was trained.
Json trained_som_json(const CodeBook& cb, const ScheduleInfo& info, long total_steps,
                      std::uint64_t seed);

Json to_json(const KdisjModel& model);
KdisjModel model_from_json(const Json& j);

Json to_json(const Assignment& a, const DatasetLabels& labels);
Assignment assignment_from_json(const Json& j, const DatasetLabels& labels);

Json to_json(const DeviationTable& dev, const std::vector<std::string>& labels);

Json to_json(const Dendrogram& d);

Json to_json(const MCAResult& res);
Json eigenvalues_json(const MCAResult& res);

Json to_json(const ComparisonReport& report);

// Canonical file form: dump with 2-space indent plus a trailing newline, so
// load + re-serialize is byte-identical.
std::string to_file_text(const Json& j);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

} // namespace kdisj
