#pragma once

#include "kdisj/som.hpp"
#include "kdisj/tables.hpp"

#include <cstdint>
#include <string>

namespace kdisj {

struct RunConfig {
    std::string input_path;
    bool has_id = false;
    std::string topology = "grid:5x5"; // "line:U" or "grid:RxC"
    int iters_mult = 15;
    double eps0 = 0.5;
    double eps_end = 0.01;
    int radius0 = -1; // -1: half the map's largest extent
    std::uint64_t seed = 0;
    std::string unused_policy = "drop"; // or "fail"
    std::string out_dir = ".";
    std::size_t n_classes = 0; // 0: same as the unit count
    std::string star_modality;
    std::string breakdown_question;
};

MapTopology parse_topology(const std::string& spec);
UnusedModalityPolicy parse_policy(const std::string& name);

// Writes model.json, assignment.json, deviations.json, map.txt, map.svg.
void cmd_train(const RunConfig& config);

// Writes eigenvalues.json, mca.json, mca.svg.
void cmd_mca(const RunConfig& config);

// Writes report.json, report.txt.
void cmd_compare(const RunConfig& config);

// Rebuilds map.txt and map.svg from a stored model (assignment.json is read
// from the model's directory; the CSV is only needed for stars/breakdowns).
void cmd_render(const std::string& model_path, const RunConfig& config);

} // namespace kdisj
