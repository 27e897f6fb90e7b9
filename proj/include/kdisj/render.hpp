#pragma once

#include "kdisj/analysis.hpp"
#include "kdisj/kdisj.hpp"
#include "kdisj/mca.hpp"

#include <string>
#include <vector>

namespace kdisj {

struct RenderOptions {
    // Needed for breakdown counts and star markers; may be null.
    const CategoricalDataset* dataset = nullptr;
    // Cells where this modality's class share exceeds its population share
    // get a star on their size line.
    std::string star_modality;
    // Question whose per-modality counts are appended to the size line, as in
    // "15 (13, 2)".
    std::string breakdown_question;
};

// Fixed-width text grid, one cell per unit: modality labels sorted
// alphabetically, then a size line (with optional breakdown and star).
std::string render_map_text(const KdisjModel& model, const Assignment& assignment,
                            const RenderOptions& options = {});

std::string render_map_svg(const KdisjModel& model, const Assignment& assignment,
                           const RenderOptions& options = {});

// Scatter of two factorial axes: individuals as dots, modalities as labels.
std::string render_mca_svg(const MCAResult& res, const std::vector<std::string>& labels,
                           std::size_t axis_a = 0, std::size_t axis_b = 1);

std::string render_report_text(const ComparisonReport& report);

} // namespace kdisj
