#pragma once

#include "kdisj/kdisj.hpp"
#include "kdisj/tables.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kdisj {

// Per-(modality, class) deviation n_jk - d_.j * n_k / N: the excess of
// modality-j holders in class k over the independence expectation.
struct DeviationTable {
    std::size_t m = 0;
    std::size_t classes = 0;
    std::vector<double> values;               // row-major M x U
    std::vector<std::size_t> modality_class;  // class each modality was assigned to
    std::vector<double> assigned;             // values[j][modality_class[j]]

    double at(std::size_t j, std::size_t k) const { return values[j * classes + k]; }
};

DeviationTable deviations(const DisjunctiveTable& d,
                          const std::vector<std::size_t>& individual_class,
                          const std::vector<std::size_t>& modality_class,
                          std::size_t n_classes);

// Number of modalities whose assigned deviation is negative; the headline
// placement-quality statistic.
std::size_t negative_count(const DeviationTable& dev);

struct ClassProfile {
    std::size_t size = 0;
    std::vector<long> modality_counts;       // per flat modality index
    std::vector<double> class_share;         // count / class size (0 when empty)
    std::vector<double> population_share;    // margin / N
};

ClassProfile class_profile(const CategoricalDataset& ds,
                           const std::vector<std::size_t>& individual_class, std::size_t k);

struct MethodRow {
    std::string name;
    bool classification = false;
    std::optional<std::size_t> negative_deviations;
    std::string visualization;
};

struct ComparisonReport {
    std::vector<MethodRow> methods; // always KDISJ, MCA, MCA+AHC, MCA+Kohonen
};

// Runs the four methods on one dataset: KDISJ on the corrected table; MCA
// alone (projection only, no classification); Ward clustering of the joint
// MCA point cloud cut to n_classes; and a numeric SOM on the same cloud.
ComparisonReport run_comparison(const CategoricalDataset& ds, const MapTopology& topology,
                                const TrainingSchedule& schedule, std::size_t n_classes);

struct SyntheticSpec {
    std::size_t n_groups = 2;
    std::size_t group_size = 50;
    std::size_t questions = 4;
    std::size_t modalities_per_question = 3;
    double signal_p = 0.9; // chance of answering the group's preferred modality
    std::uint64_t seed = 0;
};

// Planted-group survey: group g prefers modality (g + q) mod m on question q
// and picks it with probability signal_p, otherwise a uniform other modality.
CategoricalDataset generate_synthetic(const SyntheticSpec& spec);

} // namespace kdisj
