#pragma once

#include "kdisj/som.hpp"
#include "kdisj/tables.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kdisj {

// Descriptive names attached to a trained model so artifacts can be keyed by
// ids and labels instead of raw indices.
struct DatasetLabels {
    std::vector<std::string> individual_ids;
    std::vector<Question> questions;
    std::vector<std::string> flat_modality_labels; // length M, globally unique
};

DatasetLabels make_labels(const CategoricalDataset& ds, const std::vector<std::size_t>& kept_columns);

// A trained dual-space map: each code vector has M + N components, the first
// M living in the individual space (rows of D^c), the last N in the modality
// space (columns of D^c).
struct KdisjModel {
    CodeBook codebook;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    std::vector<long> column_margins;
    std::vector<std::size_t> block_offsets;
    DatasetLabels labels;
    ScheduleInfo schedule;
    long total_steps = 0;
    std::uint64_t seed = 0;

    Slice individual_slice() const { return {0, m}; }
    Slice modality_slice() const { return {m, m + n}; }
};

struct Assignment {
    std::vector<std::size_t> individual_class; // N unit indices
    std::vector<std::size_t> modality_class;   // M unit indices
};

// Among the modalities possessed by row i, the one with the largest corrected
// entry, i.e. the smallest population count; ties go to the lowest column.
std::size_t rarest_modality(const CorrectedTable& dc, std::size_t i);

// X = (row i of D^c, column j(i) of D^c), of dimension M + N.
std::vector<double> make_extended_row(const CorrectedTable& dc, std::size_t i);

// Y = column j of D^c, of dimension N.
std::vector<double> column_vector(const CorrectedTable& dc, std::size_t j);

struct KdisjOptions {
    // Test hook: skip every column step (even steps draw nothing and leave
    // the codebook untouched).
    bool row_steps_only = false;
    TrainObserver observer;
    const DatasetLabels* labels = nullptr;
};

// Dual-space training. Steps alternate strictly, starting with a row step:
// odd steps draw an individual, search the winner on the first M components
// and pull the whole (M+N)-vector of the winner's neighborhood toward the
// extended row; even steps draw a modality, search on the last N components
// and update those components only.
KdisjModel train_kdisj(const CorrectedTable& dc, const MapTopology& topology,
                       const TrainingSchedule& schedule, const KdisjOptions& options = {});

long default_kdisj_steps(const CorrectedTable& dc, int multiplier = 15);

// Individuals win on the first M components, modalities on the last N.
Assignment classify(const KdisjModel& model, const CorrectedTable& dc);

} // namespace kdisj
