#pragma once

#include "kdisj/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kdisj {

struct Question {
    std::string name;
    std::vector<std::string> modalities; // first-appearance order
};

// A survey: N individuals answering K single-choice categorical questions.
// Answers are stored as 0-based indices into each question's modality list.
class CategoricalDataset {
public:
    CategoricalDataset(std::vector<std::string> individual_ids,
                       std::vector<Question> questions,
                       std::vector<std::vector<int>> answers);

    std::size_t n() const { return individual_ids_.size(); }
    std::size_t k() const { return questions_.size(); }

    const std::vector<std::string>& individual_ids() const { return individual_ids_; }
    const std::vector<Question>& questions() const { return questions_; }
    int answer(std::size_t i, std::size_t q) const { return answers_[i][q]; }
    const std::vector<std::vector<int>>& answers() const { return answers_; }

private:
    std::vector<std::string> individual_ids_;
    std::vector<Question> questions_;
    std::vector<std::vector<int>> answers_;
};

struct IngestOptions {
    bool has_id = false; // first CSV column is the individual id
};

// The N x M one-hot table D: one 1 per question block per row.
struct DisjunctiveTable {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t m = 0;
    std::vector<std::size_t> block_offsets; // K start indices into the M columns
    std::vector<long> column_margins;       // d_.j
    std::vector<std::uint8_t> entries;      // row-major N x M

    std::uint8_t at(std::size_t i, std::size_t j) const { return entries[i * m + j]; }
};

// D^c with entries d_ij / sqrt(K * d_.j).
struct CorrectedTable {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t m = 0;
    std::vector<std::size_t> block_offsets;
    std::vector<long> column_margins;
    std::vector<double> entries; // row-major N x M

    double at(std::size_t i, std::size_t j) const { return entries[i * m + j]; }
    std::vector<double> row(std::size_t i) const;
    std::vector<double> column(std::size_t j) const;
};

enum class UnusedModalityPolicy { Drop, Fail };

struct CorrectResult {
    CorrectedTable table;
    // Maps new column index -> original column index. Identity when nothing
    // was dropped; compare size to the source table's m to detect drops.
    std::vector<std::size_t> kept_columns;
    bool dropped_any = false;
};

CategoricalDataset ingest_csv(const std::string& text, const IngestOptions& options = {});

// Inverse-ish of ingest_csv, mainly for writing fixtures and synthetic data.
std::string to_csv(const CategoricalDataset& ds, bool with_id = true);

DisjunctiveTable build_disjunctive(const CategoricalDataset& ds);

CorrectResult correct_table(const DisjunctiveTable& d, UnusedModalityPolicy policy,
                            const CategoricalDataset* ds = nullptr);

// Restriction of D to a subset of columns (used after dropping unused
// modalities so downstream consumers see a consistent M).
DisjunctiveTable select_columns(const DisjunctiveTable& d, const std::vector<std::size_t>& kept);

// Chi-2 profile distances of the uncorrected table.
double chi2_row_distance(const DisjunctiveTable& d, std::size_t i, std::size_t i2);
double chi2_col_distance(const DisjunctiveTable& d, std::size_t j, std::size_t j2);

// Flattened modality labels, qualified as "question:label" only when the bare
// label appears in more than one question.
std::vector<std::string> modality_labels(const CategoricalDataset& ds);
std::vector<std::string> modality_labels(const CategoricalDataset& ds,
                                         const std::vector<std::size_t>& kept_columns);

} // namespace kdisj
