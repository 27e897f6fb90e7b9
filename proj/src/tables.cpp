#include "kdisj/tables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace kdisj {

CategoricalDataset::CategoricalDataset(std::vector<std::string> individual_ids,
                                       std::vector<Question> questions,
                                       std::vector<std::vector<int>> answers)
    : individual_ids_(std::move(individual_ids)),
      questions_(std::move(questions)),
      answers_(std::move(answers)) {
    if (individual_ids_.empty()) throw EmptyDataset("dataset has no individuals");
    if (questions_.empty()) throw EmptyDataset("dataset has no questions");
    for (const auto& q : questions_) {
        if (q.modalities.empty())
            throw InvalidArgument("question '" + q.name + "' has no modalities");
    }
    if (answers_.size() != individual_ids_.size())
        throw InvalidArgument("answers row count does not match individual count");
    for (std::size_t i = 0; i < answers_.size(); ++i) {
        if (answers_[i].size() != questions_.size())
            throw InvalidArgument("answer row " + std::to_string(i + 1) + " has wrong length");
        for (std::size_t q = 0; q < questions_.size(); ++q) {
            const int a = answers_[i][q];
            if (a < 0 || static_cast<std::size_t>(a) >= questions_[q].modalities.size())
                throw InvalidArgument("answer index out of range at row " + std::to_string(i + 1) +
                                      ", question '" + questions_[q].name + "'");
        }
    }
    std::unordered_set<std::string> seen;
    for (const auto& id : individual_ids_) {
        if (!seen.insert(id).second) throw DuplicateId(id);
    }
}

namespace {

// RFC-4180-ish CSV: comma separated, optional double quotes with "" escapes,
// quoted fields may contain commas and newlines.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;

    std::size_t pos = 0;
    // strip UTF-8 BOM
    if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) pos = 3;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
    };

    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (in_quotes) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    field += '"';
                    ++pos;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            if (field_started && !field.empty())
                throw CsvError("unexpected quote inside unquoted field");
            in_quotes = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_row();
        } else {
            field += c;
            field_started = true;
        }
    }
    if (in_quotes) throw CsvError("unterminated quoted field");
    if (!field.empty() || !row.empty()) {
        if (!field.empty() && field.back() == '\r') field.pop_back();
        end_row();
    }
    return rows;
}

bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\n\r") != std::string::npos;
}

std::string csv_field(const std::string& s) {
    if (!needs_quoting(s)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

} // namespace

CategoricalDataset ingest_csv(const std::string& text, const IngestOptions& options) {
    auto rows = parse_csv(text);
    if (rows.empty()) throw EmptyDataset("empty CSV document");

    const auto& header = rows.front();
    const std::size_t first_q = options.has_id ? 1 : 0;
    if (header.size() <= first_q) throw CsvError("header has no question columns");

    std::vector<Question> questions;
    for (std::size_t c = first_q; c < header.size(); ++c)
        questions.push_back({header[c], {}});

    const std::size_t k = questions.size();
    std::vector<std::unordered_map<std::string, int>> index(k);
    std::vector<std::string> ids;
    std::vector<std::vector<int>> answers;

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& cells = rows[r];
        if (cells.size() != header.size())
            throw CsvError("row " + std::to_string(r) + " has " + std::to_string(cells.size()) +
                           " fields, expected " + std::to_string(header.size()));
        ids.push_back(options.has_id ? cells[0] : std::to_string(r));
        std::vector<int> row_answers(k);
        for (std::size_t q = 0; q < k; ++q) {
            const std::string& cell = cells[first_q + q];
            if (cell.empty()) throw MissingAnswer(r, questions[q].name);
            auto [it, inserted] = index[q].try_emplace(cell, static_cast<int>(questions[q].modalities.size()));
            if (inserted) questions[q].modalities.push_back(cell);
            row_answers[q] = it->second;
        }
        answers.push_back(std::move(row_answers));
    }
    if (answers.empty()) throw EmptyDataset("CSV has a header but no data rows");

    return CategoricalDataset(std::move(ids), std::move(questions), std::move(answers));
}

std::string to_csv(const CategoricalDataset& ds, bool with_id) {
    std::ostringstream out;
    if (with_id) out << "id";
    for (std::size_t q = 0; q < ds.k(); ++q) {
        if (with_id || q > 0) out << ',';
        out << csv_field(ds.questions()[q].name);
    }
    out << '\n';
    for (std::size_t i = 0; i < ds.n(); ++i) {
        if (with_id) out << csv_field(ds.individual_ids()[i]);
        for (std::size_t q = 0; q < ds.k(); ++q) {
            if (with_id || q > 0) out << ',';
            out << csv_field(ds.questions()[q].modalities[ds.answer(i, q)]);
        }
        out << '\n';
    }
    return out.str();
}

DisjunctiveTable build_disjunctive(const CategoricalDataset& ds) {
    DisjunctiveTable t;
    t.n = ds.n();
    t.k = ds.k();
    t.block_offsets.resize(t.k);
    std::size_t m = 0;
    for (std::size_t q = 0; q < t.k; ++q) {
        t.block_offsets[q] = m;
        m += ds.questions()[q].modalities.size();
    }
    t.m = m;
    t.entries.assign(t.n * t.m, 0);
    t.column_margins.assign(t.m, 0);
    for (std::size_t i = 0; i < t.n; ++i) {
        for (std::size_t q = 0; q < t.k; ++q) {
            const std::size_t j = t.block_offsets[q] + static_cast<std::size_t>(ds.answer(i, q));
            t.entries[i * t.m + j] = 1;
            ++t.column_margins[j];
        }
    }
    return t;
}

std::vector<double> CorrectedTable::row(std::size_t i) const {
    if (i >= n) throw InvalidArgument("row index out of range");
    return {entries.begin() + static_cast<std::ptrdiff_t>(i * m),
            entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * m)};
}

std::vector<double> CorrectedTable::column(std::size_t j) const {
    if (j >= m) throw InvalidArgument("column index out of range");
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = entries[i * m + j];
    return col;
}

namespace {

// Locates the question owning column j and the local modality index.
std::pair<std::size_t, std::size_t> locate_column(const DisjunctiveTable& d, std::size_t j) {
    std::size_t q = d.k - 1;
    while (q > 0 && d.block_offsets[q] > j) --q;
    return {q, j - d.block_offsets[q]};
}

} // namespace

DisjunctiveTable select_columns(const DisjunctiveTable& d, const std::vector<std::size_t>& kept) {
    DisjunctiveTable out;
    out.n = d.n;
    out.k = d.k;
    out.m = kept.size();
    out.block_offsets.assign(d.k, 0);
    out.column_margins.resize(out.m);
    out.entries.resize(out.n * out.m);

    std::vector<std::size_t> per_block(d.k, 0);
    for (std::size_t jn = 0; jn < kept.size(); ++jn) {
        const std::size_t jo = kept[jn];
        if (jo >= d.m) throw InvalidArgument("kept column index out of range");
        ++per_block[locate_column(d, jo).first];
        out.column_margins[jn] = d.column_margins[jo];
        for (std::size_t i = 0; i < d.n; ++i)
            out.entries[i * out.m + jn] = d.entries[i * d.m + jo];
    }
    std::size_t offset = 0;
    for (std::size_t q = 0; q < d.k; ++q) {
        out.block_offsets[q] = offset;
        offset += per_block[q];
    }
    return out;
}

CorrectResult correct_table(const DisjunctiveTable& d, UnusedModalityPolicy policy,
                            const CategoricalDataset* ds) {
    CorrectResult res;
    res.kept_columns.reserve(d.m);
    for (std::size_t j = 0; j < d.m; ++j) {
        if (d.column_margins[j] > 0) {
            res.kept_columns.push_back(j);
        } else if (policy == UnusedModalityPolicy::Fail) {
            const auto [q, local] = locate_column(d, j);
            std::string qname = "Q" + std::to_string(q + 1);
            std::string label = "modality " + std::to_string(local + 1);
            if (ds != nullptr) {
                qname = ds->questions()[q].name;
                label = ds->questions()[q].modalities[local];
            }
            throw UnusedModality(qname, label);
        } else {
            res.dropped_any = true;
        }
    }

    const DisjunctiveTable* src = &d;
    DisjunctiveTable reduced;
    if (res.dropped_any) {
        reduced = select_columns(d, res.kept_columns);
        src = &reduced;
    }

    CorrectedTable& c = res.table;
    c.n = src->n;
    c.k = src->k;
    c.m = src->m;
    c.block_offsets = src->block_offsets;
    c.column_margins = src->column_margins;
    c.entries.resize(c.n * c.m);
    std::vector<double> scale(c.m);
    for (std::size_t j = 0; j < c.m; ++j)
        scale[j] = 1.0 / std::sqrt(static_cast<double>(c.k) * static_cast<double>(c.column_margins[j]));
    for (std::size_t i = 0; i < c.n; ++i)
        for (std::size_t j = 0; j < c.m; ++j)
            c.entries[i * c.m + j] = src->entries[i * c.m + j] ? scale[j] : 0.0;
    return res;
}

double chi2_row_distance(const DisjunctiveTable& d, std::size_t i, std::size_t i2) {
    if (i >= d.n || i2 >= d.n) throw InvalidArgument("row index out of range");
    const double k = static_cast<double>(d.k);
    double sum = 0.0;
    for (std::size_t j = 0; j < d.m; ++j) {
        if (d.column_margins[j] == 0) continue; // both profiles are 0 there
        const double diff = (d.at(i, j) - d.at(i2, j)) / k;
        sum += diff * diff / static_cast<double>(d.column_margins[j]);
    }
    return sum;
}

double chi2_col_distance(const DisjunctiveTable& d, std::size_t j, std::size_t j2) {
    if (j >= d.m || j2 >= d.m) throw InvalidArgument("column index out of range");
    for (std::size_t c : {j, j2}) {
        if (d.column_margins[c] == 0) {
            const auto [q, local] = locate_column(d, c);
            throw UnusedModality("Q" + std::to_string(q + 1), "modality " + std::to_string(local + 1));
        }
    }
    const double mj = static_cast<double>(d.column_margins[j]);
    const double mj2 = static_cast<double>(d.column_margins[j2]);
    double sum = 0.0;
    for (std::size_t i = 0; i < d.n; ++i) {
        const double diff = d.at(i, j) / mj - d.at(i, j2) / mj2;
        sum += diff * diff;
    }
    return sum / static_cast<double>(d.k);
}

std::vector<std::string> modality_labels(const CategoricalDataset& ds) {
    std::unordered_map<std::string, int> uses;
    for (const auto& q : ds.questions())
        for (const auto& label : q.modalities) ++uses[label];
    std::vector<std::string> out;
    for (const auto& q : ds.questions())
        for (const auto& label : q.modalities)
            out.push_back(uses[label] > 1 ? q.name + ":" + label : label);
    return out;
}

std::vector<std::string> modality_labels(const CategoricalDataset& ds,
                                         const std::vector<std::size_t>& kept_columns) {
    auto all = modality_labels(ds);
    std::vector<std::string> out;
    out.reserve(kept_columns.size());
    for (std::size_t j : kept_columns) out.push_back(all.at(j));
    return out;
}

} // namespace kdisj
