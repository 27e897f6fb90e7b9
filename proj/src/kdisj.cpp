#include "kdisj/kdisj.hpp"

#include <algorithm>

namespace kdisj {

DatasetLabels make_labels(const CategoricalDataset& ds, const std::vector<std::size_t>& kept_columns) {
    DatasetLabels out;
    out.individual_ids = ds.individual_ids();
    out.flat_modality_labels = modality_labels(ds, kept_columns);

    // rebuild per-question modality lists restricted to the kept columns
    auto d_offsets = [&] {
        std::vector<std::size_t> offs(ds.k());
        std::size_t m = 0;
        for (std::size_t q = 0; q < ds.k(); ++q) {
            offs[q] = m;
            m += ds.questions()[q].modalities.size();
        }
        offs.push_back(m);
        return offs;
    }();
    out.questions.resize(ds.k());
    for (std::size_t q = 0; q < ds.k(); ++q) out.questions[q].name = ds.questions()[q].name;
    for (std::size_t jo : kept_columns) {
        std::size_t q = ds.k() - 1;
        while (q > 0 && d_offsets[q] > jo) --q;
        out.questions[q].modalities.push_back(ds.questions()[q].modalities[jo - d_offsets[q]]);
    }
    return out;
}

std::size_t rarest_modality(const CorrectedTable& dc, std::size_t i) {
    if (i >= dc.n) throw InvalidArgument("row index out of range");
    std::size_t best = 0;
    double best_value = -1.0;
    for (std::size_t j = 0; j < dc.m; ++j) {
        const double v = dc.at(i, j);
        if (v > best_value) { // strict: ties keep the lowest column index
            best_value = v;
            best = j;
        }
    }
    return best;
}

std::vector<double> make_extended_row(const CorrectedTable& dc, std::size_t i) {
    if (i >= dc.n) throw InvalidArgument("row index out of range");
    std::vector<double> x;
    x.reserve(dc.m + dc.n);
    for (std::size_t j = 0; j < dc.m; ++j) x.push_back(dc.at(i, j));
    const std::size_t ji = rarest_modality(dc, i);
    for (std::size_t r = 0; r < dc.n; ++r) x.push_back(dc.at(r, ji));
    return x;
}

std::vector<double> column_vector(const CorrectedTable& dc, std::size_t j) {
    return dc.column(j);
}

long default_kdisj_steps(const CorrectedTable& dc, int multiplier) {
    if (multiplier < 1) throw InvalidArgument("step multiplier must be >= 1");
    return static_cast<long>(multiplier) * static_cast<long>(dc.n + dc.m);
}

KdisjModel train_kdisj(const CorrectedTable& dc, const MapTopology& topology,
                       const TrainingSchedule& schedule, const KdisjOptions& options) {
    const std::size_t n = dc.n;
    const std::size_t m = dc.m;

    std::vector<std::vector<double>> extended(n);
    for (std::size_t i = 0; i < n; ++i) extended[i] = make_extended_row(dc, i);
    std::vector<std::vector<double>> columns(m);
    for (std::size_t j = 0; j < m; ++j) columns[j] = dc.column(j);

    Rng rng(schedule.seed);
    CodeBook cb = init_codebook(extended, topology, rng);
    if (options.observer) options.observer(TrainStep{TrainStep::Kind::Init, 0, 0, 0, 0.0, 0}, cb);

    const Slice row_slice{0, m};
    const Slice col_slice{m, m + n};
    const Slice full{0, m + n};

    for (long t = 1; t <= schedule.total_steps; ++t) {
        const double eps = schedule.epsilon(t);
        const int radius = schedule.radius(t);
        if (t % 2 == 1) {
            const std::size_t i = static_cast<std::size_t>(rng.uniform_below(n));
            const auto& x = extended[i];
            const std::size_t u0 = winner(cb, std::span<const double>(x.data(), m), row_slice);
            const auto targets = neighbors(topology, u0, static_cast<std::size_t>(radius));
            update_toward(cb, targets, x, full, eps);
            if (options.observer)
                options.observer(TrainStep{TrainStep::Kind::Row, t, i, u0, eps, radius}, cb);
        } else {
            if (options.row_steps_only) continue;
            const std::size_t j = static_cast<std::size_t>(rng.uniform_below(m));
            const auto& y = columns[j];
            const std::size_t v0 = winner(cb, y, col_slice);
            const auto targets = neighbors(topology, v0, static_cast<std::size_t>(radius));
            update_toward(cb, targets, y, col_slice, eps);
            if (options.observer)
                options.observer(TrainStep{TrainStep::Kind::Column, t, j, v0, eps, radius}, cb);
        }
    }

    KdisjModel model;
    model.codebook = std::move(cb);
    model.n = n;
    model.m = m;
    model.k = dc.k;
    model.column_margins = dc.column_margins;
    model.block_offsets = dc.block_offsets;
    model.schedule = schedule.info;
    model.total_steps = schedule.total_steps;
    model.seed = schedule.seed;
    if (options.labels != nullptr) model.labels = *options.labels;
    return model;
}

Assignment classify(const KdisjModel& model, const CorrectedTable& dc) {
    if (model.n != dc.n || model.m != dc.m)
        throw InvalidArgument("classify: model and table shapes do not match");
    if (model.codebook.dim != dc.m + dc.n)
        throw InvalidArgument("classify: codebook dimension is not M + N");
    Assignment a;
    a.individual_class.resize(dc.n);
    a.modality_class.resize(dc.m);
    const Slice row_slice = model.individual_slice();
    const Slice col_slice = model.modality_slice();
    for (std::size_t i = 0; i < dc.n; ++i) {
        const auto row = dc.row(i);
        a.individual_class[i] = winner(model.codebook, row, row_slice);
    }
    for (std::size_t j = 0; j < dc.m; ++j) {
        const auto col = dc.column(j);
        a.modality_class[j] = winner(model.codebook, col, col_slice);
    }
    return a;
}

} // namespace kdisj
