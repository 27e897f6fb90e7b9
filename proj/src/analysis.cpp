#include "kdisj/analysis.hpp"

#include "kdisj/cluster.hpp"
#include "kdisj/mca.hpp"
#include "kdisj/rng.hpp"

#include <algorithm>
#include <string>

namespace kdisj {

DeviationTable deviations(const DisjunctiveTable& d,
                          const std::vector<std::size_t>& individual_class,
                          const std::vector<std::size_t>& modality_class,
                          std::size_t n_classes) {
    if (individual_class.size() != d.n)
        throw InvalidArgument("deviations: individual label count does not match N");
    if (modality_class.size() != d.m)
        throw InvalidArgument("deviations: modality label count does not match M");
    for (std::size_t c : individual_class)
        if (c >= n_classes) throw InvalidArgument("deviations: individual label out of range");
    for (std::size_t c : modality_class)
        if (c >= n_classes) throw InvalidArgument("deviations: modality label out of range");

    std::vector<long> class_size(n_classes, 0);
    for (std::size_t c : individual_class) ++class_size[c];

    DeviationTable dev;
    dev.m = d.m;
    dev.classes = n_classes;
    dev.values.assign(d.m * n_classes, 0.0);
    std::vector<long> holders(d.m * n_classes, 0); // n_jk
    for (std::size_t i = 0; i < d.n; ++i) {
        const std::size_t k = individual_class[i];
        for (std::size_t j = 0; j < d.m; ++j)
            if (d.at(i, j)) ++holders[j * n_classes + k];
    }
    const double n = static_cast<double>(d.n);
    for (std::size_t j = 0; j < d.m; ++j) {
        const double margin = static_cast<double>(d.column_margins[j]);
        for (std::size_t k = 0; k < n_classes; ++k)
            dev.values[j * n_classes + k] =
                static_cast<double>(holders[j * n_classes + k]) -
                margin * static_cast<double>(class_size[k]) / n;
    }
    dev.modality_class = modality_class;
    dev.assigned.resize(d.m);
    for (std::size_t j = 0; j < d.m; ++j) dev.assigned[j] = dev.at(j, modality_class[j]);
    return dev;
}

std::size_t negative_count(const DeviationTable& dev) {
    std::size_t count = 0;
    for (double v : dev.assigned)
        if (v < 0.0) ++count;
    return count;
}

ClassProfile class_profile(const CategoricalDataset& ds,
                           const std::vector<std::size_t>& individual_class, std::size_t k) {
    if (individual_class.size() != ds.n())
        throw InvalidArgument("class_profile: label count does not match N");

    std::size_t m = 0;
    std::vector<std::size_t> offsets(ds.k());
    for (std::size_t q = 0; q < ds.k(); ++q) {
        offsets[q] = m;
        m += ds.questions()[q].modalities.size();
    }

    ClassProfile p;
    p.modality_counts.assign(m, 0);
    p.class_share.assign(m, 0.0);
    p.population_share.assign(m, 0.0);

    std::vector<long> margins(m, 0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        const bool in_class = individual_class[i] == k;
        if (in_class) ++p.size;
        for (std::size_t q = 0; q < ds.k(); ++q) {
            const std::size_t j = offsets[q] + static_cast<std::size_t>(ds.answer(i, q));
            ++margins[j];
            if (in_class) ++p.modality_counts[j];
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (p.size > 0)
            p.class_share[j] = static_cast<double>(p.modality_counts[j]) / static_cast<double>(p.size);
        p.population_share[j] = static_cast<double>(margins[j]) / static_cast<double>(ds.n());
    }
    return p;
}

ComparisonReport run_comparison(const CategoricalDataset& ds, const MapTopology& topology,
                                const TrainingSchedule& schedule, std::size_t n_classes) {
    const DisjunctiveTable d0 = build_disjunctive(ds);
    const CorrectResult corrected = correct_table(d0, UnusedModalityPolicy::Drop, &ds);
    const DisjunctiveTable d =
        corrected.dropped_any ? select_columns(d0, corrected.kept_columns) : d0;
    const CorrectedTable& dc = corrected.table;
    const std::size_t units = topology.units();

    ComparisonReport report;

    // (a) KDISJ
    {
        const KdisjModel model = train_kdisj(dc, topology, schedule);
        const Assignment a = classify(model, dc);
        const auto dev = deviations(d, a.individual_class, a.modality_class, units);
        report.methods.push_back({"KDISJ", true, negative_count(dev), "Good"});
    }

    const MCAResult mca = run_mca(dc);

    // (b) MCA alone: projection only
    report.methods.push_back({"MCA", false, std::nullopt, "Bad"});

    const auto points = joint_points(mca);
    std::vector<std::vector<double>> coords;
    coords.reserve(points.size());
    for (const auto& p : points) coords.push_back(p.coords);

    // (c) MCA + AHC
    {
        const Dendrogram dendro = ahc_ward(coords);
        const auto labels = cut(dendro, n_classes);
        std::vector<std::size_t> ind(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(dc.n));
        std::vector<std::size_t> mod(labels.begin() + static_cast<std::ptrdiff_t>(dc.n), labels.end());
        const auto dev = deviations(d, ind, mod, n_classes);
        report.methods.push_back({"MCA+AHC", true, negative_count(dev), "Bad"});
    }

    // (d) MCA + Kohonen on the same cloud, same topology and schedule
    {
        const CodeBook cb = train_numeric_som(coords, topology, schedule);
        std::vector<std::size_t> ind(dc.n), mod(dc.m);
        for (std::size_t i = 0; i < dc.n; ++i) ind[i] = winner(cb, coords[i], cb.full());
        for (std::size_t j = 0; j < dc.m; ++j) mod[j] = winner(cb, coords[dc.n + j], cb.full());
        const auto dev = deviations(d, ind, mod, units);
        report.methods.push_back({"MCA+Kohonen", true, negative_count(dev), "Good"});
    }

    return report;
}

CategoricalDataset generate_synthetic(const SyntheticSpec& spec) {
    if (spec.n_groups < 1 || spec.group_size < 1 || spec.questions < 1 ||
        spec.modalities_per_question < 1)
        throw InvalidArgument("generate_synthetic: sizes must be >= 1");
    if (spec.signal_p <= 0.5 || spec.signal_p > 1.0)
        throw InvalidArgument("generate_synthetic: signal_p must be in (0.5, 1]");

    const std::size_t m = spec.modalities_per_question;
    std::vector<Question> questions(spec.questions);
    for (std::size_t q = 0; q < spec.questions; ++q) {
        questions[q].name = "Q" + std::to_string(q + 1);
        for (std::size_t j = 0; j < m; ++j)
            questions[q].modalities.push_back("Q" + std::to_string(q + 1) + "M" + std::to_string(j + 1));
    }

    Rng rng(spec.seed);
    std::vector<std::string> ids;
    std::vector<std::vector<int>> answers;
    for (std::size_t g = 0; g < spec.n_groups; ++g) {
        for (std::size_t i = 0; i < spec.group_size; ++i) {
            ids.push_back("g" + std::to_string(g + 1) + "_" + std::to_string(i + 1));
            std::vector<int> row(spec.questions);
            for (std::size_t q = 0; q < spec.questions; ++q) {
                const std::size_t preferred = (g + q) % m;
                std::size_t a = preferred;
                if (m > 1 && rng.uniform01() >= spec.signal_p) {
                    const std::size_t other = rng.uniform_below(m - 1);
                    a = other < preferred ? other : other + 1;
                }
                row[q] = static_cast<int>(a);
            }
            answers.push_back(std::move(row));
        }
    }
    return CategoricalDataset(std::move(ids), std::move(questions), std::move(answers));
}

} // namespace kdisj
