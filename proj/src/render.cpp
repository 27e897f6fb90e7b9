#include "kdisj/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace kdisj {

namespace {

std::string fmt(double v, int prec = 3) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
    return buf;
}

int find_question(const CategoricalDataset& ds, const std::string& name) {
    for (std::size_t q = 0; q < ds.k(); ++q)
        if (ds.questions()[q].name == name) return static_cast<int>(q);
    throw InvalidArgument("unknown question '" + name + "'");
}

int find_modality_column(const DatasetLabels& labels, const std::string& label) {
    for (std::size_t j = 0; j < labels.flat_modality_labels.size(); ++j)
        if (labels.flat_modality_labels[j] == label) return static_cast<int>(j);
    throw InvalidArgument("unknown modality label '" + label + "'");
}

struct CellContent {
    std::vector<std::string> labels; // sorted
    std::string size_line;
};

std::vector<CellContent> build_cells(const KdisjModel& model, const Assignment& assignment,
                                     const RenderOptions& options) {
    const std::size_t units = model.codebook.topology.units();
    std::vector<CellContent> cells(units);

    for (std::size_t j = 0; j < assignment.modality_class.size(); ++j) {
        const std::string label = j < model.labels.flat_modality_labels.size()
                                      ? model.labels.flat_modality_labels[j]
                                      : "m" + std::to_string(j);
        cells[assignment.modality_class[j]].labels.push_back(label);
    }
    for (auto& c : cells) std::sort(c.labels.begin(), c.labels.end());

    std::vector<std::size_t> class_size(units, 0);
    for (std::size_t u : assignment.individual_class) ++class_size[u];

    int breakdown_q = -1;
    int star_col = -1;
    double star_population_share = 0.0;
    if (options.dataset != nullptr) {
        if (!options.breakdown_question.empty())
            breakdown_q = find_question(*options.dataset, options.breakdown_question);
        if (!options.star_modality.empty()) {
            star_col = find_modality_column(model.labels, options.star_modality);
            const long margin = model.column_margins.at(static_cast<std::size_t>(star_col));
            star_population_share = static_cast<double>(margin) / static_cast<double>(model.n);
        }
    } else if (!options.breakdown_question.empty() || !options.star_modality.empty()) {
        throw InvalidArgument("breakdown and star rendering need the dataset");
    }

    // Per-unit holder counts of the star modality, matched through the label
    // string so dropped columns cannot skew the answer indices.
    std::vector<std::size_t> star_holders(units, 0);
    if (star_col >= 0) {
        std::size_t star_q = model.k - 1;
        while (star_q > 0 && model.block_offsets[star_q] > static_cast<std::size_t>(star_col))
            --star_q;
        const std::string& bare =
            model.labels.questions[star_q]
                .modalities[static_cast<std::size_t>(star_col) - model.block_offsets[star_q]];
        const auto& ds_mods = options.dataset->questions()[star_q].modalities;
        const auto it = std::find(ds_mods.begin(), ds_mods.end(), bare);
        if (it == ds_mods.end())
            throw InvalidArgument("star modality '" + bare + "' not present in the dataset");
        const int answer_index = static_cast<int>(it - ds_mods.begin());
        for (std::size_t i = 0; i < options.dataset->n(); ++i)
            if (options.dataset->answer(i, star_q) == answer_index)
                ++star_holders[assignment.individual_class[i]];
    }

    for (std::size_t u = 0; u < units; ++u) {
        std::string line = std::to_string(class_size[u]);
        if (breakdown_q >= 0) {
            const auto& q = options.dataset->questions()[breakdown_q];
            std::vector<std::size_t> counts(q.modalities.size(), 0);
            for (std::size_t i = 0; i < options.dataset->n(); ++i)
                if (assignment.individual_class[i] == u)
                    ++counts[options.dataset->answer(i, static_cast<std::size_t>(breakdown_q))];
            line += " (";
            for (std::size_t c = 0; c < counts.size(); ++c) {
                if (c > 0) line += ", ";
                line += std::to_string(counts[c]);
            }
            line += ")";
        }
        if (star_col >= 0 && class_size[u] > 0) {
            // star when the class over-represents the chosen modality
            const double share =
                static_cast<double>(star_holders[u]) / static_cast<double>(class_size[u]);
            if (share > star_population_share) line += " *";
        }
        cells[u].size_line = std::move(line);
    }
    return cells;
}

} // namespace

std::string render_map_text(const KdisjModel& model, const Assignment& assignment,
                            const RenderOptions& options) {
    const MapTopology& topo = model.codebook.topology;
    const auto cells = build_cells(model, assignment, options);

    std::size_t width = 1;
    std::size_t label_rows = 0;
    for (const auto& c : cells) {
        for (const auto& l : c.labels) width = std::max(width, l.size());
        width = std::max(width, c.size_line.size());
        label_rows = std::max(label_rows, c.labels.size());
    }

    const std::string hline = [&] {
        std::string h = "+";
        for (std::size_t c = 0; c < topo.cols; ++c) h += std::string(width + 2, '-') + "+";
        return h;
    }();

    std::ostringstream out;
    out << hline << '\n';
    for (std::size_t r = 0; r < topo.rows; ++r) {
        for (std::size_t line = 0; line < label_rows + 1; ++line) {
            out << '|';
            for (std::size_t c = 0; c < topo.cols; ++c) {
                const auto& cell = cells[r * topo.cols + c];
                std::string text;
                if (line < label_rows) {
                    if (line < cell.labels.size()) text = cell.labels[line];
                } else {
                    text = cell.size_line;
                }
                out << ' ' << text << std::string(width - text.size() + 1, ' ') << '|';
            }
            out << '\n';
        }
        out << hline << '\n';
    }
    return out.str();
}

std::string render_map_svg(const KdisjModel& model, const Assignment& assignment,
                           const RenderOptions& options) {
    const MapTopology& topo = model.codebook.topology;
    const auto cells = build_cells(model, assignment, options);

    constexpr int cell_w = 140;
    constexpr int cell_h = 110;
    constexpr int margin = 10;
    const std::size_t w = topo.cols * cell_w + 2 * margin;
    const std::size_t h = topo.rows * cell_h + 2 * margin;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    svg << "  <style>text{font-family:monospace;font-size:11px;}</style>\n";
    for (std::size_t r = 0; r < topo.rows; ++r) {
        for (std::size_t c = 0; c < topo.cols; ++c) {
            const std::size_t u = r * topo.cols + c;
            const std::size_t x = margin + c * cell_w;
            const std::size_t y = margin + r * cell_h;
            svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_w
                << "\" height=\"" << cell_h << "\" fill=\"white\" stroke=\"black\"/>\n";
            std::size_t ty = y + 16;
            for (const auto& label : cells[u].labels) {
                svg << "  <text x=\"" << x + 6 << "\" y=\"" << ty << "\">" << label << "</text>\n";
                ty += 14;
            }
            svg << "  <text x=\"" << x + 6 << "\" y=\"" << y + cell_h - 8 << "\" font-weight=\"bold\">"
                << cells[u].size_line << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_mca_svg(const MCAResult& res, const std::vector<std::string>& labels,
                           std::size_t axis_a, std::size_t axis_b) {
    if (res.n_axes_kept == 0) throw DegenerateMCA("no informative axes to draw");
    if (axis_a >= res.n_axes_kept) throw InvalidArgument("axis index out of range");
    const bool flat = axis_b >= res.n_axes_kept; // 1-axis result: draw on a strip

    constexpr int w = 800, h = 600, pad = 40;
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    auto expand = [&](double x, double y) {
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
    };
    auto coord_y = [&](const Matrix& m, std::size_t row) {
        return flat ? 0.0 : m.at(row, axis_b);
    };
    for (std::size_t i = 0; i < res.individual_coords.rows; ++i)
        expand(res.individual_coords.at(i, axis_a), coord_y(res.individual_coords, i));
    for (std::size_t j = 0; j < res.modality_coords.rows; ++j)
        expand(res.modality_coords.at(j, axis_a), coord_y(res.modality_coords, j));
    const double span_x = hi_x - lo_x > 0 ? hi_x - lo_x : 1.0;
    const double span_y = hi_y - lo_y > 0 ? hi_y - lo_y : 1.0;
    auto px = [&](double x) { return pad + (x - lo_x) / span_x * (w - 2 * pad); };
    auto py = [&](double y) { return h - pad - (y - lo_y) / span_y * (h - 2 * pad); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    svg << "  <style>text{font-family:monospace;font-size:11px;fill:#b00;}</style>\n";
    svg << "  <line x1=\"" << fmt(px(0)) << "\" y1=\"" << pad << "\" x2=\"" << fmt(px(0))
        << "\" y2=\"" << h - pad << "\" stroke=\"#ccc\"/>\n";
    svg << "  <line x1=\"" << pad << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << w - pad
        << "\" y2=\"" << fmt(py(0)) << "\" stroke=\"#ccc\"/>\n";
    for (std::size_t i = 0; i < res.individual_coords.rows; ++i) {
        svg << "  <circle cx=\"" << fmt(px(res.individual_coords.at(i, axis_a))) << "\" cy=\""
            << fmt(py(coord_y(res.individual_coords, i))) << "\" r=\"2\" fill=\"#36c\"/>\n";
    }
    for (std::size_t j = 0; j < res.modality_coords.rows; ++j) {
        const std::string label = j < labels.size() ? labels[j] : "m" + std::to_string(j);
        svg << "  <text x=\"" << fmt(px(res.modality_coords.at(j, axis_a))) << "\" y=\""
            << fmt(py(coord_y(res.modality_coords, j))) << "\">" << label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_report_text(const ComparisonReport& report) {
    const std::vector<std::string> headers = {"Method", "Classification", "Negative deviations",
                                              "Visualization"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& m : report.methods) {
        rows.push_back({m.name, m.classification ? "Yes" : "Not",
                        m.negative_deviations ? std::to_string(*m.negative_deviations) : "",
                        m.visualization});
    }
    std::vector<std::size_t> widths(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        widths[c] = headers[c].size();
        for (const auto& r : rows) widths[c] = std::max(widths[c], r[c].size());
    }
    auto emit = [&](const std::vector<std::string>& cols) {
        std::string line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            line += cols[c];
            if (c + 1 < cols.size()) line += std::string(widths[c] - cols[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line + "\n";
    };
    std::string text = emit(headers);
    for (const auto& r : rows) text += emit(r);
    return text;
}

} // namespace kdisj
