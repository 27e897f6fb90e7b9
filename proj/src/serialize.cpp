#include "kdisj/serialize.hpp"

#include <fstream>
#include <sstream>

namespace kdisj {

Json to_json(const MapTopology& topology) {
    if (topology.kind == TopologyKind::Line)
        return Json{{"kind", "line"}, {"length", topology.cols}};
    return Json{{"kind", "grid"}, {"rows", topology.rows}, {"cols", topology.cols}};
}

MapTopology topology_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "line") return MapTopology::line(j.at("length").get<std::size_t>());
    if (kind == "grid")
        return MapTopology::grid(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    throw InvalidArgument("unknown topology kind '" + kind + "'");
}

namespace {

template <typename Table>
Json table_json(const Table& t) {
    return Json{{"n", t.n},
                {"k", t.k},
                {"m", t.m},
                {"block_offsets", t.block_offsets},
                {"column_margins", t.column_margins},
                {"entries", t.entries}};
}

} // namespace

Json to_json(const DisjunctiveTable& t) { return table_json(t); }
Json to_json(const CorrectedTable& t) { return table_json(t); }

Json to_json(const CodeBook& cb) {
    std::vector<double> flat;
    flat.reserve(cb.vectors.size() * cb.dim);
    for (const auto& v : cb.vectors) flat.insert(flat.end(), v.begin(), v.end());
    return Json{{"topology", to_json(cb.topology)}, {"dim", cb.dim}, {"vectors", flat}};
}

CodeBook codebook_from_json(const Json& j) {
    CodeBook cb;
    cb.topology = topology_from_json(j.at("topology"));
    cb.dim = j.at("dim").get<std::size_t>();
    const auto flat = j.at("vectors").get<std::vector<double>>();
    const std::size_t units = cb.topology.units();
    if (flat.size() != units * cb.dim) throw InvalidArgument("codebook vector payload has wrong size");
    cb.vectors.resize(units);
    for (std::size_t u = 0; u < units; ++u)
        cb.vectors[u].assign(flat.begin() + static_cast<std::ptrdiff_t>(u * cb.dim),
                             flat.begin() + static_cast<std::ptrdiff_t>((u + 1) * cb.dim));
    return cb;
}

namespace {

Json schedule_json(const ScheduleInfo& info, long total_steps) {
    return Json{{"kind", info.kind},
                {"eps0", info.eps0},
                {"eps_end", info.eps_end},
                {"radius0", info.radius0},
                {"total_steps", total_steps}};
}

Json questions_json(const std::vector<Question>& questions) {
    Json arr = Json::array();
    for (const auto& q : questions) arr.push_back({{"name", q.name}, {"modalities", q.modalities}});
    return arr;
}

std::vector<Question> questions_from_json(const Json& arr) {
    std::vector<Question> out;
    for (const auto& q : arr)
        out.push_back({q.at("name").get<std::string>(),
                       q.at("modalities").get<std::vector<std::string>>()});
    return out;
}

} // namespace

Json trained_som_json(const CodeBook& cb, const ScheduleInfo& info, long total_steps,
                      std::uint64_t seed) {
    Json j = to_json(cb);
    j["schedule"] = schedule_json(info, total_steps);
    j["seed"] = seed;
    return j;
}

Json to_json(const KdisjModel& model) {
    return Json{{"codebook", to_json(model.codebook)},
                {"n", model.n},
                {"m", model.m},
                {"k", model.k},
                {"column_margins", model.column_margins},
                {"block_offsets", model.block_offsets},
                {"individual_ids", model.labels.individual_ids},
                {"questions", questions_json(model.labels.questions)},
                {"modality_labels", model.labels.flat_modality_labels},
                {"schedule", schedule_json(model.schedule, model.total_steps)},
                {"seed", model.seed}};
}

KdisjModel model_from_json(const Json& j) {
    KdisjModel model;
    model.codebook = codebook_from_json(j.at("codebook"));
    model.n = j.at("n").get<std::size_t>();
    model.m = j.at("m").get<std::size_t>();
    model.k = j.at("k").get<std::size_t>();
    model.column_margins = j.at("column_margins").get<std::vector<long>>();
    model.block_offsets = j.at("block_offsets").get<std::vector<std::size_t>>();
    model.labels.individual_ids = j.at("individual_ids").get<std::vector<std::string>>();
    model.labels.questions = questions_from_json(j.at("questions"));
    model.labels.flat_modality_labels = j.at("modality_labels").get<std::vector<std::string>>();
    const auto& s = j.at("schedule");
    model.schedule = {s.at("kind").get<std::string>(), s.at("eps0").get<double>(),
                      s.at("eps_end").get<double>(), s.at("radius0").get<int>()};
    model.total_steps = s.at("total_steps").get<long>();
    model.seed = j.at("seed").get<std::uint64_t>();
    if (model.codebook.dim != model.m + model.n)
        throw InvalidArgument("model codebook dimension is not M + N");
    return model;
}

Json to_json(const Assignment& a, const DatasetLabels& labels) {
    Json individuals = Json::object();
    for (std::size_t i = 0; i < a.individual_class.size(); ++i)
        individuals[labels.individual_ids.at(i)] = a.individual_class[i];
    Json modalities = Json::object();
    for (std::size_t j = 0; j < a.modality_class.size(); ++j)
        modalities[labels.flat_modality_labels.at(j)] = a.modality_class[j];
    return Json{{"individuals", individuals}, {"modalities", modalities}};
}

Assignment assignment_from_json(const Json& j, const DatasetLabels& labels) {
    Assignment a;
    const auto& individuals = j.at("individuals");
    const auto& modalities = j.at("modalities");
    a.individual_class.reserve(labels.individual_ids.size());
    for (const auto& id : labels.individual_ids)
        a.individual_class.push_back(individuals.at(id).get<std::size_t>());
    a.modality_class.reserve(labels.flat_modality_labels.size());
    for (const auto& label : labels.flat_modality_labels)
        a.modality_class.push_back(modalities.at(label).get<std::size_t>());
    return a;
}

Json to_json(const DeviationTable& dev, const std::vector<std::string>& labels) {
    Json assigned = Json::object();
    for (std::size_t j = 0; j < dev.m; ++j) assigned[labels.at(j)] = dev.assigned[j];
    return Json{{"m", dev.m},
                {"classes", dev.classes},
                {"labels", labels},
                {"values", dev.values},
                {"modality_class", dev.modality_class},
                {"assigned", assigned},
                {"negative_count", negative_count(dev)}};
}

Json to_json(const Dendrogram& d) {
    Json merges = Json::array();
    for (const auto& mg : d.merges) merges.push_back({mg.a, mg.b, mg.cost, mg.id});
    return Json{{"leaves", d.leaves}, {"merges", merges}};
}

namespace {

Json matrix_json(const Matrix& m) {
    return Json{{"rows", m.rows}, {"cols", m.cols}, {"data", m.data}};
}

} // namespace

Json to_json(const MCAResult& res) {
    return Json{{"eigenvalues", res.eigenvalues},
                {"eigenvectors", matrix_json(res.eigenvectors)},
                {"kept_axes", res.n_axes_kept},
                {"individual_coords", matrix_json(res.individual_coords)},
                {"modality_coords", matrix_json(res.modality_coords)},
                {"variance_share", res.variance_share}};
}

Json eigenvalues_json(const MCAResult& res) {
    return Json{{"eigenvalues", res.eigenvalues},
                {"kept_axes", res.n_axes_kept},
                {"variance_share", res.variance_share}};
}

Json to_json(const ComparisonReport& report) {
    Json methods = Json::array();
    for (const auto& row : report.methods) {
        Json r{{"name", row.name},
               {"classification", row.classification},
               {"visualization", row.visualization}};
        if (row.negative_deviations) r["negative_deviations"] = *row.negative_deviations;
        methods.push_back(std::move(r));
    }
    return Json{{"methods", methods}};
}

std::string to_file_text(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace kdisj
