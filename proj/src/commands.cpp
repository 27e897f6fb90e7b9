#include "kdisj/commands.hpp"

#include "kdisj/analysis.hpp"
#include "kdisj/kdisj.hpp"
#include "kdisj/mca.hpp"
#include "kdisj/render.hpp"
#include "kdisj/serialize.hpp"

#include <filesystem>
#include <optional>

namespace fs = std::filesystem;

namespace kdisj {

MapTopology parse_topology(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw InvalidArgument("topology must be line:U or grid:RxC, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    try {
        if (kind == "line") return MapTopology::line(std::stoul(rest));
        if (kind == "grid") {
            const auto x = rest.find('x');
            if (x == std::string::npos) throw InvalidArgument("grid needs RxC");
            return MapTopology::grid(std::stoul(rest.substr(0, x)), std::stoul(rest.substr(x + 1)));
        }
    } catch (const std::logic_error&) {
        throw InvalidArgument("bad topology size in '" + spec + "'");
    }
    throw InvalidArgument("unknown topology kind '" + kind + "'");
}

UnusedModalityPolicy parse_policy(const std::string& name) {
    if (name == "drop") return UnusedModalityPolicy::Drop;
    if (name == "fail") return UnusedModalityPolicy::Fail;
    throw InvalidArgument("unused-policy must be drop or fail, got '" + name + "'");
}

namespace {

struct LoadedData {
    CategoricalDataset dataset;
    DisjunctiveTable disjunctive; // restricted to kept columns
    CorrectedTable corrected;
    DatasetLabels labels;
};

LoadedData load_input(const RunConfig& config) {
    if (!fs::exists(config.input_path))
        throw IoError("input file '" + config.input_path + "' does not exist");
    const std::string text = read_text_file(config.input_path);
    CategoricalDataset ds = ingest_csv(text, {config.has_id});
    DisjunctiveTable d0 = build_disjunctive(ds);
    CorrectResult corrected = correct_table(d0, parse_policy(config.unused_policy), &ds);
    DatasetLabels labels = make_labels(ds, corrected.kept_columns);
    DisjunctiveTable d =
        corrected.dropped_any ? select_columns(d0, corrected.kept_columns) : std::move(d0);
    return {std::move(ds), std::move(d), std::move(corrected.table), std::move(labels)};
}

TrainingSchedule make_schedule(const RunConfig& config, const MapTopology& topology,
                               std::size_t n, std::size_t m) {
    if (config.iters_mult < 1) throw InvalidArgument("--iters-mult must be >= 1");
    const long steps = static_cast<long>(config.iters_mult) * static_cast<long>(n + m);
    const int r0 = config.radius0 >= 0 ? config.radius0 : default_radius0(topology);
    return TrainingSchedule::geometric(steps, r0, config.seed, config.eps0, config.eps_end);
}

fs::path ensure_out_dir(const RunConfig& config) {
    const fs::path dir(config.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + config.out_dir + "'");
    return dir;
}

void write_json(const fs::path& path, const Json& j) {
    write_text_file(path.string(), to_file_text(j));
}

void write_map_files(const fs::path& dir, const KdisjModel& model, const Assignment& assignment,
                     const RenderOptions& options) {
    write_text_file((dir / "map.txt").string(), render_map_text(model, assignment, options));
    write_text_file((dir / "map.svg").string(), render_map_svg(model, assignment, options));
}

} // namespace

void cmd_train(const RunConfig& config) {
    LoadedData data = load_input(config);
    const MapTopology topology = parse_topology(config.topology);
    const TrainingSchedule schedule =
        make_schedule(config, topology, data.corrected.n, data.corrected.m);

    KdisjOptions options;
    options.labels = &data.labels;
    const KdisjModel model = train_kdisj(data.corrected, topology, schedule, options);
    const Assignment assignment = classify(model, data.corrected);
    const DeviationTable dev = deviations(data.disjunctive, assignment.individual_class,
                                          assignment.modality_class, topology.units());

    const fs::path dir = ensure_out_dir(config);
    write_json(dir / "model.json", to_json(model));
    write_json(dir / "assignment.json", to_json(assignment, model.labels));
    write_json(dir / "deviations.json", to_json(dev, model.labels.flat_modality_labels));

    RenderOptions render;
    render.dataset = &data.dataset;
    render.star_modality = config.star_modality;
    render.breakdown_question = config.breakdown_question;
    write_map_files(dir, model, assignment, render);
}

void cmd_mca(const RunConfig& config) {
    LoadedData data = load_input(config);
    const MCAResult res = run_mca(data.corrected);

    const fs::path dir = ensure_out_dir(config);
    write_json(dir / "eigenvalues.json", eigenvalues_json(res));
    write_json(dir / "mca.json", to_json(res));
    write_text_file((dir / "mca.svg").string(),
                    render_mca_svg(res, data.labels.flat_modality_labels));
}

void cmd_compare(const RunConfig& config) {
    LoadedData data = load_input(config);
    const MapTopology topology = parse_topology(config.topology);
    const TrainingSchedule schedule =
        make_schedule(config, topology, data.corrected.n, data.corrected.m);
    const std::size_t n_classes = config.n_classes > 0 ? config.n_classes : topology.units();

    const ComparisonReport report = run_comparison(data.dataset, topology, schedule, n_classes);

    const fs::path dir = ensure_out_dir(config);
    write_json(dir / "report.json", to_json(report));
    write_text_file((dir / "report.txt").string(), render_report_text(report));
}

void cmd_render(const std::string& model_path, const RunConfig& config) {
    if (!fs::exists(model_path)) throw IoError("model file '" + model_path + "' does not exist");
    const KdisjModel model = model_from_json(Json::parse(read_text_file(model_path)));

    const fs::path model_dir = fs::path(model_path).parent_path();
    const fs::path assignment_path = model_dir / "assignment.json";
    if (!fs::exists(assignment_path))
        throw IoError("assignment file '" + assignment_path.string() + "' does not exist");
    const Assignment assignment =
        assignment_from_json(Json::parse(read_text_file(assignment_path.string())), model.labels);

    std::optional<CategoricalDataset> dataset;
    if (!config.input_path.empty()) {
        if (!fs::exists(config.input_path))
            throw IoError("input file '" + config.input_path + "' does not exist");
        dataset = ingest_csv(read_text_file(config.input_path), {config.has_id});
    }

    RenderOptions render;
    render.dataset = dataset ? &*dataset : nullptr;
    render.star_modality = config.star_modality;
    render.breakdown_question = config.breakdown_question;

    const fs::path dir = ensure_out_dir(config);
    write_map_files(dir, model, assignment, render);
}

} // namespace kdisj
