#include "kdisj/commands.hpp"
#include "kdisj/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common_flags(CLI::App* cmd, kdisj::RunConfig& config, bool needs_input = true) {
    auto* input = cmd->add_option("--input", config.input_path, "input CSV file");
    if (needs_input) input->required();
    cmd->add_flag("--has-id", config.has_id, "first CSV column is the individual id");
    cmd->add_option("--out", config.out_dir, "output directory");
    cmd->add_option("--unused-policy", config.unused_policy, "drop|fail for never-chosen modalities");
}

void add_training_flags(CLI::App* cmd, kdisj::RunConfig& config) {
    cmd->add_option("--topology", config.topology, "line:U or grid:RxC");
    cmd->add_option("--iters-mult", config.iters_mult, "steps per table row+column");
    cmd->add_option("--eps0", config.eps0, "initial adaptation parameter");
    cmd->add_option("--eps-end", config.eps_end, "final adaptation parameter");
    cmd->add_option("--radius0", config.radius0, "initial neighborhood radius");
    cmd->add_option("--seed", config.seed, "random seed");
}

void add_render_flags(CLI::App* cmd, kdisj::RunConfig& config) {
    cmd->add_option("--star-modality", config.star_modality,
                    "star cells over-representing this modality");
    cmd->add_option("--breakdown", config.breakdown_question,
                    "question whose counts annotate each cell");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simultaneous Kohonen classification of survey individuals and their modalities"};
    app.require_subcommand(1);

    kdisj::RunConfig config;
    std::string model_path;

    auto* train = app.add_subcommand("train", "train a dual-space map and write its artifacts");
    add_common_flags(train, config);
    add_training_flags(train, config);
    add_render_flags(train, config);

    auto* mca = app.add_subcommand("mca", "factorial analysis of the corrected table");
    add_common_flags(mca, config);

    auto* compare = app.add_subcommand("compare", "four-method comparison report");
    add_common_flags(compare, config);
    add_training_flags(compare, config);
    compare->add_option("--classes", config.n_classes, "class count for the hierarchical cut");

    auto* render = app.add_subcommand("render", "regenerate map.txt/map.svg from a stored model");
    render->add_option("--model", model_path, "path to model.json")->required();
    add_common_flags(render, config, /*needs_input=*/false);
    add_render_flags(render, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (train->parsed()) kdisj::cmd_train(config);
        else if (mca->parsed()) kdisj::cmd_mca(config);
        else if (compare->parsed()) kdisj::cmd_compare(config);
        else if (render->parsed()) kdisj::cmd_render(model_path, config);
        return 0;
    } catch (const kdisj::ComputeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const kdisj::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
