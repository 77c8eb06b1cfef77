#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stocknn/errors.hpp"
#include "stocknn/runner.hpp"

namespace {

int run_subcommand(const stocknn::RunConfig& cfg) {
    try {
        return stocknn::cmd_run(cfg, std::cout);
    } catch (const stocknn::ConfigInvalid& e) {
        std::cerr << "error: invalid configuration: " << e.what() << '\n';
        return 1;
    } catch (const stocknn::IoFailure& e) {
        std::cerr << "error: I/O failure: " << e.what() << '\n';
        return 1;
    }
}

int replay_subcommand(const std::string& out_path) {
    try {
        const stocknn::ReplayReport report = stocknn::cmd_replay_paper(std::cout);
        if (!out_path.empty()) {
            // Reuse the run summary layout for the machine-readable copy.
            stocknn::RunSummary summary;
            summary.arms.push_back({stocknn::Arm::experimental, report.experimental.total(), 0,
                                    report.experimental, report.experimental_chi});
            summary.arms.push_back({stocknn::Arm::control, report.control.total(), 0,
                                    report.control, report.control_chi});
            stocknn::write_summary_json(out_path, summary);
            std::cout << "summary: " << out_path << '\n';
        }
        return 0;
    } catch (const stocknn::IoFailure& e) {
        std::cerr << "error: I/O failure: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Buy/sell decision trials for daily-high price series"};
    app.require_subcommand(1);
    app.set_config("--config")->description("read options from an INI/TOML file");

    stocknn::RunConfig cfg;
    std::string mode = "holdout";
    std::string arms = "both";

    CLI::App* run = app.add_subcommand(
        "run", "train and score both trial arms over a ticker universe");
    run->add_option("--data-dir", cfg.data_dir, "directory with <TICKER>.csv price files")
        ->required();
    run->add_option("--universe", cfg.universe_file, "file listing one ticker per line")
        ->required();
    run->add_option("--out", cfg.output_path, "outcome file (JSON lines); the summary is "
                                              "written next to it")
        ->required();
    run->add_option("--chunk-len", cfg.chunk_len, "days per window")->capture_default_str();
    run->add_option("--hidden", cfg.hidden_size, "hidden layer width")->capture_default_str();
    run->add_option("--lr", cfg.learning_rate, "gradient descent learning rate")
        ->capture_default_str();
    run->add_option("--epochs", cfg.epochs, "full-batch training epochs")->capture_default_str();
    run->add_option("--seed", cfg.master_seed, "master seed; per-ticker seeds derive from it")
        ->capture_default_str();
    run->add_option("--mode", mode, "test-example hygiene")
        ->check(CLI::IsMember({"holdout", "paper-faithful"}))
        ->capture_default_str();
    run->add_option("--arms", arms, "which trial arms to run")
        ->check(CLI::IsMember({"both", "experimental", "control"}))
        ->capture_default_str();
    run->add_option("--threads", cfg.threads, "worker threads (0 = all cores)")
        ->capture_default_str();

    CLI::App* replay = app.add_subcommand(
        "replay-paper", "recompute the chi-squared analysis of the published counts");
    std::string replay_out;
    replay->add_option("--out", replay_out, "optional JSON summary path");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        cfg.hygiene_mode = mode == "paper-faithful" ? stocknn::HygieneMode::paper_faithful
                                                    : stocknn::HygieneMode::holdout;
        cfg.run_experimental = arms != "control";
        cfg.run_control = arms != "experimental";
        return run_subcommand(cfg);
    }
    return replay_subcommand(replay_out);
}
