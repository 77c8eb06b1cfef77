#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "stocknn/errors.hpp"
#include "stocknn/runner.hpp"
#include "testutil.hpp"

using namespace stocknn;
using namespace stocknn::test;

namespace {

// Small monotone universe: labels forced, plus one too-short ticker and one
// with no data file at all.
RunConfig make_fixture(const TempDir& dir, std::size_t epochs = 300) {
    const auto data = dir.path() / "data";
    std::filesystem::create_directories(data);
    std::vector<std::string> universe;
    for (int i = 0; i < 6; ++i) {
        const std::string name = (i % 2 == 0 ? "UP" : "DN") + std::to_string(i);
        write_price_csv(data, name, i % 2 == 0 ? rising_highs(40) : falling_highs(40));
        universe.push_back(name);
    }
    write_price_csv(data, "SHRT", rising_highs(12));
    universe.push_back("SHRT");
    universe.push_back("MISSING");
    write_universe(dir.str("universe.txt"), universe);

    RunConfig cfg;
    cfg.data_dir = data.string();
    cfg.universe_file = dir.str("universe.txt");
    cfg.epochs = epochs;
    cfg.output_path = dir.str("out.jsonl");
    cfg.threads = 2;
    return cfg;
}

}  // namespace

TEST_CASE("load_universe reads one ticker per line, skipping blanks and comments") {
    TempDir dir("universe");
    write_file(dir.str("u.txt"), "AAPL\n\n# index members\nMSFT \n\tGOOG\n");
    auto tickers = load_universe(dir.str("u.txt"));
    CHECK(tickers == std::vector<std::string>{"AAPL", "MSFT", "GOOG"});
    CHECK_THROWS_AS(load_universe(dir.str("nope.txt")), ConfigInvalid);
}

TEST_CASE("run_universe scores monotone tickers and records skips") {
    TempDir dir("run");
    RunConfig cfg = make_fixture(dir);
    auto records = run_universe(cfg);
    // 8 tickers x 2 arms, universe order, experimental before control
    REQUIRE(records.size() == 16);
    CHECK(records[0].ticker == "UP0");
    CHECK(records[0].arm == Arm::experimental);
    CHECK(records[1].ticker == "UP0");
    CHECK(records[1].arm == Arm::control);

    int exp_correct = 0;
    int skipped = 0;
    for (const auto& r : records) {
        if (r.skipped()) {
            ++skipped;
            CHECK((r.ticker == "SHRT" || r.ticker == "MISSING"));
            CHECK_FALSE(r.skip_reason.empty());
        } else if (r.arm == Arm::experimental) {
            exp_correct += r.outcome->correct;
        }
    }
    CHECK(skipped == 4);  // two bad tickers x two arms
    CHECK(exp_correct == 6);
}

TEST_CASE("summary is a pure fold over the outcome file") {
    TempDir dir("fold");
    RunConfig cfg = make_fixture(dir);
    std::ostringstream sink;
    CHECK(cmd_run(cfg, sink) == 0);

    auto records = read_outcomes_jsonl(cfg.output_path);
    REQUIRE(records.size() == 16);
    RunSummary recomputed = summarize(records);

    const std::string summary_text = read_file(summary_path_for(cfg.output_path));
    const std::string again = dir.str("again.json");
    write_summary_json(again, recomputed);
    CHECK(read_file(again) == summary_text);
}

TEST_CASE("cmd_run is byte-identical across repeated runs in both modes") {
    for (HygieneMode mode : {HygieneMode::holdout, HygieneMode::paper_faithful}) {
        TempDir dir(mode == HygieneMode::holdout ? "det_h" : "det_p");
        RunConfig cfg = make_fixture(dir, 150);
        cfg.hygiene_mode = mode;
        std::ostringstream first_out;
        cmd_run(cfg, first_out);
        const std::string first = read_file(cfg.output_path);
        const std::string first_summary = read_file(summary_path_for(cfg.output_path));

        cfg.threads = 1;  // scheduling must not matter
        std::ostringstream second_out;
        cmd_run(cfg, second_out);
        CHECK(read_file(cfg.output_path) == first);
        CHECK(read_file(summary_path_for(cfg.output_path)) == first_summary);
        CHECK(first_out.str() == second_out.str());
    }
}

TEST_CASE("outcome records carry the documented fields") {
    TempDir dir("schema");
    RunConfig cfg = make_fixture(dir, 50);
    std::ostringstream sink;
    cmd_run(cfg, sink);
    const std::string text = read_file(cfg.output_path);
    CHECK(text.find("\"ticker\"") != std::string::npos);
    CHECK(text.find("\"arm\"") != std::string::npos);
    CHECK(text.find("\"decision\"") != std::string::npos);
    CHECK(text.find("\"truth\"") != std::string::npos);
    CHECK(text.find("\"correct\"") != std::string::npos);
    CHECK(text.find("\"skipped\":true") != std::string::npos);
    CHECK(text.find("\"skip_reason\"") != std::string::npos);
    CHECK(text.find("\"experimental\"") != std::string::npos);
    CHECK(text.find("\"control\"") != std::string::npos);
    // one JSON object per line, every line parseable
    auto records = read_outcomes_jsonl(cfg.output_path);
    CHECK(records.size() == 16);
}

TEST_CASE("arms can be restricted") {
    TempDir dir("arms");
    RunConfig cfg = make_fixture(dir, 50);
    cfg.run_control = false;
    auto records = run_universe(cfg);
    CHECK(records.size() == 8);
    for (const auto& r : records) CHECK(r.arm == Arm::experimental);
}

TEST_CASE("config validation fails fast") {
    TempDir dir("cfg");
    RunConfig cfg = make_fixture(dir);
    SUBCASE("missing universe file") {
        cfg.universe_file = dir.str("absent.txt");
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
    SUBCASE("missing data dir") {
        cfg.data_dir = dir.str("absent_dir");
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
    SUBCASE("zero chunk length") {
        cfg.chunk_len = 0;
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
    SUBCASE("zero hidden size") {
        cfg.hidden_size = 0;
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
    SUBCASE("bad learning rate") {
        cfg.learning_rate = 0.0;
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
    SUBCASE("zero epochs") {
        cfg.epochs = 0;
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
    SUBCASE("no arms") {
        cfg.run_experimental = false;
        cfg.run_control = false;
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
    SUBCASE("empty output path") {
        cfg.output_path.clear();
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
}

TEST_CASE("cmd_run leaves no partial files behind") {
    TempDir dir("atomic");
    RunConfig cfg = make_fixture(dir, 50);
    std::ostringstream sink;
    cmd_run(cfg, sink);
    for (const auto& entry : std::filesystem::directory_iterator(dir.path())) {
        CHECK(entry.path().extension() != ".tmp");
    }
}

TEST_CASE("summary_path_for naming") {
    CHECK(summary_path_for("results.jsonl") == "results.summary.json");
    CHECK(summary_path_for("/a/b/run1.jsonl") == "/a/b/run1.summary.json");
    CHECK(summary_path_for("noext") == "noext.summary.json");
}

TEST_CASE("replay reproduces the published chi-squared analyses") {
    std::ostringstream out;
    ReplayReport report = cmd_replay_paper(out);
    CHECK(std::abs(report.control_chi.statistic - 6.272) <= 1e-9);
    CHECK_FALSE(report.control_chi.significant);
    CHECK(std::abs(report.experimental_chi.statistic - 190.755844) / 190.755844 <= 1e-6);
    CHECK(report.experimental_chi.significant);
    CHECK(report.control_chi.critical_value == 6.63);
    CHECK(report.experimental_chi.critical_value == 6.63);
    CHECK(report.control.n_correct == 278);
    CHECK(report.control.n_incorrect == 222);
    CHECK(report.experimental.n_correct == 328);
    CHECK(report.experimental.n_incorrect == 57);
    CHECK(report.experimental.expected_correct == 192.5);
    const std::string text = out.str();
    CHECK(text.find("6.272") != std::string::npos);
    CHECK(text.find("190.755844") != std::string::npos);
    CHECK(text.find("6.63") != std::string::npos);
}

TEST_CASE("text summary reports accuracies and verdicts") {
    TempDir dir("text");
    RunConfig cfg = make_fixture(dir, 50);
    std::ostringstream out;
    cmd_run(cfg, out);
    const std::string text = out.str();
    CHECK(text.find("experimental") != std::string::npos);
    CHECK(text.find("control") != std::string::npos);
    CHECK(text.find("skipped") != std::string::npos);
    CHECK(text.find("chi") != std::string::npos);
}
