#include "stocknn/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "stocknn/errors.hpp"
#include "stocknn/rng.hpp"

namespace stocknn {

namespace fs = std::filesystem;
using nlohmann::json;

void RunConfig::validate() const {
    if (universe_file.empty() || !fs::is_regular_file(universe_file))
        throw ConfigInvalid("universe file not readable: '" + universe_file + "'");
    if (data_dir.empty() || !fs::is_directory(data_dir))
        throw ConfigInvalid("data dir not a directory: '" + data_dir + "'");
    if (chunk_len == 0) throw ConfigInvalid("chunk length must be positive");
    if (hidden_size == 0) throw ConfigInvalid("hidden size must be positive");
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate))
        throw ConfigInvalid("learning rate must be positive and finite");
    if (epochs == 0) throw ConfigInvalid("epochs must be at least 1");
    if (!run_experimental && !run_control) throw ConfigInvalid("no arms requested");
    if (output_path.empty()) throw ConfigInvalid("output path is empty");
}

std::vector<std::string> load_universe(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("cannot open universe file: '" + path + "'");
    std::vector<std::string> tickers;
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r\n");
        if (start == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r\n");
        std::string ticker = line.substr(start, end - start + 1);
        if (ticker.empty() || ticker.front() == '#') continue;
        tickers.push_back(std::move(ticker));
    }
    return tickers;
}

namespace {

std::vector<TrialRecord> run_ticker(const RunConfig& cfg, const std::string& ticker) {
    std::optional<PriceSeries> series;
    std::string load_error;
    const fs::path csv = fs::path(cfg.data_dir) / (ticker + ".csv");
    try {
        series = parse_price_csv_file(csv.string(), ticker);
    } catch (const Error& e) {
        load_error = e.what();
    }

    std::vector<TrialRecord> records;
    const Arm arms[2] = {Arm::experimental, Arm::control};
    for (Arm arm : arms) {
        if (arm == Arm::experimental && !cfg.run_experimental) continue;
        if (arm == Arm::control && !cfg.run_control) continue;
        TrialRecord record;
        record.ticker = ticker;
        record.arm = arm;
        if (!series) {
            record.skip_reason = load_error;
        } else {
            try {
                if (arm == Arm::experimental) {
                    nn::TrainConfig train_cfg{
                        cfg.learning_rate, cfg.epochs,
                        rng::derive_seed(cfg.master_seed, ticker, rng::kNetworkStream)};
                    record.outcome = run_experimental_trial(*series, train_cfg, cfg.chunk_len,
                                                            cfg.hygiene_mode, cfg.hidden_size);
                } else {
                    record.outcome = run_control_trial(
                        *series, rng::derive_seed(cfg.master_seed, ticker, rng::kControlStream),
                        cfg.chunk_len);
                }
            } catch (const Error& e) {
                record.skip_reason = e.what();
            }
        }
        records.push_back(std::move(record));
    }
    return records;
}

json record_to_json(const TrialRecord& record) {
    json j;
    j["ticker"] = record.ticker;
    j["arm"] = std::string(to_string(record.arm));
    if (record.skipped()) {
        j["decision"] = nullptr;
        j["truth"] = nullptr;
        j["correct"] = nullptr;
        j["skipped"] = true;
        j["skip_reason"] = record.skip_reason;
    } else {
        j["decision"] = record.outcome->decision;
        j["truth"] = record.outcome->truth;
        j["correct"] = record.outcome->correct;
        j["skipped"] = false;
        j["skip_reason"] = nullptr;
    }
    return j;
}

TrialRecord record_from_json(const json& j) {
    TrialRecord record;
    record.ticker = j.at("ticker").get<std::string>();
    const std::string arm = j.at("arm").get<std::string>();
    if (arm == "experimental")
        record.arm = Arm::experimental;
    else if (arm == "control")
        record.arm = Arm::control;
    else
        throw Error("outcome record has unknown arm '" + arm + "'");
    if (j.at("skipped").get<bool>()) {
        record.skip_reason = j.at("skip_reason").get<std::string>();
    } else {
        TrialOutcome outcome;
        outcome.ticker = record.ticker;
        outcome.arm = record.arm;
        outcome.decision = j.at("decision").get<int>();
        outcome.truth = j.at("truth").get<int>();
        outcome.correct = j.at("correct").get<bool>();
        record.outcome = std::move(outcome);
    }
    return record;
}

// Write-to-temp then rename, so an interrupted run never leaves a partial
// file at the destination.
void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailure("cannot open for writing: '" + tmp + "'");
        out << content;
        out.flush();
        if (!out) throw IoFailure("write failed: '" + tmp + "'");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw IoFailure("cannot move '" + tmp + "' to '" + path + "': " + ec.message());
    }
}

std::string format_double(const char* fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, value);
    return buf;
}

}  // namespace

std::vector<TrialRecord> run_universe(const RunConfig& cfg) {
    cfg.validate();
    const std::vector<std::string> tickers = load_universe(cfg.universe_file);

    // Fan out per ticker; slots keep universe order so scheduling never
    // changes the result.
    std::vector<std::vector<TrialRecord>> slots(tickers.size());
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tickers.size()) break;
            slots[i] = run_ticker(cfg, tickers[i]);
        }
    };

    std::size_t n_threads = cfg.threads != 0 ? cfg.threads
                                             : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min(n_threads, std::max<std::size_t>(1, tickers.size()));
    if (n_threads <= 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(drain);
        for (auto& th : pool) th.join();
    }

    std::vector<TrialRecord> records;
    for (auto& slot : slots)
        for (auto& record : slot) records.push_back(std::move(record));
    return records;
}

RunSummary summarize(const std::vector<TrialRecord>& records) {
    RunSummary summary;
    const Arm arms[2] = {Arm::experimental, Arm::control};
    for (Arm arm : arms) {
        ArmSummary arm_summary;
        arm_summary.arm = arm;
        std::vector<TrialOutcome> outcomes;
        bool present = false;
        for (const auto& record : records) {
            if (record.arm != arm) continue;
            present = true;
            if (record.skipped())
                ++arm_summary.skipped;
            else
                outcomes.push_back(*record.outcome);
        }
        if (!present) continue;
        arm_summary.scored = outcomes.size();
        arm_summary.table.arm = arm;
        if (!outcomes.empty()) {
            arm_summary.table = aggregate(outcomes, arm);
            const double observed[2] = {static_cast<double>(arm_summary.table.n_correct),
                                        static_cast<double>(arm_summary.table.n_incorrect)};
            const double expected[2] = {arm_summary.table.expected_correct,
                                        arm_summary.table.expected_incorrect};
            arm_summary.chi = significance_verdict(chi_squared(observed, expected), 1, 0.01);
        }
        summary.arms.push_back(std::move(arm_summary));
    }
    for (const auto& record : records) {
        if (record.skipped())
            summary.skipped.push_back({record.ticker, record.arm, record.skip_reason});
    }
    return summary;
}

void write_outcomes_jsonl(const std::string& path, const std::vector<TrialRecord>& records) {
    std::string content;
    for (const auto& record : records) {
        content += record_to_json(record).dump();
        content += '\n';
    }
    write_atomic(path, content);
}

std::vector<TrialRecord> read_outcomes_jsonl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open outcome file: '" + path + "'");
    std::vector<TrialRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            records.push_back(record_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw Error("outcome file line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

namespace {

json summary_to_json(const RunSummary& summary) {
    json arms = json::object();
    for (const auto& arm_summary : summary.arms) {
        json a;
        a["scored"] = arm_summary.scored;
        a["skipped"] = arm_summary.skipped;
        a["correct"] = arm_summary.table.n_correct;
        a["incorrect"] = arm_summary.table.n_incorrect;
        if (arm_summary.scored > 0) {
            a["accuracy"] = arm_summary.table.accuracy();
            a["expected_correct"] = arm_summary.table.expected_correct;
            a["expected_incorrect"] = arm_summary.table.expected_incorrect;
        } else {
            a["accuracy"] = nullptr;
            a["expected_correct"] = nullptr;
            a["expected_incorrect"] = nullptr;
        }
        if (arm_summary.chi) {
            a["chi_squared"] = arm_summary.chi->statistic;
            a["df"] = arm_summary.chi->df;
            a["critical_value"] = arm_summary.chi->critical_value;
            a["significant"] = arm_summary.chi->significant;
        } else {
            a["chi_squared"] = nullptr;
            a["df"] = nullptr;
            a["critical_value"] = nullptr;
            a["significant"] = nullptr;
        }
        arms[std::string(to_string(arm_summary.arm))] = std::move(a);
    }
    json skips = json::array();
    for (const auto& skip : summary.skipped) {
        json s;
        s["ticker"] = skip.ticker;
        s["arm"] = std::string(to_string(skip.arm));
        s["reason"] = skip.reason;
        skips.push_back(std::move(s));
    }
    json doc;
    doc["arms"] = std::move(arms);
    doc["skipped"] = std::move(skips);
    return doc;
}

}  // namespace

void write_summary_json(const std::string& path, const RunSummary& summary) {
    write_atomic(path, summary_to_json(summary).dump(2) + "\n");
}

std::string render_text_summary(const RunSummary& summary) {
    std::ostringstream out;
    for (const auto& arm_summary : summary.arms) {
        out << to_string(arm_summary.arm) << ": scored " << arm_summary.scored << ", skipped "
            << arm_summary.skipped;
        if (arm_summary.scored > 0) {
            out << ", correct " << arm_summary.table.n_correct << ", incorrect "
                << arm_summary.table.n_incorrect << ", accuracy "
                << format_double("%.4f", arm_summary.table.accuracy());
        }
        out << '\n';
        if (arm_summary.chi) {
            out << "  chi-squared " << format_double("%.6f", arm_summary.chi->statistic)
                << " vs expected " << format_double("%.1f", arm_summary.table.expected_correct)
                << "/" << format_double("%.1f", arm_summary.table.expected_incorrect)
                << ", critical " << format_double("%.2f", arm_summary.chi->critical_value)
                << " (df=1, alpha=0.01) -> "
                << (arm_summary.chi->significant ? "significant, null hypothesis rejected"
                                                 : "not significant")
                << '\n';
        }
    }
    out << "skipped tickers: " << summary.skipped.size() << '\n';
    for (const auto& skip : summary.skipped)
        out << "  " << skip.ticker << " (" << to_string(skip.arm) << "): " << skip.reason << '\n';
    return out.str();
}

std::string summary_path_for(const std::string& outcome_path) {
    fs::path p(outcome_path);
    p.replace_extension();
    return p.string() + ".summary.json";
}

int cmd_run(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    const std::vector<TrialRecord> records = run_universe(cfg);
    write_outcomes_jsonl(cfg.output_path, records);
    const RunSummary summary = summarize(records);
    const std::string summary_path = summary_path_for(cfg.output_path);
    write_summary_json(summary_path, summary);
    out << render_text_summary(summary);
    out << "outcomes: " << cfg.output_path << '\n';
    out << "summary: " << summary_path << '\n';
    return 0;
}

ReplayReport cmd_replay_paper(std::ostream& out) {
    ReplayReport report;
    report.control = ContingencyTable{Arm::control, 278, 222, 250.0, 250.0};
    report.experimental = ContingencyTable{Arm::experimental, 328, 57, 192.5, 192.5};

    auto analyze = [](const ContingencyTable& table) {
        const double observed[2] = {static_cast<double>(table.n_correct),
                                    static_cast<double>(table.n_incorrect)};
        const double expected[2] = {table.expected_correct, table.expected_incorrect};
        return significance_verdict(chi_squared(observed, expected), 1, 0.01);
    };
    report.control_chi = analyze(report.control);
    report.experimental_chi = analyze(report.experimental);

    // Guard the replay against regressions in the stats path: these counts
    // must reproduce the published statistics exactly.
    if (std::abs(report.control_chi.statistic - 6.272) > 1e-9 || report.control_chi.significant)
        throw std::logic_error("control replay diverged from the published statistic");
    if (std::abs(report.experimental_chi.statistic - 190.755844) / 190.755844 > 1e-6 ||
        !report.experimental_chi.significant)
        throw std::logic_error("experimental replay diverged from the published statistic");

    auto print_arm = [&out](const char* name, const ContingencyTable& table,
                            const ChiSquareResult& chi) {
        out << name << ": observed " << table.n_correct << "/" << table.n_incorrect
            << " correct/incorrect, expected " << format_double("%.1f", table.expected_correct)
            << "/" << format_double("%.1f", table.expected_incorrect) << '\n';
        out << "  chi-squared " << format_double("%.6f", chi.statistic) << ", critical "
            << format_double("%.2f", chi.critical_value) << " (df=1, alpha=0.01) -> "
            << (chi.significant ? "significant, null hypothesis rejected" : "not significant")
            << '\n';
    };
    print_arm("control", report.control, report.control_chi);
    print_arm("experimental", report.experimental, report.experimental_chi);
    return report;
}

}  // namespace stocknn
