#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stocknn/dataset.hpp"
#include "stocknn/stats.hpp"
#include "stocknn/trials.hpp"

namespace stocknn {

// Configuration for a full universe run. Numeric defaults mirror the
// structural parameters of the replicated experiment: 10-day windows, 20
// hidden neurons, 2 outputs.
struct RunConfig {
    std::string data_dir;
    std::string universe_file;
    std::size_t chunk_len = 10;
    std::size_t hidden_size = 20;
    double learning_rate = 0.5;
    std::size_t epochs = 1000;
    std::uint64_t master_seed = 0;
    HygieneMode hygiene_mode = HygieneMode::holdout;
    bool run_experimental = true;
    bool run_control = true;
    std::string output_path;  // JSON-lines outcomes; summary written next to it
    std::size_t threads = 0;  // 0 = hardware concurrency

    void validate() const;  // throws ConfigInvalid
};

struct SkipEntry {
    std::string ticker;
    Arm arm = Arm::experimental;
    std::string reason;
};

struct ArmSummary {
    Arm arm = Arm::experimental;
    std::size_t scored = 0;
    std::size_t skipped = 0;
    ContingencyTable table;                // counts are zero when nothing scored
    std::optional<ChiSquareResult> chi;    // absent when nothing scored
};

// Everything in the summary is a pure fold over the outcome records, so a
// report can always be recomputed from the outcome file alone.
struct RunSummary {
    std::vector<ArmSummary> arms;
    std::vector<SkipEntry> skipped;
};

// One ticker symbol per line; blank lines and '#' comments ignored.
// Throws ConfigInvalid if the file cannot be read.
std::vector<std::string> load_universe(const std::string& path);

// Runs the requested arms over every universe ticker. Per-ticker data
// errors become skip records, never aborts. Record order is universe order
// (experimental line before control line per ticker) regardless of how the
// per-ticker work is scheduled.
std::vector<TrialRecord> run_universe(const RunConfig& cfg);

RunSummary summarize(const std::vector<TrialRecord>& records);

// Outcome file: one JSON object per line with fields
// {ticker, arm, decision, truth, correct, skipped, skip_reason}.
void write_outcomes_jsonl(const std::string& path, const std::vector<TrialRecord>& records);
std::vector<TrialRecord> read_outcomes_jsonl(const std::string& path);

void write_summary_json(const std::string& path, const RunSummary& summary);
std::string render_text_summary(const RunSummary& summary);

// results.jsonl -> results.summary.json
std::string summary_path_for(const std::string& outcome_path);

// End-to-end run: ingest, trial, aggregate, test, report. Writes the
// outcome file and summary JSON atomically and prints the text summary to
// `out`. Returns 0 on success; throws ConfigInvalid / IoFailure.
int cmd_run(const RunConfig& cfg, std::ostream& out);

// The published counts replayed through the stats path: control 278/222
// against 250/250 expected, experimental 328/57 against 192.5/192.5.
struct ReplayReport {
    ContingencyTable control;
    ChiSquareResult control_chi;
    ContingencyTable experimental;
    ChiSquareResult experimental_chi;
};

// Recomputes both chi-squared analyses from the fixed published counts and
// verifies the reported statistics (6.272 and 190.755844) and verdicts.
// Prints a text report to `out`.
ReplayReport cmd_replay_paper(std::ostream& out);

}  // namespace stocknn
