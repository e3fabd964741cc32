#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "textclf/models.hpp"

namespace textclf {

struct EvalReport {
    TaskKind task_kind = TaskKind::PosNeg;
    ModelKind model_kind = ModelKind::NaiveBayes;
    std::size_t n_train = 0;
    std::size_t n_test = 0;
    double accuracy = 0.0;
    std::vector<std::int64_t> confusion;  // K x K row-major, [truth][pred]
    std::size_t n_classes = 0;
    double train_seconds = 0.0;
    double total_seconds = 0.0;
    double data_fraction = 1.0;
    double train_fraction = 0.7;
    std::uint64_t seed = 42;
    std::size_t jobs = 1;
    std::string stop_list_id;
};

struct SweepReport {
    std::vector<double> grid;          // ascending fractions in (0, 1]
    std::vector<EvalReport> reports;   // fraction-major, model-minor
    std::size_t jobs = 1;
};

double accuracy(const std::vector<Label>& predicted, const std::vector<Label>& truth);

std::vector<std::int64_t> confusion_matrix(const std::vector<Label>& predicted,
                                           const std::vector<Label>& truth,
                                           const ClassIndex& class_index);

// Records already loaded from a file, with their 1-based source lines, so a
// sweep can slice line prefixes without re-reading the file.
struct CorpusSource {
    std::vector<ReviewRecord> records;
    std::size_t n_lines_total = 0;  // lines in the file, including skipped ones
    std::size_t skipped = 0;
    TaskKind task = TaskKind::PosNeg;

    static CorpusSource from_file(const std::string& path, TaskKind task,
                                  OnError on_error);
    static CorpusSource from_records(std::vector<ReviewRecord> records, TaskKind task);

    // Records whose source line falls in the first ceil(fraction * N) lines.
    LabeledCorpus prefix(double data_fraction) const;
};

struct ExperimentConfig {
    TaskKind task = TaskKind::PosNeg;
    ModelKind model = ModelKind::NaiveBayes;
    HyperParams hyper;
    double train_fraction = 0.7;
    double data_fraction = 1.0;
    const StopList* stoplist = nullptr;  // null = shipped English list
    std::size_t jobs = 1;                // recorded in the report only
};

// Takes the data-fraction prefix, splits it contiguously, fits the pipeline
// on the train range and scores the test range. train_seconds times
// pipeline_fit; total_seconds adds prediction and scoring.
EvalReport run_experiment(const CorpusSource& source, const ExperimentConfig& config);

// One run_experiment per (fraction, model), same seed everywhere. Grid
// points run on up to `jobs` threads; report order is fraction-major.
SweepReport fraction_sweep(const CorpusSource& source,
                           const std::vector<ModelKind>& model_kinds,
                           const ExperimentConfig& base_config,
                           const std::vector<double>& grid);

std::vector<double> default_sweep_grid();  // 0.1, 0.2, ..., 1.0

// "92.90%" from 0.9290; "178.52" from 178.52.
std::string format_percent(double fraction);
std::string format_seconds(double seconds);

}  // namespace textclf
