#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "textclf/corpus.hpp"
#include "textclf/features.hpp"

namespace textclf {

enum class ModelKind : std::uint8_t { NaiveBayes = 0, SgdSvm = 1, LogisticRegression = 2 };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& s);

// Distinct labels observed at fit time, sorted ascending (negative <
// positive; stars 1..5).
struct ClassIndex {
    std::vector<Label> classes;

    static ClassIndex from_labels(const std::vector<Label>& y);
    static ClassIndex for_task(TaskKind task);  // full class set of the task

    std::size_t size() const { return classes.size(); }
    std::size_t index_of(const Label& label) const;  // throws DimensionMismatch
};

struct HyperParams {
    double nb_alpha = 1.0;
    double l2_strength = 1e-4;  // per-example lambda for both SVM and LR
    std::size_t epochs = 5;     // SGD epochs
    std::uint64_t seed = 42;
    double sgd_t0 = 0.0;        // inverse-scaling offset; 0 = auto (1/lambda)
    double tolerance = 1e-6;    // LR gradient infinity-norm stop
    std::size_t max_iter = 1000;
};

struct NBModel {
    ClassIndex class_index;
    std::vector<double> log_prior;       // K
    std::vector<double> log_likelihood;  // K x V row-major
    double alpha = 1.0;
    std::size_t n_features = 0;
};

enum class LinearKind : std::uint8_t { HingeSvm = 0, Logistic = 1 };

struct LinearModel {
    LinearKind kind = LinearKind::HingeSvm;
    ClassIndex class_index;
    std::size_t n_features = 0;
    std::vector<double> weights;  // rows x V row-major; 1 row for binary SVM
    std::vector<double> bias;     // rows
    HyperParams hyper;
    bool converged = true;  // LR only; SGD always true

    std::size_t n_weight_rows() const { return bias.size(); }
};

NBModel nb_fit(const WeightMatrix& x, const std::vector<Label>& y, double alpha);
std::vector<Label> nb_predict(const NBModel& model, const WeightMatrix& x);

// One-vs-rest hinge-loss SGD (a single weight row when K == 2). Per class c
// the objective is (lambda/2)||w||^2 + (1/n) sum max(0, 1 - y_i (w.x_i + b))
// with y_i in {-1,+1}; learning rate eta_t = 1 / (lambda (t0 + t)), row
// order reshuffled each epoch from hyper.seed; the bias is not regularized.
LinearModel svm_fit(const WeightMatrix& x, const std::vector<Label>& y,
                    const HyperParams& hyper);

// Multinomial softmax with (lambda/2)||W||^2 (bias unregularized), full-batch
// gradient descent with backtracking line search. Non-convergence is not an
// error; the best iterate is returned with converged = false.
LinearModel lr_fit(const WeightMatrix& x, const std::vector<Label>& y,
                   const HyperParams& hyper);

std::vector<Label> linear_predict(const LinearModel& model, const WeightMatrix& x);

// Objective/score helpers exposed for tests.
double lr_objective(const WeightMatrix& x, const std::vector<std::size_t>& y_idx,
                    std::size_t n_classes, const std::vector<double>& weights,
                    const std::vector<double>& bias, double lambda);
void lr_gradient(const WeightMatrix& x, const std::vector<std::size_t>& y_idx,
                 std::size_t n_classes, const std::vector<double>& weights,
                 const std::vector<double>& bias, double lambda,
                 std::vector<double>& grad_w, std::vector<double>& grad_b);

// Dense per-row class scores (n_rows x K), row-parallel.
std::vector<double> nb_scores(const NBModel& model, const WeightMatrix& x);
std::vector<double> linear_scores(const LinearModel& model, const WeightMatrix& x);

namespace serial {
std::vector<double> nb_scores(const NBModel& model, const WeightMatrix& x);
std::vector<double> linear_scores(const LinearModel& model, const WeightMatrix& x);
}  // namespace serial

using Classifier = std::variant<NBModel, LinearModel>;

// Frozen vocabulary + idf + classifier; applying it never refits anything.
struct TrainedPipeline {
    TaskKind task_kind = TaskKind::PosNeg;
    ModelKind model_kind = ModelKind::NaiveBayes;
    std::string stop_list_id;
    Vocabulary vocabulary;
    IdfVector idf;
    Classifier classifier;
    HyperParams hyper;
};

TrainedPipeline pipeline_fit(const LabeledCorpus& corpus, ModelKind model_kind,
                             const HyperParams& hyper, const StopList& stoplist);

std::vector<Label> pipeline_predict(const TrainedPipeline& pipeline,
                                    const std::vector<std::string>& texts);

// The frozen transform half of the pipeline (tokens -> counts -> tf-idf).
// Stop words never survive into the vocabulary, so out-of-vocabulary
// dropping already removes them here.
WeightMatrix pipeline_transform(const TrainedPipeline& pipeline,
                                const std::vector<std::string>& texts);

}  // namespace textclf
