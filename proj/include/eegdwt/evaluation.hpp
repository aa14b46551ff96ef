#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eegdwt/classifier.hpp"
#include "eegdwt/folds.hpp"
#include "eegdwt/signal.hpp"
#include "eegdwt/wavelet.hpp"

namespace eegdwt {

enum class Target : std::uint8_t { Valence, Arousal };
enum class Mode : std::uint8_t { SubjectDependent, SubjectIndependent };
enum class ModelKind : std::uint8_t { Svm, ValAro, AroVal };

std::string_view target_name(Target t) noexcept;
Target parse_target(std::string_view s);  // "valence"/"val", "arousal"/"aro"
std::string_view mode_name(Mode m) noexcept;
Mode parse_mode(std::string_view s);  // "dependent"/"dep", "independent"/"indep"
std::string_view model_kind_name(ModelKind k) noexcept;
ModelKind parse_model_kind(std::string_view s);  // "svm", "valaro", "aroval"

// Window-level samples with both label dimensions. Every window inherits its
// trial's labels; `trial` identifies the source trial for grouped folds.
struct LabeledSamples {
  Matrix X;
  std::vector<BinaryLabel> valence;
  std::vector<BinaryLabel> arousal;
  std::vector<std::size_t> trial;
  std::vector<int> subject;

  std::size_t size() const noexcept { return X.rows(); }
  const std::vector<BinaryLabel>& labels(Target t) const { return t == Target::Valence ? valence : arousal; }
  LabeledSamples subset(std::span<const std::size_t> rows) const;
};

struct FeatureOptions {
  int tau_s = 3;
  bool baseline_removed = true;
  BoundaryMode mode = BoundaryMode::Symmetric;
};

LabeledSamples build_samples(const std::vector<EegRecording>& recordings, const FeatureOptions& opts);

struct ModelSpec {
  ModelKind kind = ModelKind::Svm;
  RbfParams params = subject_dependent_params();
  SmoOptions smo;
};

// A model fitted on one training portion. For the plain SVM only `svm` is set.
struct FittedModel {
  ModelKind kind = ModelKind::Svm;
  Target target = Target::Valence;
  std::optional<TrainedSvm> svm;
  std::optional<ChainedModel> chained;

  BinaryLabel predict(std::span<const double> x) const;
};

FittedModel fit_model(const LabeledSamples& data, std::span<const std::size_t> rows, Target target,
                      const ModelSpec& spec);

struct CvResult {
  std::vector<double> fold_accuracy;
  double mean = 0.0;
  double stddev = 0.0;  // population
};

// Stratified k-fold; per fold the standardization and model are fitted on the
// training portion only. With `grouped`, windows of one trial share a fold.
CvResult cross_validate(const LabeledSamples& data, Target target, const ModelSpec& spec, std::size_t k,
                        std::uint64_t seed, bool grouped = false);

struct ExperimentConfig {
  Target target = Target::Valence;
  Mode mode = Mode::SubjectDependent;
  std::size_t channels = 32;
  int tau_s = 3;
  bool baseline_removed = true;
  ModelKind model = ModelKind::Svm;
  RbfParams params = subject_dependent_params();
  std::size_t k = 8;
  bool grouped = false;
  // Subject-independent only: grid-search C and gamma on a stratified
  // subsample (6 folds) before the final cross-validation.
  bool tune = false;
  double tune_fraction = 1.0 / 3.0;
  std::size_t tune_k = 6;
  SmoOptions smo;
};

struct SubjectResult {
  std::vector<double> fold_accuracy;
  double mean = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<double> per_fold_accuracy;
  double mean = 0.0;
  double stddev = 0.0;
  std::map<int, SubjectResult> per_subject;  // subject-dependent only
};

// Subject-independent pools every subject's windows into one CV. Subject-
// dependent runs one CV per subject; mean and stddev are taken over subject
// means and per_fold_accuracy concatenates the folds in subject order.
ExperimentReport run_experiment(const std::vector<EegRecording>& dataset, const ExperimentConfig& config,
                                std::uint64_t seed);

double mean_of(std::span<const double> v);
double population_stddev(std::span<const double> v);

// One JSON object per line, fixed key order.
std::string format_report(const ExperimentReport& report);
ExperimentConfig parse_experiment_config(std::string_view json_object);
std::vector<ExperimentConfig> parse_experiment_file(std::string_view json_text);

}  // namespace eegdwt
