#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eegdwt/matrix.hpp"
#include "eegdwt/signal.hpp"

namespace eegdwt {

struct RbfParams {
  double C = 1.0;
  std::optional<double> gamma;  // empty: scale from the training data

  bool operator==(const RbfParams&) const = default;
};

// The subject-dependent configuration: C = 200, gamma scaled to the data.
inline RbfParams subject_dependent_params() { return {200.0, std::nullopt}; }

// Per-feature z-scoring fitted on training data. Zero-variance features keep
// a unit scale so they map to 0.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;

  static Standardizer fit(const Matrix& X);
  static Standardizer identity(std::size_t dim);

  std::size_t dimension() const noexcept { return mean.size(); }
  std::vector<double> apply(std::span<const double> x) const;
  Matrix apply(const Matrix& X) const;

  bool operator==(const Standardizer&) const = default;
};

struct SolverStats {
  std::size_t iterations = 0;
  double kkt_gap = 0.0;  // max violating pair gap at exit
};

struct TrainedSvm {
  Matrix support_vectors;  // in standardized space
  std::vector<double> dual_coeffs;  // alpha_i * y_i
  std::vector<std::size_t> support_indices;  // rows of the training matrix
  double bias = 0.0;
  double C = 1.0;
  double gamma = 1.0;
  bool gamma_from_scale = false;
  Standardizer standardization;
  SolverStats stats;

  std::size_t dimension() const noexcept { return standardization.dimension(); }

  // sum_i coeff_i K(sv_i, z) + bias with z the standardized input.
  double decision_value(std::span<const double> x) const;
  // Same, for an input that is already standardized.
  double decision_value_standardized(std::span<const double> z) const;
};

struct SmoOptions {
  double tol = 1e-3;           // max violating pair gap
  std::size_t max_passes = 0;  // iteration cap is max_passes * n; 0 means 10 * n passes
  bool standardize = true;
  double cache_mb = 256.0;
};

struct Prediction {
  BinaryLabel label = BinaryLabel::Low;
  double decision = 0.0;
};

double rbf_kernel(std::span<const double> x, std::span<const double> y, double gamma);

// 1 / (n_features * variance of every entry of X pooled). Needs >= 2 rows and
// non-zero variance.
double gamma_scale(const Matrix& X);

// Soft-margin C-SVC dual solved by sequential minimal optimization with
// second-order working-pair selection. Pair selection is deterministic (no
// random component), ties resolving to the highest index.
TrainedSvm train_smo(const Matrix& X, std::span<const BinaryLabel> y, const RbfParams& params,
                     const SmoOptions& options = {});

// High iff decision value > 0; exactly 0 is Low.
Prediction predict(const TrainedSvm& model, std::span<const double> x);

enum class ChainDirection : std::uint8_t {
  ValAro,  // first stage predicts arousal, second predicts valence | arousal
  AroVal,  // first stage predicts valence, second predicts arousal | valence
};

std::string_view chain_direction_name(ChainDirection d) noexcept;
ChainDirection parse_chain_direction(std::string_view name);

struct ChainedModel {
  ChainDirection direction = ChainDirection::ValAro;
  TrainedSvm first;
  TrainedSvm second;
};

// The second stage is trained on ground-truth condition labels; at inference
// it receives the first stage's prediction.
ChainedModel train_chained(const Matrix& X, std::span<const BinaryLabel> y_val, std::span<const BinaryLabel> y_aro,
                           ChainDirection direction, const RbfParams& params, const SmoOptions& options = {});

struct ChainedPrediction {
  Prediction valence;
  Prediction arousal;
};

ChainedPrediction predict_chained(const ChainedModel& model, std::span<const double> x);

enum class Quadrant : std::uint8_t { Happy, Angry, Sad, Relaxed };

Quadrant quadrant_of(BinaryLabel valence, BinaryLabel arousal) noexcept;
std::string_view quadrant_name(Quadrant q) noexcept;

struct GridCell {
  RbfParams params;
  std::vector<double> fold_accuracy;
  double mean_accuracy = 0.0;
};

struct GridSearchResult {
  RbfParams best;
  std::vector<GridCell> table;  // C-major, in grid order
};

// C and g values searched for subject-independent models.
const std::vector<double>& default_c_grid();
const std::vector<double>& default_gamma_grid();

// Index of the best cell: highest mean accuracy, ties to smaller C then
// smaller gamma (a scaled gamma counts as smallest).
std::size_t select_best_cell(std::span<const GridCell> table);

GridSearchResult grid_search(const Matrix& X, std::span<const BinaryLabel> y, std::span<const double> c_values,
                             std::span<const std::optional<double>> gamma_values, std::size_t k,
                             std::uint64_t seed, const SmoOptions& options = {});

}  // namespace eegdwt
