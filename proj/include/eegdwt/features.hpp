#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eegdwt/matrix.hpp"
#include "eegdwt/signal.hpp"
#include "eegdwt/wavelet.hpp"

namespace eegdwt {

enum class Feature : std::uint8_t { Entropy = 0, Energy = 1 };
inline constexpr std::size_t kFeaturesPerBand = 2;
inline constexpr std::size_t kFeaturesPerChannel = kBandCount * kFeaturesPerBand;

// Wavelet entropy and energy per (channel, band), stored in the same
// channel-major, band, feature order that assemble_vector emits.
class BandFeatures {
 public:
  BandFeatures() = default;
  explicit BandFeatures(std::size_t channels) : channels_(channels), values_(channels * kFeaturesPerChannel, 0.0) {}

  std::size_t channels() const noexcept { return channels_; }

  static constexpr std::size_t index(std::size_t channel, SubBand band, Feature f) noexcept {
    return channel * kFeaturesPerChannel + static_cast<std::size_t>(band) * kFeaturesPerBand +
           static_cast<std::size_t>(f);
  }

  double& at(std::size_t channel, SubBand band, Feature f) { return values_[index(channel, band, f)]; }
  double at(std::size_t channel, SubBand band, Feature f) const { return values_[index(channel, band, f)]; }
  double ent(std::size_t channel, SubBand band) const { return at(channel, band, Feature::Entropy); }
  double eng(std::size_t channel, SubBand band) const { return at(channel, band, Feature::Energy); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  bool operator==(const BandFeatures&) const = default;

 private:
  std::size_t channels_ = 0;
  std::vector<double> values_;
};

struct FeatureLayout {
  std::size_t channels = 0;
  std::size_t bands = kBandCount;
  std::size_t features = kFeaturesPerBand;
  std::size_t condition = 0;

  std::size_t size() const noexcept { return channels * bands * features + condition; }
  bool operator==(const FeatureLayout&) const = default;
};

struct FeatureVector {
  std::vector<double> values;
  FeatureLayout layout;
};

// Mean rest-state features over the K = 3 / tau baseline segments.
struct BaselineReference {
  BandFeatures mean;
  int segments = 0;
};

// db4, 4 levels, per channel; D4..D1 become theta..gamma and A4 is dropped.
BandFeatures extract_band_features(const Matrix& samples, BoundaryMode mode = BoundaryMode::Symmetric);
BandFeatures extract_band_features(const Window& window, BoundaryMode mode = BoundaryMode::Symmetric);

// `baseline` must hold exactly 3 s at `rate_hz`.
BaselineReference baseline_reference(const Matrix& baseline, double rate_hz, int tau_s,
                                     BoundaryMode mode = BoundaryMode::Symmetric);

// Feature-wise evoked - reference, applied to entropy and energy alike.
BandFeatures remove_baseline(const BandFeatures& evoked, const BaselineReference& ref);

// Flattens to channel * 8 + band * 2 + feature. Only 5 or 32 channels.
FeatureVector assemble_vector(const BandFeatures& bf);

// Appends the one-hot condition (Low = 0, High = 1) for a chained second stage.
FeatureVector append_condition(const FeatureVector& fv, BinaryLabel label);

// One vector per tumbling window of the evoked signal.
std::vector<FeatureVector> trial_feature_vectors(const EegRecording& rec, int tau_s, bool baseline_removed,
                                                 BoundaryMode mode = BoundaryMode::Symmetric);

// Pearson r; nullopt when either series has zero variance.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

struct ChannelCorrelation {
  Channel channel;
  std::optional<double> r;
};

// Correlates the probe's wavelet-entropy series (one value per trial) in
// `band` with every channel's series. Needs at least two trials.
std::vector<ChannelCorrelation> channel_correlation(std::span<const BandFeatures> trials,
                                                    std::span<const Channel> channels, Channel probe,
                                                    SubBand band);

}  // namespace eegdwt
