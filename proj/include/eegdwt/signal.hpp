#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eegdwt/matrix.hpp"

namespace eegdwt {

// Electrodes of the 32-channel 10-20 montage, in recording order.
enum class Channel : std::uint8_t {
  FP1, AF3, F3, F7, FC5, FC1, C3, T7, CP5, CP1, P3, P7, PO3, O1, OZ, PZ,
  FP2, AF4, FZ, F4, F8, FC6, FC2, CZ, C4, T8, CP6, CP2, P4, P8, PO4, O2,
};

inline constexpr std::size_t kChannelCount = 32;

std::string_view channel_name(Channel ch) noexcept;

// Case-insensitive ("Pz" and "PZ" both parse). Throws DomainError naming the
// label when it is not one of the 32 montage electrodes.
Channel parse_channel(std::string_view name);

std::vector<Channel> parse_channels(const std::vector<std::string>& names);
std::vector<std::string> channel_names(std::span<const Channel> channels);

// All 32 channels in montage order.
const std::vector<Channel>& full_montage();
// AF3, T7, PZ, AF4, T8: the electrodes of a 5-channel consumer headset.
const std::vector<Channel>& reduced_montage();

inline constexpr double kStreamRateHz = 128.0;
inline constexpr double kRawRateHz = 512.0;
inline constexpr int kBaselineSeconds = 3;
inline constexpr int kEvokedSeconds = 60;

struct Ratings {
  double valence = 5.0;
  double arousal = 5.0;

  bool operator==(const Ratings&) const = default;
};

enum class BinaryLabel : std::uint8_t { Low = 0, High = 1 };

inline constexpr char label_char(BinaryLabel l) noexcept { return l == BinaryLabel::High ? 'H' : 'L'; }
inline constexpr double label_value(BinaryLabel l) noexcept { return l == BinaryLabel::High ? 1.0 : 0.0; }

struct EegRecording {
  int subject_id = 0;
  int trial_id = 0;
  double sample_rate_hz = kStreamRateHz;
  std::vector<Channel> channels;
  Matrix baseline;  // channels x (3 s * rate)
  Matrix evoked;    // channels x (60 s * rate) for a complete trial
  Ratings ratings;

  std::size_t baseline_samples() const noexcept { return baseline.cols(); }
  std::size_t evoked_samples() const noexcept { return evoked.cols(); }

  // Throws DataError when the channel list and the matrices disagree, the
  // baseline is not exactly 3 s, or the ratings are outside [1, 9].
  void validate() const;

  bool operator==(const EegRecording&) const = default;
};

struct Window {
  std::size_t index = 0;
  int tau_s = 1;
  Matrix samples;  // channels x (tau * rate)
};

// High iff rating > 5. A rating of exactly 5 is Low.
BinaryLabel binarize_rating(double rating);

EegRecording select_channels(const EegRecording& rec, std::span<const Channel> subset);

// Subtracts the instantaneous cross-channel mean from every channel.
Matrix common_average_reference(const Matrix& m);

// 512 Hz -> 128 Hz: zero-phase 4th-order Butterworth band-pass (4-45 Hz)
// followed by keeping every 4th sample. A tail that is not a multiple of 4 is
// dropped with a warning on std::clog.
Matrix preprocess_raw(const Matrix& m, double input_rate_hz);

// Channel selection, band-pass and decimation (512 Hz input only), then
// common average referencing. Baseline and evoked are filtered as one
// continuous signal so the 3 s boundary stays sample-exact. A native 128 Hz
// recording is only re-referenced when `car_native` is set.
EegRecording preprocess_recording(const EegRecording& rec, std::span<const Channel> subset,
                                  bool car_native = false);

// Tumbling, non-overlapping windows of tau_s seconds over the evoked signal.
std::vector<Window> segment_windows(const EegRecording& rec, int tau_s);
// Same tiling over an arbitrary channels x samples matrix.
std::vector<Window> segment_matrix(const Matrix& m, double rate_hz, int tau_s);

}  // namespace eegdwt
