#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eegdwt/signal.hpp"
#include "eegdwt/wavelet.hpp"

namespace eegdwt {

inline constexpr int kBundleFormatVersion = 1;

struct TrialEntry {
  int trial_id = 0;
  Ratings ratings;
  double sample_rate_hz = kStreamRateHz;
  std::vector<std::string> channels;
  std::size_t baseline_samples = 0;
  std::size_t evoked_samples = 0;
  std::string payload;  // file name relative to the bundle directory
};

struct BundleManifest {
  int format_version = kBundleFormatVersion;
  int subject_id = 0;
  std::vector<TrialEntry> trials;
};

std::string manifest_to_text(const BundleManifest& m);
BundleManifest manifest_from_text(std::string_view text);

// A bundle directory holds one subject: a `manifest` text file (JSON) and one
// `trial_<id>.f32` payload per trial. Payloads are IEEE-754 binary32,
// little-endian: the baseline block then the evoked block, each channel-major
// (all samples of channel 0, then channel 1, ...). Samples are narrowed to
// float on write.
void write_bundle(const std::vector<EegRecording>& recordings, const std::filesystem::path& dir);
std::vector<EegRecording> read_bundle(const std::filesystem::path& dir);

// A dataset directory is either a bundle itself or a set of `subject_<id>`
// bundle subdirectories; write_dataset always uses the latter.
void write_dataset(const std::vector<EegRecording>& recordings, const std::filesystem::path& dir);
std::vector<EegRecording> read_dataset(const std::filesystem::path& dir);

// Little-endian float32 encoding of one value.
std::array<unsigned char, 4> encode_f32(float v) noexcept;
float decode_f32(const unsigned char* bytes) noexcept;

// Expected layout of one CSV trial: header row of channel names, one row per
// sample; the first 3 s of rows become the baseline.
struct CsvTrialSpec {
  int subject_id = 0;
  int trial_id = 0;
  Ratings ratings;
  double sample_rate_hz = kStreamRateHz;
  std::vector<std::string> channels;
};

EegRecording import_csv(const std::filesystem::path& path, const CsvTrialSpec& spec);

// Channels x samples from a CSV whose header must list `expected_channels`
// in order. Errors name the offending row and column.
Matrix read_csv_signal(const std::filesystem::path& path, const std::vector<std::string>& expected_channels);

// Manifest-driven import: JSON {"subject_id", "trials": [{"trial_id",
// "valence", "arousal", "sample_rate_hz", "channels", "csv"}]} with csv paths
// relative to the manifest.
std::vector<EegRecording> import_csv_manifest(const std::filesystem::path& manifest_path);

using BandAmplitudes = std::array<double, kBandCount>;  // theta, alpha, beta, gamma

struct SynthSpec {
  std::uint64_t seed = 1;
  int n_subjects = 1;
  int n_trials = 40;
  std::vector<Channel> channels = full_montage();
  double rate_hz = kStreamRateHz;
  int evoked_seconds = kEvokedSeconds;
  BandAmplitudes base_amplitude = {8.0, 10.0, 5.0, 2.5};  // microvolts
  BandAmplitudes valence_effect = {0, 0, 0, 0};  // added when valence is High
  BandAmplitudes arousal_effect = {0, 0, 0, 0};  // added when arousal is High
  std::vector<Channel> effect_channels;  // empty: every channel carries the effect
  double noise_std = 4.0;
  // 0: arousal labels independent of valence. p > 0: arousal agrees with
  // valence on a fraction 0.5 + p/2 of trials.
  double label_coupling = 0.0;
  // Relative per-subject spread of the base amplitudes.
  double subject_variability = 0.0;

  void validate() const;
};

SynthSpec synth_spec_from_json(std::string_view json_text);

// Per trial: balanced binary labels (ratings 3.0 Low / 7.0 High); evoked
// signal is a sum of band-centre sinusoids (6, 12, 24, 48 Hz) with
// class-dependent amplitudes plus white noise; the baseline uses only the
// base amplitudes. Output samples are float-representable.
std::vector<EegRecording> generate_synthetic(const SynthSpec& spec);

inline constexpr std::array<double, kBandCount> kBandCentreHz = {6.0, 12.0, 24.0, 48.0};

}  // namespace eegdwt
