#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "eegdwt/classifier.hpp"
#include "eegdwt/signal.hpp"

namespace eegdwt {

// Feature pipeline the model was trained with; the stream service checks it
// against its own configuration.
struct ModelMetadata {
  std::string target;  // "valence" | "arousal"; for chained models the second-stage target
  std::vector<Channel> channels;
  int tau_s = 3;
  bool baseline_removed = true;

  bool operator==(const ModelMetadata&) const = default;
};

// Binary container, little-endian throughout:
//   "EWSVM1" | u32 version | u32 meta_len | meta (JSON, UTF-8)
//   | u64 n_features | u64 n_sv | f64 C | f64 gamma | u8 gamma_from_scale | f64 bias
//   | f64[n_features] mean | f64[n_features] scale
//   | f64[n_sv * n_features] support vectors (row-major) | f64[n_sv] dual coefficients
//   | u64[n_sv] training-row indices
// A chained model is "EWCHN1" | u32 version | u8 direction | u32 meta_len | meta
// followed by two EWSVM1 records (first stage, then second stage).
inline constexpr std::uint32_t kModelFormatVersion = 1;

struct StoredModel {
  ModelMetadata metadata;
  std::variant<TrainedSvm, ChainedModel> model;
};

void write_svm(std::ostream& out, const TrainedSvm& svm, const ModelMetadata& meta);
TrainedSvm read_svm(std::istream& in, ModelMetadata* meta = nullptr);

void write_model(const std::filesystem::path& path, const StoredModel& model);
StoredModel read_model(const std::filesystem::path& path);

std::vector<unsigned char> encode_model(const StoredModel& model);
StoredModel decode_model(const std::vector<unsigned char>& bytes);

}  // namespace eegdwt
