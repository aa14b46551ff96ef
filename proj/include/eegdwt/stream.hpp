#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eegdwt/classifier.hpp"
#include "eegdwt/features.hpp"
#include "eegdwt/model_io.hpp"
#include "eegdwt/signal.hpp"

namespace eegdwt {

inline constexpr int kStreamProtocolVersion = 1;

enum class BaselineSource : std::uint8_t { FromStream, FromFile };

struct StreamConfig {
  std::vector<Channel> channels;
  double rate_hz = kStreamRateHz;
  int tau_s = 3;
  BaselineSource baseline = BaselineSource::FromStream;
  std::filesystem::path baseline_file;  // CSV, header of channel names, 3 s of rows
  std::filesystem::path valence_model;
  std::filesystem::path arousal_model;
  std::filesystem::path chained_model;  // replaces the pair when set
  std::string listen;                   // "host:port"; empty reads standard input
  std::size_t stats_every = 0;          // windows between stats records; 0 disables

  std::size_t window_samples() const noexcept {
    return static_cast<std::size_t>(tau_s) * static_cast<std::size_t>(rate_hz);
  }
};

// Relative model paths resolve against `base_dir`.
StreamConfig stream_config_from_json(std::string_view json_text, const std::filesystem::path& base_dir = {});

// Buffers one sample per channel per tick and hands back a full window every
// tau * rate ticks. Partial windows are never emitted.
class WindowAccumulator {
 public:
  WindowAccumulator(std::size_t channels, std::size_t window_samples, int tau_s);

  // Throws DomainError when the tick does not have one value per channel.
  std::optional<Window> accumulate(std::span<const double> tick);

  std::size_t fill() const noexcept { return fill_; }
  std::size_t emitted() const noexcept { return emitted_; }

 private:
  Matrix buffer_;
  int tau_s_;
  std::size_t fill_ = 0;
  std::size_t emitted_ = 0;
};

// Models for one session. Either a valence/arousal pair or a chained model.
struct StreamModels {
  std::optional<TrainedSvm> valence;
  std::optional<TrainedSvm> arousal;
  std::optional<ChainedModel> chained;
  bool baseline_removed = true;
  std::size_t channels = 0;

  // Checks every model takes channels * 8 features (+1 for a chained second
  // stage) and that the models agree on baseline removal and window length.
  static StreamModels load(const StreamConfig& cfg);
  static StreamModels from_memory(std::optional<TrainedSvm> valence, std::optional<TrainedSvm> arousal,
                                  std::optional<ChainedModel> chained, std::size_t channels, bool baseline_removed);
};

struct WindowResult {
  std::size_t window = 0;
  BinaryLabel valence = BinaryLabel::Low;
  BinaryLabel arousal = BinaryLabel::Low;
  Quadrant quadrant = Quadrant::Sad;
  double dv_val = 0.0;
  double dv_aro = 0.0;
  double latency_ms = 0.0;
};

// DWT features, baseline removal (when the models expect it), standardization
// and prediction for one window. latency_ms covers this call only.
WindowResult classify_window(const Window& w, const StreamModels& models, const BaselineReference* ref);

std::string format_result(const WindowResult& r);

struct ServeStats {
  std::size_t valid_ticks = 0;
  std::size_t malformed_lines = 0;
  std::size_t windows = 0;  // prediction records written
  double mean_latency_ms = 0.0;
  double max_latency_ms = 0.0;
};

// Reads newline-delimited {"s": [...]} records from `in` and writes one
// prediction record per window to `out`, preceded by a handshake record.
// Malformed lines produce an error record on `err` and are skipped. The
// latency reported per window runs from the window's last tick to emission.
// Returns at end of input or once `stop` is set.
ServeStats serve(const StreamConfig& cfg, const StreamModels& models, std::istream& in, std::ostream& out,
                 std::ostream& err, const std::atomic<bool>* stop = nullptr);

// Accepts TCP clients one at a time on cfg.listen and runs `serve` per
// connection with predictions written back on the socket. `on_listening`
// receives the bound port (useful with port 0). Stops after `max_sessions`
// sessions when non-zero, or when `stop` is set.
void serve_tcp(const StreamConfig& cfg, const StreamModels& models, std::ostream& err,
               const std::function<void(int)>& on_listening = {}, std::size_t max_sessions = 0,
               const std::atomic<bool>* stop = nullptr);

}  // namespace eegdwt
