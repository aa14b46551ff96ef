#pragma once

#include <span>
#include <vector>

namespace eegdwt {

// Direct-form II transposed second-order section, a0 normalised to 1.
struct Biquad {
  double b0 = 1, b1 = 0, b2 = 0;
  double a1 = 0, a2 = 0;
};

using SosFilter = std::vector<Biquad>;

// Digital Butterworth band-pass designed by bilinear transform with
// pre-warped edges. `order` is the low-pass prototype order, so the result
// has 2*order poles arranged as `order` second-order sections, normalised to
// unit gain at the geometric centre frequency.
SosFilter butterworth_bandpass(int order, double low_hz, double high_hz, double rate_hz);

// |H(e^{jw})| of the cascade at frequency f.
double magnitude_response(const SosFilter& sos, double freq_hz, double rate_hz);

std::vector<double> sos_filter(const SosFilter& sos, std::span<const double> x);

// Forward-backward filtering with odd-reflection padding at both ends. The
// effective magnitude response is |H|^2 with zero phase.
std::vector<double> sos_filtfilt(const SosFilter& sos, std::span<const double> x);

}  // namespace eegdwt
