#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace eegdwt {

// Orthogonal two-channel analysis filter pair. highpass[n] = (-1)^n lowpass[L-1-n].
struct WaveletFilter {
  std::vector<double> lowpass;
  std::vector<double> highpass;

  std::size_t length() const noexcept { return lowpass.size(); }
};

// The 8-tap Daubechies db4 pair (4 vanishing moments).
const WaveletFilter& db4_filter();

// Builds the quadrature-mirror highpass for an orthogonal lowpass.
WaveletFilter make_orthogonal_filter(std::vector<double> lowpass);

enum class BoundaryMode : std::uint8_t {
  // Circular extension; N/2 coefficients per level, orthonormal for even N.
  Periodization,
  // Half-sample symmetric extension; floor((N + L - 1) / 2) coefficients.
  Symmetric,
};

std::string_view boundary_mode_name(BoundaryMode mode) noexcept;

struct DwtDecomposition {
  std::vector<double> approx;                // A_L
  std::vector<std::vector<double>> details;  // details[0] = D1 (finest) .. details[L-1] = D_L
  BoundaryMode mode = BoundaryMode::Symmetric;
  std::size_t input_length = 0;

  std::size_t levels() const noexcept { return details.size(); }
  const std::vector<double>& detail(int level) const { return details.at(static_cast<std::size_t>(level - 1)); }
};

// Length of the coefficient series produced by one analysis step.
std::size_t dwt_coeff_length(std::size_t input_length, std::size_t filter_length, BoundaryMode mode);

// Multi-level cascade: filter, keep every second output, recurse on the
// approximation. Throws DomainError when the signal is shorter than 2^levels.
DwtDecomposition dwt_decompose(std::span<const double> signal, int levels, const WaveletFilter& filter,
                               BoundaryMode mode);

// Inverse of dwt_decompose for the same filter and mode.
std::vector<double> idwt_reconstruct(const DwtDecomposition& d, const WaveletFilter& filter);

enum class SubBand : std::uint8_t { Theta = 0, Alpha = 1, Beta = 2, Gamma = 3 };

inline constexpr std::size_t kBandCount = 4;
inline constexpr std::array<SubBand, kBandCount> kBands = {SubBand::Theta, SubBand::Alpha, SubBand::Beta,
                                                           SubBand::Gamma};
inline constexpr int kDwtLevels = 4;

std::string_view band_name(SubBand band) noexcept;
SubBand parse_band(std::string_view name);

struct BandRange {
  SubBand band;
  double lo_hz;
  double hi_hz;
};

// Dyadic mapping of detail levels at 128 Hz: D1 gamma (32-64), D2 beta
// (16-32), D3 alpha (8-16), D4 theta (4-8).
BandRange band_of_level(int level, double rate_hz);
int level_of_band(SubBand band) noexcept;

// -sum c^2 ln(c^2), with 0 ln 0 taken as 0.
double wavelet_entropy(std::span<const double> coeffs);
// sum c^2
double wavelet_energy(std::span<const double> coeffs);

}  // namespace eegdwt
