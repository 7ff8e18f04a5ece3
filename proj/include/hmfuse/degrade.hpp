#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "hmfuse/cube.hpp"
#include "hmfuse/fft.hpp"

namespace hmfuse {

struct Dims {
  Index rows = 0;
  Index cols = 0;
  bool operator==(const Dims&) const = default;
};

/// Generates a normalized (sum 1) Gaussian tap kernel of odd side length.
Matrix gaussian_kernel(int size, double sigma);

/// Spatial degradation operator: per-band circular (periodic) convolution
/// with a normalized kernel followed by keep-every-d-th downsampling with
/// phase offset 0. The circular boundary makes the operator block-circulant,
/// which is what allows the solver and the MAP initializer to invert its
/// normal matrices through FFTs.
class SpatialOperator {
 public:
  SpatialOperator(Matrix kernel, int downsample_factor, Dims input_dims);

  const Matrix& kernel() const { return kernel_; }
  int factor() const { return d_; }
  Dims input_dims() const { return Dims{rows_, cols_}; }
  Dims output_dims() const { return Dims{rows_ / d_, cols_ / d_}; }

  SpectralCube apply(const SpectralCube& cube) const;
  SpectralCube apply_adjoint(const SpectralCube& cube_small) const;
  Matrix apply_plane(const Matrix& plane) const;
  Matrix apply_adjoint_plane(const Matrix& plane_small) const;

  /// Length-N column versions using the canonical pixel flattening.
  void apply_column(const double* fine, double* coarse) const;
  void apply_adjoint_column(const double* coarse, double* fine) const;

  /// Solves (alpha * L^T L + beta * I) x = b on the fine grid in
  /// O(N log N) via the Woodbury identity: the coarse-grid operator
  /// beta*I + alpha*L*L^T is diagonal in the coarse Fourier basis with
  /// eigenvalues beta + alpha * psi, where psi folds the aliased squared
  /// kernel spectrum. Requires alpha >= 0, beta > 0.
  void solve_normal_column(double alpha, double beta, const double* b, double* x) const;
  Matrix solve_normal_plane(double alpha, double beta, const Matrix& rhs) const;

 private:
  Matrix kernel_;
  int d_;
  Index rows_, cols_;

  detail::Fft2D fft_fine_;
  std::unique_ptr<detail::Fft2D> fft_coarse_;           // only when d > 1
  std::vector<std::complex<double>> kernel_spectrum_;   // fine half-grid
  std::vector<double> alias_power_;                     // psi on coarse grid

  double kernel_sqmag(Index r, Index c) const;
  void blur_column(const double* in, double* out, bool adjoint) const;
};

/// Band-extraction operator B mapping the full spectral grid (Z_H bands)
/// to the MS bands (Z_M). Pure selection picks one source band per output
/// band; the weighted form carries a full response matrix with unit column
/// sums.
class BandSelector {
 public:
  static BandSelector pure(std::vector<int> selected, int total_bands);
  static BandSelector weighted(Matrix response);

  bool is_pure() const { return response_.size() == 0; }
  int input_bands() const { return input_bands_; }
  int output_bands() const { return output_bands_; }
  const std::vector<int>& selected() const { return selected_; }

  /// Dense Z_H x Z_M matrix form.
  Matrix dense() const;
  SpectralCube apply(const SpectralCube& cube) const;
  /// (n x Z_H) -> (n x Z_M)
  Matrix apply_to_matrix(const Matrix& m) const;
  Vector apply_to_spectrum(const Vector& spectrum) const;

 private:
  BandSelector() = default;
  std::vector<int> selected_;
  Matrix response_;  // Z_H x Z_M when weighted, empty when pure
  int input_bands_ = 0;
  int output_bands_ = 0;
};

enum class NoiseDistribution { kGaussian, kPoisson };

/// Target-SNR noise injection. target_snr_db = +infinity is the no-noise
/// sentinel. All randomness comes from a counter-based stream keyed by
/// (seed, voxel index), so output is deterministic and independent of any
/// evaluation order.
struct NoiseSpec {
  NoiseDistribution distribution = NoiseDistribution::kGaussian;
  double target_snr_db = 10.0;
  std::uint64_t seed = 0;
};

struct NoiseResult {
  SpectralCube cube;
  Vector band_variances;  // exact injected per-band noise variances
};

NoiseResult add_noise(const SpectralCube& cube, const NoiseSpec& spec);

/// Derives an independent substream seed from a scenario seed and a label
/// (e.g. "noise-h", "noise-m", "band-pick").
std::uint64_t substream_seed(std::uint64_t seed, std::string_view label);

struct SimulatedPair {
  SpectralCube h;
  SpectralCube m;
  Vector lambda_h;  // per-band noise variances of H
  Vector lambda_m;  // per-band noise variances of M
};

/// Full observation model: H = noise(L truth), M = noise(truth B).
SimulatedPair simulate_pair(const SpectralCube& truth, const SpatialOperator& op,
                            const BandSelector& sel, const NoiseSpec& noise_h,
                            const NoiseSpec& noise_m);

}  // namespace hmfuse
