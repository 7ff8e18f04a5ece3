#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hmfuse/errors.hpp"

namespace hmfuse {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Pixels-by-bands view of a spectral image. Row i holds the spectrum of
/// pixel i under the canonical pixel order (see SpectralCube).
struct MatrixView {
  Index n_pixels = 0;
  Index n_bands = 0;
  Matrix values;  // n_pixels x n_bands
};

/// 3-D spectral image (rows x cols x bands).
///
/// The canonical flattening used everywhere in this project is row-major
/// over (row, col): pixel i = (i / cols, i % cols). Data is held as an
/// n_pixels x bands matrix so the matrix view is a direct copy and the
/// per-band planes are contiguous columns. Values are 64-bit floats;
/// 32-bit file payloads are widened on load.
class SpectralCube {
 public:
  SpectralCube(Index rows, Index cols, Index bands);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index bands() const { return bands_; }
  Index n_pixels() const { return rows_ * cols_; }

  double at(Index r, Index c, Index b) const { return values_(r * cols_ + c, b); }
  double& at(Index r, Index c, Index b) { return values_(r * cols_ + c, b); }

  const Matrix& values() const { return values_; }
  Matrix& values() { return values_; }

  const std::vector<double>& band_centers() const { return band_centers_; }
  /// Attaches per-band wavenumbers/wavelengths; must be strictly monotonic
  /// with one entry per band. An empty list clears them.
  void set_band_centers(std::vector<double> centers);

  bool all_finite() const { return values_.allFinite(); }
  /// Throws NumericalError naming `stage` if any value is NaN/Inf.
  void require_finite(const char* stage) const;

 private:
  Index rows_, cols_, bands_;
  Matrix values_;
  std::vector<double> band_centers_;
};

MatrixView as_matrix(const SpectralCube& cube);
SpectralCube from_matrix(const MatrixView& m, Index rows, Index cols);
/// rows x cols plane of one band.
Matrix slice_band(const SpectralCube& cube, Index band_index);

}  // namespace hmfuse
