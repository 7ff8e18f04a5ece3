#include "hmfuse/cube.hpp"

#include <string>

namespace hmfuse {

SpectralCube::SpectralCube(Index rows, Index cols, Index bands)
    : rows_(rows), cols_(cols), bands_(bands) {
  if (rows <= 0 || cols <= 0 || bands <= 0) {
    throw ShapeError("cube dimensions must be positive, got " + std::to_string(rows) + "x" +
                     std::to_string(cols) + "x" + std::to_string(bands));
  }
  values_ = Matrix::Zero(rows * cols, bands);
}

void SpectralCube::set_band_centers(std::vector<double> centers) {
  if (centers.empty()) {
    band_centers_.clear();
    return;
  }
  if (static_cast<Index>(centers.size()) != bands_) {
    throw ShapeError("band_centers length " + std::to_string(centers.size()) +
                     " does not match band count " + std::to_string(bands_));
  }
  for (size_t i = 1; i < centers.size(); ++i) {
    if (!(centers[i] > centers[i - 1]) && !(centers[i] < centers[i - 1])) {
      throw ParamError("band_centers must be strictly monotonic");
    }
    if (i >= 2) {
      const bool up = centers[1] > centers[0];
      if (up != (centers[i] > centers[i - 1])) {
        throw ParamError("band_centers must be strictly monotonic");
      }
    }
  }
  band_centers_ = std::move(centers);
}

void SpectralCube::require_finite(const char* stage) const {
  if (!all_finite()) {
    throw NumericalError(std::string("non-finite values after stage: ") + stage);
  }
}

MatrixView as_matrix(const SpectralCube& cube) {
  return MatrixView{cube.n_pixels(), cube.bands(), cube.values()};
}

SpectralCube from_matrix(const MatrixView& m, Index rows, Index cols) {
  if (m.values.rows() != m.n_pixels || m.values.cols() != m.n_bands) {
    throw ShapeError("inconsistent MatrixView: declared " + std::to_string(m.n_pixels) + "x" +
                     std::to_string(m.n_bands) + ", storage " + std::to_string(m.values.rows()) +
                     "x" + std::to_string(m.values.cols()));
  }
  if (m.n_pixels != rows * cols) {
    throw ShapeError("pixel count " + std::to_string(m.n_pixels) + " does not factor as " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
  SpectralCube cube(rows, cols, m.n_bands);
  cube.values() = m.values;
  return cube;
}

Matrix slice_band(const SpectralCube& cube, Index band_index) {
  if (band_index < 0 || band_index >= cube.bands()) {
    throw ShapeError("band index " + std::to_string(band_index) + " out of range [0, " +
                     std::to_string(cube.bands()) + ")");
  }
  Matrix plane(cube.rows(), cube.cols());
  const auto& v = cube.values();
  for (Index r = 0; r < cube.rows(); ++r) {
    for (Index c = 0; c < cube.cols(); ++c) {
      plane(r, c) = v(r * cube.cols() + c, band_index);
    }
  }
  return plane;
}

}  // namespace hmfuse
