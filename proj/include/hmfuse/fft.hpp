#pragma once

#include <complex>
#include <vector>

namespace hmfuse::detail {

/// RAII wrapper around FFTW's 2-D real-to-complex transforms for one grid
/// size. Execution copies through internal buffers, so the same plan pair
/// serves every call; a given instance must not be used from two threads
/// at once.
class Fft2D {
 public:
  Fft2D(int rows, int cols);
  ~Fft2D();
  Fft2D(const Fft2D&) = delete;
  Fft2D& operator=(const Fft2D&) = delete;
  Fft2D(Fft2D&& other) noexcept;
  Fft2D& operator=(Fft2D&&) = delete;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// Stored spectrum columns (cols/2 + 1, Hermitian half).
  int spectrum_cols() const { return cols_ / 2 + 1; }

  /// Row-major real plane -> half spectrum (rows x spectrum_cols).
  void forward(const double* in, std::complex<double>* out) const;
  /// Half spectrum -> row-major real plane, normalized by 1/(rows*cols).
  void inverse(const std::complex<double>* in, double* out) const;

 private:
  int rows_, cols_;
  void* plan_fwd_ = nullptr;
  void* plan_inv_ = nullptr;
  mutable std::vector<double> real_buf_;
  mutable std::vector<std::complex<double>> cplx_buf_;
};

}  // namespace hmfuse::detail
