#include "hmfuse/fft.hpp"

#include <fftw3.h>

#include <cstring>

#include "hmfuse/errors.hpp"

namespace hmfuse::detail {

Fft2D::Fft2D(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) {
    throw ParamError("FFT grid dimensions must be positive");
  }
  real_buf_.resize(static_cast<size_t>(rows) * cols);
  cplx_buf_.resize(static_cast<size_t>(rows) * spectrum_cols());
  // FFTW_ESTIMATE keeps planning deterministic and leaves the buffers alone.
  plan_fwd_ = fftw_plan_dft_r2c_2d(rows, cols, real_buf_.data(),
                                   reinterpret_cast<fftw_complex*>(cplx_buf_.data()),
                                   FFTW_ESTIMATE);
  plan_inv_ = fftw_plan_dft_c2r_2d(rows, cols, reinterpret_cast<fftw_complex*>(cplx_buf_.data()),
                                   real_buf_.data(), FFTW_ESTIMATE);
  if (plan_fwd_ == nullptr || plan_inv_ == nullptr) {
    throw NumericalError("FFTW plan creation failed");
  }
}

Fft2D::Fft2D(Fft2D&& other) noexcept
    : rows_(other.rows_),
      cols_(other.cols_),
      plan_fwd_(other.plan_fwd_),
      plan_inv_(other.plan_inv_),
      real_buf_(std::move(other.real_buf_)),
      cplx_buf_(std::move(other.cplx_buf_)) {
  other.plan_fwd_ = nullptr;
  other.plan_inv_ = nullptr;
}

Fft2D::~Fft2D() {
  if (plan_fwd_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  if (plan_inv_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
}

void Fft2D::forward(const double* in, std::complex<double>* out) const {
  std::memcpy(real_buf_.data(), in, real_buf_.size() * sizeof(double));
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  std::memcpy(out, cplx_buf_.data(), cplx_buf_.size() * sizeof(std::complex<double>));
}

void Fft2D::inverse(const std::complex<double>* in, double* out) const {
  std::memcpy(cplx_buf_.data(), in, cplx_buf_.size() * sizeof(std::complex<double>));
  fftw_execute(static_cast<fftw_plan>(plan_inv_));
  const double scale = 1.0 / (static_cast<double>(rows_) * cols_);
  for (size_t i = 0; i < real_buf_.size(); ++i) {
    out[i] = real_buf_[i] * scale;
  }
}

}  // namespace hmfuse::detail
