#pragma once

#include <fftw3.h>

#include <array>
#include <cmath>
#include <cstring>
#include <memory>
#include <mutex>
#include <vector>

#include "skg/common.hpp"
#include "skg/quadrature.hpp"

namespace skg {

// Uniform periodic grid on [-L/2,L/2)^3 with N points per axis (N even),
// storage row-major with z fastest. Momentum lattice k = (2pi/L) * c,
// c in {-N/2,...,N/2-1} per axis, in the same centered ordering.
//
// Transform conventions (continuum-normalized Riemann sums):
//   forward:  psi_hat(k) = sum_x e^{-i k x} psi(x) dx^3
//   inverse:  psi(x)     = sum_k e^{+i k x} psi_hat(k) dk/(2pi)^3
// so that Parseval reads sum_x |psi|^2 dx^3 = sum_k |psi_hat|^2 dk/(2pi)^3.
//
// The dispersion omega(k)=|k| is regularized at the zero mode by the cell
// average omega0 = (1/dk) int_cell |k| dk; all powers omega^s use omega0^s
// there, so the stationarity relation omega*phi + sigma = 0 is exactly
// attainable on the lattice.
class Grid {
 public:
  Grid(double box_length, int points_per_axis)
      : L(box_length), N(points_per_axis) {
    if (N < 8 || N % 2 != 0) throw ConfigError("grid: N must be even and >= 8");
    if (!(L > 0)) throw ConfigError("grid: L must be positive");
    n3 = static_cast<std::size_t>(N) * N * N;
    dx = L / N;
    dk1 = 2.0 * pi / L;
    dk = dk1 * dk1 * dk1;
    dx3 = dx * dx * dx;
    omega0 = cell_power_average(1.0, dk1);

    axis_k.resize(N);
    for (int i = 0; i < N; ++i) axis_k[i] = (i - N / 2) * dk1;
    axis_x.resize(N);
    for (int i = 0; i < N; ++i) axis_x[i] = (i - N / 2) * dx;

    k2_.resize(n3);
    omega_.resize(n3);
    dealias_.resize(n3);
    const int cmax = (N - 1) / 3;  // 2/3 rule: keep |c| <= floor((N-1)/3)
    std::size_t idx = 0;
    for (int ix = 0; ix < N; ++ix)
      for (int iy = 0; iy < N; ++iy)
        for (int iz = 0; iz < N; ++iz, ++idx) {
          double kx = axis_k[ix], ky = axis_k[iy], kz = axis_k[iz];
          double kk = kx * kx + ky * ky + kz * kz;
          k2_[idx] = kk;
          omega_[idx] = (idx == center_index() && kk == 0.0)
                            ? omega0
                            : std::sqrt(kk);
          int cx = ix - N / 2, cy = iy - N / 2, cz = iz - N / 2;
          dealias_[idx] = (std::abs(cx) <= cmax && std::abs(cy) <= cmax &&
                           std::abs(cz) <= cmax)
                              ? 1
                              : 0;
        }
    // zero mode sits at centered index (N/2,N/2,N/2)
    omega_[center_index()] = omega0;

    init_plans();
  }

  Grid(const Grid&) = delete;
  Grid& operator=(const Grid&) = delete;

  ~Grid() {
    fftw_destroy_plan(plan_fwd_);
    fftw_destroy_plan(plan_bwd_);
    fftw_free(buf_in_);
    fftw_free(buf_out_);
  }

  double L;
  int N;
  std::size_t n3;
  double dx, dx3;
  double dk1, dk;   // 1d spacing and cell volume (2pi/L)^3
  double omega0;    // regularized dispersion at k=0
  std::vector<double> axis_k, axis_x;

  std::size_t index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * N + iy) * N + iz;
  }
  std::size_t center_index() const { return index(N / 2, N / 2, N / 2); }

  const std::vector<double>& k2() const { return k2_; }
  const std::vector<double>& omega() const { return omega_; }
  const std::vector<std::uint8_t>& dealias_mask() const { return dealias_; }

  double nyquist_radius() const { return dk1 * (N / 2); }

  // omega^s with the zero-mode rule
  double omega_pow(std::size_t idx, double s) const {
    return std::pow(omega_[idx], s);
  }

  // forward: position -> momentum, both arrays length n3 in centered order
  void forward(const cplx* in, cplx* out) const {
    std::lock_guard<std::mutex> lk(exec_mutex_);
    shift_into(in, buf_in_);
    fftw_execute(plan_fwd_);
    shift_out_of(buf_out_, out, dx3);
  }

  // inverse: momentum -> position
  void inverse(const cplx* in, cplx* out) const {
    std::lock_guard<std::mutex> lk(exec_mutex_);
    shift_into(in, buf_in_);
    fftw_execute(plan_bwd_);
    shift_out_of(buf_out_, out, 1.0 / (L * L * L));
  }

 private:
  void init_plans() {
    static std::mutex planner_mutex;
    std::lock_guard<std::mutex> lk(planner_mutex);
    buf_in_ = fftw_alloc_complex(n3);
    buf_out_ = fftw_alloc_complex(n3);
    plan_fwd_ = fftw_plan_dft_3d(N, N, N, buf_in_, buf_out_, FFTW_FORWARD,
                                 FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_3d(N, N, N, buf_in_, buf_out_, FFTW_BACKWARD,
                                 FFTW_ESTIMATE);
  }

  // centered order <-> wrap-around order: shift by N/2 on each axis
  void shift_into(const cplx* in, fftw_complex* dst) const {
    const int h = N / 2;
    for (int ix = 0; ix < N; ++ix) {
      int jx = (ix + h) % N;
      for (int iy = 0; iy < N; ++iy) {
        int jy = (iy + h) % N;
        const cplx* src = in + index(ix, iy, 0);
        fftw_complex* d = dst + (static_cast<std::size_t>(jx) * N + jy) * N;
        for (int iz = 0; iz < N; ++iz) {
          int jz = (iz + h) % N;
          d[jz][0] = src[iz].real();
          d[jz][1] = src[iz].imag();
        }
      }
    }
  }
  void shift_out_of(const fftw_complex* src, cplx* out, double scale) const {
    const int h = N / 2;
    for (int ix = 0; ix < N; ++ix) {
      int jx = (ix + h) % N;
      for (int iy = 0; iy < N; ++iy) {
        int jy = (iy + h) % N;
        const fftw_complex* s = src + (static_cast<std::size_t>(jx) * N + jy) * N;
        cplx* d = out + index(ix, iy, 0);
        for (int iz = 0; iz < N; ++iz) {
          int jz = (iz + h) % N;
          d[iz] = cplx(s[jz][0], s[jz][1]) * scale;
        }
      }
    }
  }

  std::vector<double> k2_, omega_;
  std::vector<std::uint8_t> dealias_;
  fftw_complex* buf_in_ = nullptr;
  fftw_complex* buf_out_ = nullptr;
  fftw_plan plan_fwd_{}, plan_bwd_{};
  mutable std::mutex exec_mutex_;
};

using GridPtr = std::shared_ptr<const Grid>;

inline GridPtr make_grid(double L, int N) {
  return std::make_shared<const Grid>(L, N);
}

}  // namespace skg
