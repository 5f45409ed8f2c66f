#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "skg/grid.hpp"

namespace skg {

// Complex field on the momentum lattice (centered order).
struct FieldK {
  GridPtr grid;
  std::vector<cplx> v;

  FieldK() = default;
  explicit FieldK(GridPtr g) : grid(std::move(g)), v(grid->n3, cplx{}) {}
  FieldK(GridPtr g, std::vector<cplx> data) : grid(std::move(g)), v(std::move(data)) {}
};

// Complex wavefunction on the position lattice (centered order).
struct WaveX {
  GridPtr grid;
  std::vector<cplx> v;

  WaveX() = default;
  explicit WaveX(GridPtr g) : grid(std::move(g)), v(grid->n3, cplx{}) {}
  WaveX(GridPtr g, std::vector<cplx> data) : grid(std::move(g)), v(std::move(data)) {}
};

inline void check_same_grid(const GridPtr& a, const GridPtr& b) {
  if (a.get() != b.get() && (a->N != b->N || a->L != b->L))
    throw ConfigError("grid mismatch");
}

// ---- transforms -----------------------------------------------------------

inline FieldK to_momentum(const WaveX& psi) {
  FieldK out(psi.grid);
  psi.grid->forward(psi.v.data(), out.v.data());
  return out;
}

inline WaveX to_position(const FieldK& spec) {
  WaveX out(spec.grid);
  spec.grid->inverse(spec.v.data(), out.v.data());
  return out;
}

// ---- norms and inner products ---------------------------------------------

// particle L2: (sum |psi|^2 dx^3)^{1/2}
inline double l2_norm(const WaveX& psi) {
  double s = 0.0;
  for (const auto& z : psi.v) s += std::norm(z);
  return std::sqrt(s * psi.grid->dx3);
}

// <a,b> = sum conj(a) b dx^3
inline cplx inner(const WaveX& a, const WaveX& b) {
  check_same_grid(a.grid, b.grid);
  cplx s{};
  for (std::size_t i = 0; i < a.v.size(); ++i) s += std::conj(a.v[i]) * b.v[i];
  return s * a.grid->dx3;
}

// field L2(dk): (sum |phi|^2 dk)^{1/2}
inline double l2_norm(const FieldK& phi) {
  double s = 0.0;
  for (const auto& z : phi.v) s += std::norm(z);
  return std::sqrt(s * phi.grid->dk);
}

// <a,b>_k = sum conj(a) b dk
inline cplx inner(const FieldK& a, const FieldK& b) {
  check_same_grid(a.grid, b.grid);
  cplx s{};
  for (std::size_t i = 0; i < a.v.size(); ++i) s += std::conj(a.v[i]) * b.v[i];
  return s * a.grid->dk;
}

// Sobolev-type field norm (sum omega^{2s} |phi|^2 dk)^{1/2}; the zero mode
// carries omega0^{2s} per the grid's regularization.
inline double weighted_norm(const FieldK& phi, double s) {
  if (s < -1.0 || s > 2.0) throw DomainError("weighted_norm: s outside [-1,2]");
  const auto& om = phi.grid->omega();
  double acc = 0.0;
  for (std::size_t i = 0; i < phi.v.size(); ++i)
    acc += std::pow(om[i], 2.0 * s) * std::norm(phi.v[i]);
  return std::sqrt(acc * phi.grid->dk);
}

// particle H^r norm via the spectrum: (sum (1+|k|^2)^r |psi_hat|^2 dk/(2pi)^3)^{1/2}
inline double sobolev_norm(const WaveX& psi, double r) {
  FieldK spec = to_momentum(psi);
  const auto& k2 = psi.grid->k2();
  double acc = 0.0;
  for (std::size_t i = 0; i < spec.v.size(); ++i)
    acc += std::pow(1.0 + k2[i], r) * std::norm(spec.v[i]);
  return std::sqrt(acc * psi.grid->dk / std::pow(2.0 * pi, 3));
}

inline double h1_norm(const WaveX& psi) { return sobolev_norm(psi, 1.0); }

inline void normalize(WaveX& psi) {
  double n = l2_norm(psi);
  if (n == 0.0) throw SolverError("normalize: zero vector");
  double inv = 1.0 / n;
  for (auto& z : psi.v) z *= inv;
}

// ---- misc helpers ----------------------------------------------------------

inline void dealias_inplace(FieldK& f) {
  const auto& m = f.grid->dealias_mask();
  for (std::size_t i = 0; i < f.v.size(); ++i)
    if (!m[i]) f.v[i] = cplx{};
}

// dealiased pointwise density |psi|^2 (returned in position space)
inline std::vector<double> dealiased_density(const WaveX& psi) {
  FieldK rho_hat(psi.grid);
  {
    WaveX rho(psi.grid);
    for (std::size_t i = 0; i < psi.v.size(); ++i)
      rho.v[i] = std::norm(psi.v[i]);
    rho_hat = to_momentum(rho);
  }
  dealias_inplace(rho_hat);
  WaveX rho = to_position(rho_hat);
  std::vector<double> out(psi.v.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rho.v[i].real();
  return out;
}

// lattice index of -k (aliased involution: centered index c -> -c, with the
// Nyquist plane c=-N/2 mapping to itself)
inline std::size_t negate_index(const Grid& g, std::size_t idx) {
  int N = g.N;
  int iz = static_cast<int>(idx % N);
  int iy = static_cast<int>((idx / N) % N);
  int ix = static_cast<int>(idx / (static_cast<std::size_t>(N) * N));
  auto neg = [N](int i) {
    int c = i - N / 2;
    int m = -c;
    // map back into [-N/2, N/2)
    if (m == N / 2) m = -N / 2;
    return m + N / 2;
  };
  return g.index(neg(ix), neg(iy), neg(iz));
}

// phi(k) <- e^{-i k y} phi(k): momentum-space translation by y
inline void translate_field(FieldK& phi, const std::array<double, 3>& y) {
  const Grid& g = *phi.grid;
  std::size_t idx = 0;
  for (int ix = 0; ix < g.N; ++ix) {
    double px = g.axis_k[ix] * y[0];
    for (int iy = 0; iy < g.N; ++iy) {
      double py = g.axis_k[iy] * y[1];
      for (int iz = 0; iz < g.N; ++iz, ++idx) {
        double ph = px + py + g.axis_k[iz] * y[2];
        phi.v[idx] *= std::polar(1.0, -ph);
      }
    }
  }
}

// seeded band-limited random field; even=true restricts to the parity-even
// sector phi(-k)=phi(k) (the sector on which the adopted potential pairing
// conserves the field energy exactly)
inline FieldK random_field(const GridPtr& g, std::uint64_t seed, bool even,
                           double kmax_frac = 0.5) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  FieldK f(g);
  const auto& k2 = g->k2();
  double kcut = kmax_frac * g->nyquist_radius();
  for (std::size_t i = 0; i < f.v.size(); ++i) {
    if (k2[i] > kcut * kcut) continue;
    f.v[i] = cplx(gauss(rng), gauss(rng)) * std::exp(-k2[i] / (kcut * kcut));
  }
  if (even) {
    FieldK sym(g);
    for (std::size_t i = 0; i < f.v.size(); ++i) {
      std::size_t j = negate_index(*g, i);
      sym.v[i] = 0.5 * (f.v[i] + f.v[j]);
    }
    f = std::move(sym);
  }
  return f;
}

}  // namespace skg
