#pragma once

#include <cmath>
#include <limits>

#include "skg/field.hpp"
#include "skg/quadrature.hpp"

namespace skg {

// UV cutoff pair 2 <= K <= Lambda <= Nyquist radius of the grid.
struct CutoffPair {
  double K;
  double Lambda;

  CutoffPair(double k, double lambda, const Grid& g) : K(k), Lambda(lambda) {
    if (!(K >= 2.0)) throw ConfigError("cutoff: K must be >= 2");
    if (!(Lambda >= K)) throw ConfigError("cutoff: need K <= Lambda");
    if (Lambda > g.nyquist_radius() * (1.0 + 1e-12))
      throw ConfigError("cutoff: Lambda exceeds the grid Nyquist radius");
  }
};

// G_K(k) = omega(k)^{-1/2} 1_{|k|<=K},   B_{K,Lambda}(k) = |k|^{-5/2} 1_{K<=|k|<=Lambda},
// evaluated on lattice points with closed boundary indicators. The zero mode
// of G uses the regularized omega0.
struct DressingKernels {
  std::vector<double> G;     // G_K on the lattice
  std::vector<double> B;     // B_{K,Lambda} on the lattice
};

inline DressingKernels dressing_kernels(const Grid& g, const CutoffPair& c) {
  DressingKernels out;
  out.G.assign(g.n3, 0.0);
  out.B.assign(g.n3, 0.0);
  const auto& k2 = g.k2();
  const auto& om = g.omega();
  for (std::size_t i = 0; i < g.n3; ++i) {
    double r = std::sqrt(k2[i]);
    if (r <= c.K) out.G[i] = 1.0 / std::sqrt(om[i]);
    if (r >= c.K && r <= c.Lambda && r > 0.0)
      out.B[i] = 1.0 / (r * r * std::sqrt(r));
  }
  return out;
}

// G_Lambda without the lower shell (used by the Bogoliubov kernel)
inline std::vector<double> g_lambda_kernel(const Grid& g, double Lambda) {
  std::vector<double> G(g.n3, 0.0);
  const auto& k2 = g.k2();
  const auto& om = g.omega();
  for (std::size_t i = 0; i < g.n3; ++i)
    if (std::sqrt(k2[i]) <= Lambda) G[i] = 1.0 / std::sqrt(om[i]);
  return G;
}

// Scalar pieces of the dressing computation, by continuum radial quadrature
// (independent of the lattice): ||k B_{K,L}||^2, 2 Re <G_L, B_{K,L}> and the
// combination, together with the analytic reference 4 pi (ln K - ln Lambda).
struct DressingScalars {
  double kB_sq;       // || k B_{K,Lambda} ||_{L2}^2
  double two_GB;      // 2 Re < G_Lambda, B_{K,Lambda} >
  double combination; // kB_sq - two_GB
  double reference;   // 4 pi (ln K - ln Lambda)
};

inline DressingScalars dressing_scalar_identity(double K, double Lambda,
                                                int nodes = 128) {
  if (!(K < Lambda) || !std::isfinite(Lambda))
    throw DomainError("dressing_scalar_identity: need K < Lambda < inf");
  DressingScalars s{};
  // |k B|^2 = r^2 * r^{-5} = r^{-3};  G*B = r^{-1/2} * r^{-5/2} = r^{-3}
  s.kB_sq = integrate_radial([](double r) { return std::pow(r, -3.0); }, K,
                             Lambda, nodes);
  s.two_GB = 2.0 * integrate_radial([](double r) { return std::pow(r, -3.0); },
                                    K, Lambda, nodes);
  s.combination = s.kB_sq - s.two_GB;
  s.reference = 4.0 * pi * (std::log(K) - std::log(Lambda));
  return s;
}

}  // namespace skg
