#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "skg/common.hpp"

namespace skg {

struct QuadRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
inline QuadRule gauss_legendre(int n) {
  QuadRule q;
  q.x.resize(n);
  q.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    q.x[i] = x;
    q.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return q;
}

inline QuadRule gauss_legendre_ab(int n, double a, double b) {
  QuadRule q = gauss_legendre(n);
  for (int i = 0; i < n; ++i) {
    q.x[i] = 0.5 * (b - a) * q.x[i] + 0.5 * (a + b);
    q.w[i] *= 0.5 * (b - a);
  }
  return q;
}

inline double integrate_1d(const std::function<double(double)>& f, double a,
                           double b, int n = 64) {
  QuadRule q = gauss_legendre_ab(n, a, b);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += q.w[i] * f(q.x[i]);
  return s;
}

// integral over [K,Lambda] of 4*pi*r^2 * f(r) dr  (radial 3D integral)
inline double integrate_radial(const std::function<double(double)>& f,
                               double r0, double r1, int n = 96) {
  return integrate_1d([&](double r) { return 4.0 * pi * r * r * f(r); }, r0,
                      r1, n);
}

// integral of |u|^p over the unit cube [-1/2,1/2]^3, p > -3.
// The singular cell at the origin is handled by dyadic self-similarity:
// I = S / (1 - 2^{-(3+p)}) with S the integral over the cubic shell
// [-1/2,1/2]^3 \ [-1/4,1/4]^3, split into 26 smooth boxes.
inline double unit_cube_power_integral(double p, int n = 32) {
  static const double edges[4] = {-0.5, -0.25, 0.25, 0.5};
  QuadRule g = gauss_legendre(n);
  auto box = [&](int bx, int by, int bz) {
    // box index 0,1,2 per axis over [edges[i],edges[i+1]] with the middle
    // interval being [-0.25,0.25]
    auto seg = [&](int b, int i) {
      double lo = (b == 0) ? edges[0] : (b == 1 ? edges[1] : edges[2]);
      double hi = (b == 0) ? edges[1] : (b == 1 ? edges[2] : edges[3]);
      return 0.5 * (hi - lo) * g.x[i] + 0.5 * (lo + hi);
    };
    auto sw = [&](int b, int i) {
      double lo = (b == 0) ? edges[0] : (b == 1 ? edges[1] : edges[2]);
      double hi = (b == 0) ? edges[1] : (b == 1 ? edges[2] : edges[3]);
      return 0.5 * (hi - lo) * g.w[i];
    };
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double x = seg(bx, i), y = seg(by, j), z = seg(bz, k);
          s += sw(bx, i) * sw(by, j) * sw(bz, k) *
               std::pow(std::sqrt(x * x + y * y + z * z), p);
        }
    return s;
  };
  double shell = 0.0;
  for (int bx = 0; bx < 3; ++bx)
    for (int by = 0; by < 3; ++by)
      for (int bz = 0; bz < 3; ++bz) {
        if (bx == 1 && by == 1 && bz == 1) continue;
        shell += box(bx, by, bz);
      }
  return shell / (1.0 - std::pow(2.0, -(3.0 + p)));
}

// cell average of |k|^p over the momentum cell of side dk1 centered at 0
inline double cell_power_average(double p, double dk1) {
  return unit_cube_power_integral(p) * std::pow(dk1, p);
}

// Lebedev 26-point rule on the unit sphere: 6 face + 12 edge + 8 corner
// directions of the cube, weights normalized to sum 1 (exact to degree 7).
struct Lebedev26 {
  std::array<std::array<double, 3>, 26> dir;
  std::array<double, 26> w;
  Lebedev26() {
    int m = 0;
    const double wa = 1.0 / 21.0, wb = 4.0 / 105.0, wc = 27.0 / 840.0;
    for (int a = 0; a < 3; ++a)
      for (int s = -1; s <= 1; s += 2) {
        std::array<double, 3> d{0, 0, 0};
        d[a] = s;
        dir[m] = d;
        w[m++] = wa;
      }
    const double r2 = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < 3; ++a)
      for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2) {
          std::array<double, 3> d{0, 0, 0};
          d[(a + 1) % 3] = s1 * r2;
          d[(a + 2) % 3] = s2 * r2;
          dir[m] = d;
          w[m++] = wb;
        }
    const double r3 = 1.0 / std::sqrt(3.0);
    for (int s1 = -1; s1 <= 1; s1 += 2)
      for (int s2 = -1; s2 <= 1; s2 += 2)
        for (int s3 = -1; s3 <= 1; s3 += 2) {
          dir[m] = {s1 * r3, s2 * r3, s3 * r3};
          w[m++] = wc;
        }
  }
};

}  // namespace skg
