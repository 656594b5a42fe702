// Copyright 2026 The mincon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mincon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mincon {

namespace {

void multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& out) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    double s = 0.0;
    g.neighbors(v).for_each([&](std::size_t w) { s += x[w]; });
    out[v] = s;
  }
}

}  // namespace

std::size_t PerronResult::argmax() const {
  return static_cast<std::size_t>(
      std::distance(vector.begin(), std::max_element(vector.begin(), vector.end())));
}

PerronResult spectral_radius(const Graph& g, double tol, std::size_t max_iterations) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!is_connected(g))
    throw std::invalid_argument("spectral_radius requires a connected graph");
  const std::size_t n = g.order();
  PerronResult r;
  r.vector.assign(n, 1.0);
  std::vector<double> ax(n);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    auto& x = r.vector;
    multiply(g, x, ax);
    double xax = 0.0;
    double xx = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      xax += x[v] * ax[v];
      xx += x[v] * x[v];
    }
    r.rho = xax / xx;
    r.residual = 0.0;
    for (std::size_t v = 0; v < n; ++v)
      r.residual = std::max(r.residual, std::abs(ax[v] - r.rho * x[v]));
    r.iterations = it;
    if (r.residual <= tol * std::max(r.rho, 1.0)) return r;
    // Next iterate: (A + I) x, max-normalised.
    double top = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      x[v] += ax[v];
      top = std::max(top, x[v]);
    }
    for (auto& xv : x) xv /= top;
  }
  throw ConvergenceError("power iteration did not converge in " +
                         std::to_string(max_iterations) + " iterations");
}

double spectral_radius_any(const Graph& g, double tol) {
  double rho = 0.0;
  for (const auto& comp : components(g)) {
    if (comp.count() < 2) continue;
    rho = std::max(rho, spectral_radius(induced_subgraph(g, comp), tol).rho);
  }
  return rho;
}

Spectrum dense_spectrum(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (const auto& [u, v] : g.edges()) at(u, v) = at(v, u) = 1.0;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  constexpr double kOffTolerance = 1e-12;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > kOffTolerance; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Rotation angle annihilating a_pq, smaller root for stability.
        const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }
  Spectrum out;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = at(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

double edge_product_sum(const Graph& g, std::span<const double> x) {
  if (x.size() != g.order())
    throw std::invalid_argument("vector dimension does not match vertex count");
  double s = 0.0;
  for (const auto& [u, v] : g.edges()) s += x[u] * x[v];
  return s;
}

double rayleigh_quotient(const Graph& g, std::span<const double> x) {
  const double num = edge_product_sum(g, x);
  double den = 0.0;
  for (double xv : x) den += xv * xv;
  if (den == 0.0) throw std::invalid_argument("rayleigh_quotient of the zero vector");
  return 2.0 * num / den;
}

}  // namespace mincon
