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

#ifndef MINCON_SPECTRAL_HPP_
#define MINCON_SPECTRAL_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "mincon/graph.hpp"

namespace mincon {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kMaxPowerIterations = 1'000'000;

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spectral radius and Perron vector, max-normalised (largest entry is 1).
struct PerronResult {
  double rho = 0.0;
  std::vector<double> vector;
  double residual = 0.0;  // sup-norm of A x - rho x
  std::size_t iterations = 0;

  std::size_t argmax() const;  // u*: first index holding the maximum
};

/// Power iteration on A + I starting from the all-ones vector. The unit
/// shift keeps bipartite graphs (spectrum symmetric about 0) from
/// oscillating. Stops once the residual is at most tol * max(rho, 1).
///
/// Throws std::invalid_argument for disconnected graphs and
/// ConvergenceError if `max_iterations` is exhausted.
PerronResult spectral_radius(const Graph& g, double tol = kDefaultTolerance,
                             std::size_t max_iterations = kMaxPowerIterations);

/// rho(G) for any graph: the largest spectral radius over its components.
double spectral_radius_any(const Graph& g, double tol = kDefaultTolerance);

/// All adjacency eigenvalues in ascending order.
struct Spectrum {
  std::vector<double> eigenvalues;
  double max() const { return eigenvalues.back(); }
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
/// 1e-12.
Spectrum dense_spectrum(const Graph& g);

/// x^T A x / x^T x = 2 * sum_{uv in E} x_u x_v / sum_v x_v^2.
double rayleigh_quotient(const Graph& g, std::span<const double> x);

/// sum_{uv in E} x_u x_v.
double edge_product_sum(const Graph& g, std::span<const double> x);

}  // namespace mincon

#endif  // MINCON_SPECTRAL_HPP_
