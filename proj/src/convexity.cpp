#include "asymfp/convexity.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "asymfp/geometry.hpp"

namespace asymfp {

SimplexWeights SimplexWeights::create(std::vector<double> weights) {
  if (weights.empty()) {
    throw std::invalid_argument("SimplexWeights: need at least one weight");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw std::invalid_argument("SimplexWeights: weights must be >= 0");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("SimplexWeights: weights must sum to 1");
  }
  return SimplexWeights{std::move(weights)};
}

namespace {

Point combine(const std::vector<Point>& points, const std::vector<double>& w) {
  std::vector<double> coords(points[0].dim(), 0.0);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t a = 0; a < coords.size(); ++a) {
      coords[a] += w[j] * points[j][a];
    }
  }
  return Point(std::move(coords));
}

// Minimizes a convex g over [0, ub] by interval shrinking; endpoints are
// evaluated explicitly since flat stretches can push the optimum there.
double convex_line_min(const std::function<double(double)>& g, double ub) {
  double a = 0.0, b = ub;
  for (int it = 0; it < 100 && b - a > 1e-15 * std::max(1.0, ub); ++it) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    if (g(m1) < g(m2)) {
      b = m2;
    } else {
      a = m1;
    }
  }
  const double mid = 0.5 * (a + b);
  double best_t = 0.0;
  double best = g(0.0);
  for (double t : {mid, ub}) {
    const double value = g(t);
    if (value < best) {
      best = value;
      best_t = t;
    }
  }
  return best_t;
}

}  // namespace

MazurResult mazur_approximation(const std::vector<Point>& seq_prefix,
                                const Point& x0, const NormDescriptor& norm,
                                double eps, int grid_q) {
  if (seq_prefix.empty()) {
    throw std::invalid_argument("mazur_approximation: empty sequence prefix");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("mazur_approximation: eps must be positive");
  }
  if (grid_q < 1) {
    throw std::invalid_argument("mazur_approximation: grid_q must be >= 1");
  }
  for (const Point& p : seq_prefix) {
    require_same_dim(p, x0, "mazur_approximation");
  }

  const std::size_t m = seq_prefix.size();
  auto objective = [&](const std::vector<double>& w) {
    return norm(x0 - combine(seq_prefix, w));
  };

  // Stage 1: all weight vectors with entries j/grid_q, enumerated in
  // ascending lexicographic order; strict improvement keeps the first
  // (lexicographically smallest) optimum.
  std::vector<double> best_w;
  double best = 0.0;
  std::vector<int> counts(m, 0);
  const auto enumerate = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == m) {
      counts[pos] = remaining;
      std::vector<double> w(m);
      for (std::size_t j = 0; j < m; ++j) {
        w[j] = static_cast<double>(counts[j]) / static_cast<double>(grid_q);
      }
      const double value = objective(w);
      if (best_w.empty() || value < best) {
        best = value;
        best_w = std::move(w);
      }
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  enumerate(enumerate, 0, grid_q);

  // Stage 2: pairwise mass transfer until a full pass stalls.
  for (int pass = 0; pass < 1000; ++pass) {
    double pass_gain = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (best_w[i] <= 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i || best_w[i] <= 0.0) continue;
        auto shifted = [&](double t) {
          std::vector<double> w = best_w;
          w[i] -= t;
          w[j] += t;
          return objective(w);
        };
        const double t = convex_line_min(shifted, best_w[i]);
        if (t == 0.0) continue;
        const double value = shifted(t);
        if (value < best) {
          pass_gain += best - value;
          best = value;
          best_w[i] -= t;
          best_w[j] += t;
        }
      }
    }
    if (pass_gain < 1e-12) break;
  }

  // Transfers preserve the sum up to roundoff; renormalize and re-evaluate
  // so the returned weights satisfy the SimplexWeights contract exactly.
  double sum = 0.0;
  for (double& w : best_w) {
    if (w < 0.0) w = 0.0;
    sum += w;
  }
  for (double& w : best_w) w /= sum;
  best = objective(best_w);

  MazurResult result;
  result.achieved = best;
  result.success = best <= eps;
  result.combination = combine(seq_prefix, best_w);
  result.weights = SimplexWeights{std::move(best_w)};
  return result;
}

double minkowski_functional(const std::vector<Point>& vertices, const Point& z,
                            double tol) {
  if (vertices.empty()) {
    throw std::invalid_argument("minkowski_functional: empty vertex list");
  }
  if (max_abs_coord(z) == 0.0) {
    throw std::invalid_argument("minkowski_functional: z must be non-zero");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("minkowski_functional: tol must be positive");
  }

  auto member = [&](double t) {
    std::vector<Point> scaled;
    scaled.reserve(vertices.size());
    for (const Point& v : vertices) scaled.push_back(t * v);
    return hull_membership(scaled, z, 1e-12);
  };

  double hi = 1.0;
  while (!member(hi)) {
    hi *= 2.0;
    if (hi > 1e6) {
      throw std::domain_error("minkowski_functional: ray escapes M");
    }
  }
  double lo = 0.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (member(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace asymfp
