#pragma once

#include <vector>

#include "asymfp/norm.hpp"
#include "asymfp/point.hpp"

namespace asymfp {

/// Barycentric weights on a finite point list: non-negative, summing to one
/// within 1e-12.
struct SimplexWeights {
  std::vector<double> weights;

  static SimplexWeights create(std::vector<double> weights);
};

struct MazurResult {
  bool success = false;   // achieved <= eps
  SimplexWeights weights{{1.0}};
  Point combination{{0.0}};
  double achieved = 0.0;  // best value found; an upper bound on the minimum
};

/// Searches for a convex combination y of the sequence prefix with
/// |x0 - y| <= eps. Two stages: exhaustive scan of the weight grid
/// {multiples of 1/grid_q} (lexicographically smallest optimum wins ties),
/// then pairwise mass-transfer descent until a full pass improves by less
/// than 1e-12. The objective is convex, so the refined value upper-bounds
/// the true minimum tightly at desk scale.
MazurResult mazur_approximation(const std::vector<Point>& seq_prefix,
                                const Point& x0, const NormDescriptor& norm,
                                double eps, int grid_q = 20);

/// Gauge of the polytope M = conv(vertices) at z: the smallest t > 0 with
/// z in tM, found by doubling then 60 bisection steps over hull membership
/// on scaled vertices. Throws when no t <= 1e6 contains z.
double minkowski_functional(const std::vector<Point>& vertices, const Point& z,
                            double tol = 1e-9);

}  // namespace asymfp
