#include "asymfp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asymfp {

FiniteSubset FiniteSubset::create(std::vector<Point> points,
                                  NormDescriptor norm) {
  if (points.empty()) {
    throw std::invalid_argument("FiniteSubset: must be non-empty");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != points[0].dim()) {
      throw std::invalid_argument("FiniteSubset: inconsistent dimensions");
    }
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument("FiniteSubset: points must be distinct");
      }
    }
  }
  return FiniteSubset{std::move(points), std::move(norm)};
}

double diameter(const FiniteSubset& K) {
  double diam = 0.0;
  for (const Point& u : K.points) {
    for (const Point& v : K.points) {
      diam = std::max(diam, K.ambient_norm(v - u));
    }
  }
  return diam;
}

double forward_radius(const Point& u, const FiniteSubset& K) {
  double r = 0.0;
  for (const Point& v : K.points) r = std::max(r, K.ambient_norm(v - u));
  return r;
}

double backward_radius(const Point& u, const FiniteSubset& K) {
  double r = 0.0;
  for (const Point& v : K.points) r = std::max(r, K.ambient_norm(u - v));
  return r;
}

bool is_forward_diametral(const Point& u, const FiniteSubset& K, double tol) {
  if (std::find(K.points.begin(), K.points.end(), u) == K.points.end()) {
    throw std::invalid_argument("is_forward_diametral: u is not a member of K");
  }
  return diameter(K) - forward_radius(u, K) <= tol;
}

NondiametralSearch find_forward_nondiametral(const FiniteSubset& K, double tol) {
  NondiametralSearch result;
  result.diam = diameter(K);
  for (std::size_t i = 0; i < K.points.size(); ++i) {
    if (forward_radius(K.points[i], K) < result.diam - tol) {
      result.point = K.points[i];
      result.index = i;
      break;
    }
  }
  return result;
}

BoundedWitness bounded_witness(const FiniteSubset& K) {
  BoundedWitness witness{K.points[0], diameter(K) + 1.0, true, true};
  for (const Point& x : K.points) {
    if (!(K.ambient_norm(x - witness.center) < witness.r0)) {
      witness.f_contained = false;
    }
    if (!(K.ambient_norm(witness.center - x) < witness.r0)) {
      witness.b_contained = false;
    }
  }
  return witness;
}

std::vector<std::vector<Point>> minimal_invariant_sets(
    const std::vector<Point>& points, const MapDescriptor& map) {
  if (points.empty()) {
    throw std::invalid_argument("minimal_invariant_sets: empty point list");
  }
  const std::size_t n = points.size();
  std::vector<std::size_t> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point image = map.apply(points[i]);
    bool found = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (points[j] == image) {
        next[i] = j;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument(
          "minimal_invariant_sets: image outside point list");
    }
  }

  // Cycle detection on the functional graph: 0 = unvisited, 1 = on the
  // current walk, 2 = finished.
  std::vector<int> state(n, 0);
  std::vector<bool> on_cycle(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    std::vector<std::size_t> walk;
    std::size_t cur = start;
    while (state[cur] == 0) {
      state[cur] = 1;
      walk.push_back(cur);
      cur = next[cur];
    }
    if (state[cur] == 1) {
      // Closed a new cycle: mark everything from cur onwards in the walk.
      bool in_cycle = false;
      for (std::size_t idx : walk) {
        if (idx == cur) in_cycle = true;
        if (in_cycle) on_cycle[idx] = true;
      }
    }
    for (std::size_t idx : walk) state[idx] = 2;
  }

  // Group cycle members into their cycles, ordered by smallest member index.
  std::vector<std::vector<Point>> sets;
  std::vector<bool> emitted(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!on_cycle[i] || emitted[i]) continue;
    std::vector<std::size_t> cycle;
    std::size_t cur = i;
    do {
      cycle.push_back(cur);
      emitted[cur] = true;
      cur = next[cur];
    } while (cur != i);
    std::sort(cycle.begin(), cycle.end());  // input order inside the set
    std::vector<Point> set;
    set.reserve(cycle.size());
    for (std::size_t idx : cycle) set.push_back(points[idx]);
    sets.push_back(std::move(set));
  }
  return sets;
}

namespace {

constexpr double kPivotEps = 1e-12;

}  // namespace

bool hull_membership(const std::vector<Point>& vertices, const Point& z,
                     double tol) {
  if (vertices.empty()) {
    throw std::invalid_argument("hull_membership: empty vertex list");
  }
  bool all_same = true;
  for (const Point& v : vertices) {
    if (v.dim() != z.dim()) {
      throw std::invalid_argument("hull_membership: dimension mismatch");
    }
    if (v != vertices[0]) all_same = false;
  }
  if (all_same && vertices.size() > 1) {
    throw std::invalid_argument("hull_membership: degenerate vertex list");
  }
  if (all_same) return vertices[0] == z;

  // Phase-one simplex for: find lambda >= 0 with V lambda = z, 1'lambda = 1.
  const std::size_t d = z.dim();
  const std::size_t rows = d + 1;
  const std::size_t cols = vertices.size() + rows;  // lambdas then artificials
  std::vector<std::vector<double>> tab(rows, std::vector<double>(cols + 1, 0.0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      tab[i][j] = vertices[j][i];
    }
    tab[i][cols] = z[i];
  }
  for (std::size_t j = 0; j < vertices.size(); ++j) tab[d][j] = 1.0;
  tab[d][cols] = 1.0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (tab[i][cols] < 0.0) {
      for (double& v : tab[i]) v = -v;
    }
    tab[i][vertices.size() + i] = 1.0;
  }

  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = vertices.size() + i;

  // Reduced costs for "minimize sum of artificials".
  auto reduced_cost = [&](std::size_t j) {
    double c = j >= vertices.size() ? 1.0 : 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (basis[i] >= vertices.size()) c -= tab[i][j];
    }
    return c;
  };

  const std::size_t max_pivots = 50 * (cols + rows);
  for (std::size_t pivot = 0; pivot < max_pivots; ++pivot) {
    // Bland: entering column = smallest index with negative reduced cost.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced_cost(j) < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;  // optimal

    std::size_t leave = rows;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tab[i][enter] > kPivotEps) {
        const double ratio = tab[i][cols] / tab[i][enter];
        if (leave == rows || ratio < best_ratio - kPivotEps ||
            (std::abs(ratio - best_ratio) <= kPivotEps &&
             basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == rows) break;  // unbounded cannot happen in phase one

    const double piv = tab[leave][enter];
    for (double& v : tab[leave]) v /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave) continue;
      const double factor = tab[i][enter];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) {
        tab[i][j] -= factor * tab[leave][j];
      }
    }
    basis[leave] = enter;
  }

  double artificial_sum = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] >= vertices.size()) artificial_sum += tab[i][cols];
  }
  return artificial_sum <= tol;
}

MchReport mch_check(const std::vector<Point>& vertices, const MapDescriptor& map,
                    const std::vector<Point>& sample, double tol) {
  if (vertices.empty() || sample.empty()) {
    throw std::invalid_argument("mch_check: vertices and sample must be non-empty");
  }
  std::vector<Point> images;
  images.reserve(vertices.size());
  for (const Point& v : vertices) images.push_back(map.apply(v));

  MchReport report{true, {}};
  for (const Point& s : sample) {
    if (!hull_membership(images, s, tol)) {
      report.all_contained = false;
      report.failures.push_back(s);
    }
  }
  return report;
}

}  // namespace asymfp
