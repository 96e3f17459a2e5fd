#pragma once

#include <optional>
#include <vector>

#include "asymfp/map.hpp"
#include "asymfp/norm.hpp"
#include "asymfp/point.hpp"

namespace asymfp {

/// A finite point set inside an asymmetric normed space. Points are distinct
/// under exact equality and keep their input order; every "first witness"
/// below refers to that order.
struct FiniteSubset {
  std::vector<Point> points;
  NormDescriptor ambient_norm;

  static FiniteSubset create(std::vector<Point> points, NormDescriptor norm);
};

/// Diam(K) = max |v - u| over ordered pairs; order matters under an
/// asymmetric norm.
double diameter(const FiniteSubset& K);

double forward_radius(const Point& u, const FiniteSubset& K);   // max |v - u|
double backward_radius(const Point& u, const FiniteSubset& K);  // max |u - v|

/// u must be a member of K (exact equality).
bool is_forward_diametral(const Point& u, const FiniteSubset& K,
                          double tol = 1e-9);

struct NondiametralSearch {
  std::optional<Point> point;       // first u with r^f_u < Diam - tol
  std::optional<std::size_t> index;
  double diam = 0.0;                // 0 flags the degenerate singleton case
};

/// None on a multi-point K certifies that K is forward diametral on the
/// sample (every member attains the diameter).
NondiametralSearch find_forward_nondiametral(const FiniteSubset& K,
                                             double tol = 1e-9);

struct BoundedWitness {
  Point center;
  double r0 = 0.0;  // Diam(K) + 1
  bool f_contained = false;
  bool b_contained = false;
};

/// Instantiates the bounded => f-bounded and b-bounded argument: both flags
/// are true for every finite K.
BoundedWitness bounded_witness(const FiniteSubset& K);

/// All minimal non-empty T-invariant subsets of a finite space: exactly the
/// cycles of the functional graph of T. Each returned set lists its points
/// in input order; sets are ordered by their smallest member index.
std::vector<std::vector<Point>> minimal_invariant_sets(
    const std::vector<Point>& points, const MapDescriptor& map);

/// Linear feasibility: is z a convex combination of the vertices? Decided by
/// a phase-one simplex with Bland's anti-cycling rule.
bool hull_membership(const std::vector<Point>& vertices, const Point& z,
                     double tol = 1e-9);

struct MchReport {
  bool all_contained = false;
  std::vector<Point> failures;  // sample points outside conv{T(v)}
};

/// Necessary condition for minimality of K = conv(vertices): every sample
/// point of K must lie in the hull of the vertex images. Any failure
/// witnesses that K is not minimal.
MchReport mch_check(const std::vector<Point>& vertices, const MapDescriptor& map,
                    const std::vector<Point>& sample, double tol = 1e-9);

}  // namespace asymfp
