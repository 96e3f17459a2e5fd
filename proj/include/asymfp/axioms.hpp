#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asymfp/distance.hpp"
#include "asymfp/norm.hpp"
#include "asymfp/point.hpp"

namespace asymfp {

/// One witnessed axiom failure. Witness points are carried verbatim so a
/// report is actionable without re-running the scan.
struct AxiomViolation {
  std::string axiom;  // "AD1".."AD3" or "AN1".."AN4"
  std::vector<Point> witness;
  std::optional<double> scalar;  // lambda, for AN3 only
  double excess = 0.0;
  std::string detail;
};

/// Sample-based certificate: an empty violation list means "consistent on
/// this sample", never "the axioms hold on all of X".
struct AxiomReport {
  std::string subject;
  std::size_t sample_size = 0;
  double tol = 0.0;
  std::vector<AxiomViolation> violations;

  bool consistent() const { return violations.empty(); }
};

constexpr double kDefaultAxiomTol = 1e-9;

using DistanceFn = std::function<double(const Point&, const Point&)>;
using NormFn = std::function<double(const Point&)>;

/// Scans all ordered pairs (AD1, AD2) and ordered triples (AD3) of the
/// sample. The callable overload exists so broken evaluators can be audited
/// directly in tests.
AxiomReport check_distance_axioms(const DistanceFn& dist,
                                  const std::vector<Point>& sample,
                                  double tol = kDefaultAxiomTol,
                                  const std::string& subject = "distance");

AxiomReport check_distance_axioms(const DistanceDescriptor& desc,
                                  const std::vector<Point>& sample,
                                  double tol = kDefaultAxiomTol);

/// AN1/AN2 over the sample, AN3 over sample x scalars, AN4 over ordered
/// pairs. Scalars must be non-negative (AN3 only quantifies over those).
AxiomReport check_norm_axioms(const NormFn& norm,
                              const std::vector<Point>& sample,
                              const std::vector<double>& scalars,
                              double tol = kDefaultAxiomTol,
                              const std::string& subject = "norm");

AxiomReport check_norm_axioms(const NormDescriptor& desc,
                              const std::vector<Point>& sample,
                              const std::vector<double>& scalars,
                              double tol = kDefaultAxiomTol);

/// Axis-aligned rectangular grid, points_per_axis samples per coordinate,
/// row-major order. The workhorse sample generator for axiom scans.
std::vector<Point> grid_points(const std::vector<double>& lo,
                               const std::vector<double>& hi,
                               const std::vector<std::size_t>& points_per_axis);

std::vector<Point> grid_points_1d(double lo, double hi, std::size_t count);

}  // namespace asymfp
