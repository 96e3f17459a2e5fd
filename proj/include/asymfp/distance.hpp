#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "asymfp/norm.hpp"
#include "asymfp/point.hpp"

namespace asymfp {

enum class Direction { forward, backward };

/// Declarative description of an asymmetric distance p(x, y).
///
/// Builtins:
///   line_onesided  dim 1,  p(x,y) = y-x if y > x, else 0
///   line_quarter   dim 1,  p(x,y) = y-x if y >= x, else (x-y)/4
///   norm_forward   p(x,y) = |y-x|  for an asymmetric norm descriptor
///   norm_backward  p(x,y) = |x-y|
///   symmetric      a classical metric used as a (symmetric) asymmetric one
///   finite_table   explicit matrix over a fixed point list
///
/// Table lookup is by exact coordinate equality; nearby points never alias.
class DistanceDescriptor {
 public:
  struct LineOneSided {};
  struct LineQuarter {};
  struct NormInduced {
    NormDescriptor norm;
    Direction direction;
  };
  struct Symmetric {
    MetricKind metric;
  };
  struct FiniteTable {
    std::vector<Point> points;
    std::vector<std::vector<double>> values;
  };

  static DistanceDescriptor line_onesided();
  static DistanceDescriptor line_quarter();
  static DistanceDescriptor norm_forward(NormDescriptor norm);
  static DistanceDescriptor norm_backward(NormDescriptor norm);
  static DistanceDescriptor symmetric(MetricKind metric);

  /// Validates shape only: square, zero diagonal, finite non-negative
  /// entries, distinct points. Full AD2/AD3 conformance is what
  /// check_distance_axioms is for, so violating tables are constructible.
  static DistanceDescriptor finite_table(std::vector<Point> points,
                                         std::vector<std::vector<double>> values);

  double operator()(const Point& x, const Point& y) const;

  std::optional<std::size_t> required_dim() const;

  /// Norm behind a norm-induced descriptor, nullptr otherwise.
  const NormDescriptor* induced_norm() const;
  std::optional<Direction> induced_direction() const;

  std::string kind_name() const;

  using Node = std::variant<LineOneSided, LineQuarter, NormInduced, Symmetric,
                            std::shared_ptr<const FiniteTable>>;
  const Node& node() const { return node_; }

 private:
  explicit DistanceDescriptor(Node node) : node_(std::move(node)) {}
  Node node_;
};

inline double eval_distance(const DistanceDescriptor& desc, const Point& x,
                            const Point& y) {
  return desc(x, y);
}

/// Forward yields d(x,y) = |y-x|, backward yields d^(x,y) = |x-y|.
DistanceDescriptor induced_distance(const NormDescriptor& norm,
                                    Direction direction);

}  // namespace asymfp
