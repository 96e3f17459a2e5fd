#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "asymfp/point.hpp"

namespace asymfp {

/// Symmetric norm kinds used by the symmetric lifts (norm and distance side).
enum class MetricKind { l1, l2, linf };

std::string to_string(MetricKind kind);
MetricKind metric_kind_from_string(const std::string& name);

/// Declarative description of an asymmetric norm. Immutable value object;
/// composition (scaling) nests structurally, so descriptors serialize and
/// compare without loss.
///
/// Builtins:
///   upper          dim 1,  |x|_u = max{x, 0}
///   planar_max     dim 2,  |(x,y)| = max{0, y-x, y+x}
///   symmetric_lift any dim, an ordinary norm used as an asymmetric one
///   scaled         positive multiple of a base descriptor
class NormDescriptor {
 public:
  struct Upper {};
  struct PlanarMax {};
  struct SymmetricLift {
    MetricKind metric;
  };
  struct Scaled {
    std::shared_ptr<const NormDescriptor> base;
    double factor;
  };

  static NormDescriptor upper();
  static NormDescriptor planar_max();
  static NormDescriptor symmetric_lift(MetricKind metric);
  static NormDescriptor scaled(NormDescriptor base, double factor);

  /// Evaluates the norm; throws std::invalid_argument on dimension mismatch.
  double operator()(const Point& v) const;

  /// Dimension the descriptor requires, or nullopt when any dimension works.
  std::optional<std::size_t> required_dim() const;

  std::string kind_name() const;

  const std::variant<Upper, PlanarMax, SymmetricLift, Scaled>& node() const {
    return node_;
  }

 private:
  explicit NormDescriptor(std::variant<Upper, PlanarMax, SymmetricLift, Scaled> node)
      : node_(std::move(node)) {}

  std::variant<Upper, PlanarMax, SymmetricLift, Scaled> node_;
};

inline double eval_norm(const NormDescriptor& desc, const Point& v) {
  return desc(v);
}

}  // namespace asymfp
