#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "asymfp/point.hpp"

namespace asymfp {

/// Declarative self-map T : R^n -> R^n.
///
///   scale        dim 1, Tx = factor * x
///   affine       Tx = A x + b
///   scalar_poly  dim 1, Tx = sum_i coefficients[i] * x^i
///   finite_table images of a fixed point list; must be a self-map of it
class MapDescriptor {
 public:
  struct Scale {
    double factor;
  };
  struct Affine {
    std::vector<std::vector<double>> matrix;
    std::vector<double> offset;
  };
  struct ScalarPoly {
    std::vector<double> coefficients;  // constant term first
  };
  struct Table {
    std::vector<Point> points;
    std::vector<std::size_t> image_index;
  };

  static MapDescriptor scale(double factor);
  static MapDescriptor affine(std::vector<std::vector<double>> matrix,
                              std::vector<double> offset);
  static MapDescriptor scalar_poly(std::vector<double> coefficients);
  static MapDescriptor finite_table(std::vector<Point> points,
                                    std::vector<Point> images);

  std::size_t domain_dim() const;

  /// Raw image coordinates; may carry infinities when the map overflows.
  /// Solvers guard on this before wrapping into a Point.
  std::vector<double> apply_raw(const Point& x) const;

  /// Image as a validated Point; throws if the image is non-finite.
  Point apply(const Point& x) const;

  std::string kind_name() const;

  using Node = std::variant<Scale, Affine, ScalarPoly, std::shared_ptr<const Table>>;
  const Node& node() const { return node_; }

  const Table* table() const;

 private:
  explicit MapDescriptor(Node node) : node_(std::move(node)) {}
  Node node_;
};

}  // namespace asymfp
