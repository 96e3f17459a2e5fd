#include "asymfp/map.hpp"

#include <cmath>
#include <stdexcept>

namespace asymfp {

MapDescriptor MapDescriptor::scale(double factor) {
  if (!std::isfinite(factor)) {
    throw std::invalid_argument("scale map: factor must be finite");
  }
  return MapDescriptor(Scale{factor});
}

MapDescriptor MapDescriptor::affine(std::vector<std::vector<double>> matrix,
                                    std::vector<double> offset) {
  const std::size_t n = matrix.size();
  if (n == 0 || offset.size() != n) {
    throw std::invalid_argument("affine map: matrix and offset sizes disagree");
  }
  for (const auto& row : matrix) {
    if (row.size() != n) {
      throw std::invalid_argument("affine map: matrix must be square");
    }
    for (double v : row) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("affine map: entries must be finite");
      }
    }
  }
  for (double v : offset) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("affine map: entries must be finite");
    }
  }
  return MapDescriptor(Affine{std::move(matrix), std::move(offset)});
}

MapDescriptor MapDescriptor::scalar_poly(std::vector<double> coefficients) {
  if (coefficients.empty()) {
    throw std::invalid_argument("scalar_poly map: needs at least one coefficient");
  }
  for (double c : coefficients) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("scalar_poly map: coefficients must be finite");
    }
  }
  return MapDescriptor(ScalarPoly{std::move(coefficients)});
}

MapDescriptor MapDescriptor::finite_table(std::vector<Point> points,
                                          std::vector<Point> images) {
  const std::size_t n = points.size();
  if (n == 0 || images.size() != n) {
    throw std::invalid_argument("finite_table map: points and images sizes disagree");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument("finite_table map: points must be distinct");
      }
    }
  }
  std::vector<std::size_t> image_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (images[i] == points[j]) {
        image_index[i] = j;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument(
          "finite_table map: image outside point list (not a self-map)");
    }
  }
  auto table = std::make_shared<const Table>(
      Table{std::move(points), std::move(image_index)});
  return MapDescriptor(Node(std::move(table)));
}

std::size_t MapDescriptor::domain_dim() const {
  return std::visit(
      [](const auto& node) -> std::size_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Scale> ||
                      std::is_same_v<T, ScalarPoly>) {
          return 1;
        } else if constexpr (std::is_same_v<T, Affine>) {
          return node.matrix.size();
        } else {
          return node->points[0].dim();
        }
      },
      node_);
}

std::vector<double> MapDescriptor::apply_raw(const Point& x) const {
  if (x.dim() != domain_dim()) {
    throw std::invalid_argument("map: point dimension does not match domain");
  }
  return std::visit(
      [&](const auto& node) -> std::vector<double> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Scale>) {
          return {node.factor * x[0]};
        } else if constexpr (std::is_same_v<T, Affine>) {
          const std::size_t n = node.matrix.size();
          std::vector<double> out(n);
          for (std::size_t i = 0; i < n; ++i) {
            double acc = node.offset[i];
            for (std::size_t j = 0; j < n; ++j) {
              acc += node.matrix[i][j] * x[j];
            }
            out[i] = acc;
          }
          return out;
        } else if constexpr (std::is_same_v<T, ScalarPoly>) {
          // Horner form.
          double acc = 0.0;
          for (std::size_t i = node.coefficients.size(); i-- > 0;) {
            acc = acc * x[0] + node.coefficients[i];
          }
          return {acc};
        } else {
          for (std::size_t i = 0; i < node->points.size(); ++i) {
            if (node->points[i] == x) {
              return node->points[node->image_index[i]].coords();
            }
          }
          throw std::invalid_argument("finite_table map: point not in table");
        }
      },
      node_);
}

Point MapDescriptor::apply(const Point& x) const { return Point(apply_raw(x)); }

std::string MapDescriptor::kind_name() const {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Scale>) {
          return "scale";
        } else if constexpr (std::is_same_v<T, Affine>) {
          return "affine";
        } else if constexpr (std::is_same_v<T, ScalarPoly>) {
          return "scalar_poly";
        } else {
          return "finite_table";
        }
      },
      node_);
}

const MapDescriptor::Table* MapDescriptor::table() const {
  if (const auto* t = std::get_if<std::shared_ptr<const Table>>(&node_)) {
    return t->get();
  }
  return nullptr;
}

}  // namespace asymfp
