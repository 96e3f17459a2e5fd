#include "asymfp/distance.hpp"

#include <cmath>
#include <stdexcept>

namespace asymfp {

DistanceDescriptor DistanceDescriptor::line_onesided() {
  return DistanceDescriptor(LineOneSided{});
}

DistanceDescriptor DistanceDescriptor::line_quarter() {
  return DistanceDescriptor(LineQuarter{});
}

DistanceDescriptor DistanceDescriptor::norm_forward(NormDescriptor norm) {
  return DistanceDescriptor(NormInduced{std::move(norm), Direction::forward});
}

DistanceDescriptor DistanceDescriptor::norm_backward(NormDescriptor norm) {
  return DistanceDescriptor(NormInduced{std::move(norm), Direction::backward});
}

DistanceDescriptor DistanceDescriptor::symmetric(MetricKind metric) {
  return DistanceDescriptor(Symmetric{metric});
}

DistanceDescriptor DistanceDescriptor::finite_table(
    std::vector<Point> points, std::vector<std::vector<double>> values) {
  const std::size_t n = points.size();
  if (n == 0) {
    throw std::invalid_argument("finite_table: point list must be non-empty");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i].dim() != points[0].dim()) {
      throw std::invalid_argument("finite_table: inconsistent point dimensions");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument("finite_table: points must be distinct");
      }
    }
  }
  if (values.size() != n) {
    throw std::invalid_argument("finite_table: matrix must be square over the points");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i].size() != n) {
      throw std::invalid_argument("finite_table: matrix must be square over the points");
    }
    if (values[i][i] != 0.0) {
      throw std::invalid_argument("finite_table: diagonal must be zero");
    }
    for (double v : values[i]) {
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument(
            "finite_table: entries must be finite and non-negative");
      }
    }
  }
  auto table = std::make_shared<const FiniteTable>(
      FiniteTable{std::move(points), std::move(values)});
  return DistanceDescriptor(Node(std::move(table)));
}

namespace {

void require_dim(const Point& v, std::size_t want, const char* what) {
  if (v.dim() != want) {
    throw std::invalid_argument(std::string(what) + ": expects dimension " +
                                std::to_string(want) + ", got " +
                                std::to_string(v.dim()));
  }
}

double symmetric_metric(MetricKind kind, const Point& x, const Point& y) {
  require_same_dim(x, y, "symmetric distance");
  switch (kind) {
    case MetricKind::l1: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.dim(); ++i) s += std::abs(y[i] - x[i]);
      return s;
    }
    case MetricKind::l2: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.dim(); ++i) {
        const double d = y[i] - x[i];
        s += d * d;
      }
      return std::sqrt(s);
    }
    case MetricKind::linf: {
      double m = 0.0;
      for (std::size_t i = 0; i < x.dim(); ++i) {
        m = std::max(m, std::abs(y[i] - x[i]));
      }
      return m;
    }
  }
  throw std::logic_error("unreachable MetricKind");
}

std::size_t table_index(const DistanceDescriptor::FiniteTable& table,
                        const Point& p) {
  for (std::size_t i = 0; i < table.points.size(); ++i) {
    if (table.points[i] == p) return i;
  }
  throw std::invalid_argument("finite_table: point is not in the table");
}

}  // namespace

double DistanceDescriptor::operator()(const Point& x, const Point& y) const {
  return std::visit(
      [&](const auto& node) -> double {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LineOneSided>) {
          require_dim(x, 1, "line_onesided");
          require_dim(y, 1, "line_onesided");
          return y[0] > x[0] ? y[0] - x[0] : 0.0;
        } else if constexpr (std::is_same_v<T, LineQuarter>) {
          require_dim(x, 1, "line_quarter");
          require_dim(y, 1, "line_quarter");
          return y[0] >= x[0] ? y[0] - x[0] : 0.25 * (x[0] - y[0]);
        } else if constexpr (std::is_same_v<T, NormInduced>) {
          return node.direction == Direction::forward ? node.norm(y - x)
                                                      : node.norm(x - y);
        } else if constexpr (std::is_same_v<T, Symmetric>) {
          return symmetric_metric(node.metric, x, y);
        } else {
          return node->values[table_index(*node, x)][table_index(*node, y)];
        }
      },
      node_);
}

std::optional<std::size_t> DistanceDescriptor::required_dim() const {
  return std::visit(
      [](const auto& node) -> std::optional<std::size_t> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LineOneSided> ||
                      std::is_same_v<T, LineQuarter>) {
          return 1;
        } else if constexpr (std::is_same_v<T, NormInduced>) {
          return node.norm.required_dim();
        } else if constexpr (std::is_same_v<T, Symmetric>) {
          return std::nullopt;
        } else {
          return node->points[0].dim();
        }
      },
      node_);
}

const NormDescriptor* DistanceDescriptor::induced_norm() const {
  if (const auto* induced = std::get_if<NormInduced>(&node_)) {
    return &induced->norm;
  }
  return nullptr;
}

std::optional<Direction> DistanceDescriptor::induced_direction() const {
  if (const auto* induced = std::get_if<NormInduced>(&node_)) {
    return induced->direction;
  }
  return std::nullopt;
}

std::string DistanceDescriptor::kind_name() const {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LineOneSided>) {
          return "line_onesided";
        } else if constexpr (std::is_same_v<T, LineQuarter>) {
          return "line_quarter";
        } else if constexpr (std::is_same_v<T, NormInduced>) {
          return (node.direction == Direction::forward ? "norm_forward("
                                                       : "norm_backward(") +
                 node.norm.kind_name() + ")";
        } else if constexpr (std::is_same_v<T, Symmetric>) {
          return "symmetric(" + to_string(node.metric) + ")";
        } else {
          return "finite_table";
        }
      },
      node_);
}

DistanceDescriptor induced_distance(const NormDescriptor& norm,
                                    Direction direction) {
  return direction == Direction::forward
             ? DistanceDescriptor::norm_forward(norm)
             : DistanceDescriptor::norm_backward(norm);
}

}  // namespace asymfp
