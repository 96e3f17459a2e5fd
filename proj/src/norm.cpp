#include "asymfp/norm.hpp"

#include <cmath>
#include <stdexcept>

namespace asymfp {

std::string to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::l1: return "l1";
    case MetricKind::l2: return "l2";
    case MetricKind::linf: return "linf";
  }
  throw std::logic_error("unreachable MetricKind");
}

MetricKind metric_kind_from_string(const std::string& name) {
  if (name == "l1") return MetricKind::l1;
  if (name == "l2") return MetricKind::l2;
  if (name == "linf") return MetricKind::linf;
  throw std::invalid_argument("unknown metric kind: " + name);
}

NormDescriptor NormDescriptor::upper() { return NormDescriptor(Upper{}); }

NormDescriptor NormDescriptor::planar_max() {
  return NormDescriptor(PlanarMax{});
}

NormDescriptor NormDescriptor::symmetric_lift(MetricKind metric) {
  return NormDescriptor(SymmetricLift{metric});
}

NormDescriptor NormDescriptor::scaled(NormDescriptor base, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("scaled norm: factor must be positive");
  }
  return NormDescriptor(
      Scaled{std::make_shared<const NormDescriptor>(std::move(base)), factor});
}

namespace {

double symmetric_norm(MetricKind kind, const Point& v) {
  switch (kind) {
    case MetricKind::l1: {
      double s = 0.0;
      for (std::size_t i = 0; i < v.dim(); ++i) s += std::abs(v[i]);
      return s;
    }
    case MetricKind::l2: {
      double s = 0.0;
      for (std::size_t i = 0; i < v.dim(); ++i) s += v[i] * v[i];
      return std::sqrt(s);
    }
    case MetricKind::linf:
      return max_abs_coord(v);
  }
  throw std::logic_error("unreachable MetricKind");
}

void require_dim(const Point& v, std::size_t want, const char* what) {
  if (v.dim() != want) {
    throw std::invalid_argument(std::string(what) + ": expects dimension " +
                                std::to_string(want) + ", got " +
                                std::to_string(v.dim()));
  }
}

}  // namespace

double NormDescriptor::operator()(const Point& v) const {
  return std::visit(
      [&](const auto& node) -> double {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Upper>) {
          require_dim(v, 1, "upper norm");
          return std::max(v[0], 0.0);
        } else if constexpr (std::is_same_v<T, PlanarMax>) {
          require_dim(v, 2, "planar_max norm");
          return std::max({0.0, v[1] - v[0], v[1] + v[0]});
        } else if constexpr (std::is_same_v<T, SymmetricLift>) {
          return symmetric_norm(node.metric, v);
        } else {
          return node.factor * (*node.base)(v);
        }
      },
      node_);
}

std::optional<std::size_t> NormDescriptor::required_dim() const {
  return std::visit(
      [](const auto& node) -> std::optional<std::size_t> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Upper>) {
          return 1;
        } else if constexpr (std::is_same_v<T, PlanarMax>) {
          return 2;
        } else if constexpr (std::is_same_v<T, SymmetricLift>) {
          return std::nullopt;
        } else {
          return node.base->required_dim();
        }
      },
      node_);
}

std::string NormDescriptor::kind_name() const {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Upper>) {
          return "upper";
        } else if constexpr (std::is_same_v<T, PlanarMax>) {
          return "planar_max";
        } else if constexpr (std::is_same_v<T, SymmetricLift>) {
          return "symmetric_lift(" + to_string(node.metric) + ")";
        } else {
          return "scaled(" + node.base->kind_name() + ")";
        }
      },
      node_);
}

}  // namespace asymfp
