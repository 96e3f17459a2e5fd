#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace asymfp {

/// Element of a finite-dimensional real space. Immutable after construction;
/// coordinates must be finite and the dimension at least one. Equality is
/// exact coordinate equality (points are table keys, never fuzzy-matched).
class Point {
 public:
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
      throw std::invalid_argument("Point: dimension must be >= 1");
    }
    for (double c : coords_) {
      if (!std::isfinite(c)) {
        throw std::invalid_argument("Point: coordinates must be finite");
      }
    }
  }

  Point(std::initializer_list<double> coords)
      : Point(std::vector<double>(coords)) {}

  static Point scalar(double x) { return Point({x}); }

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

 private:
  std::vector<double> coords_;
};

inline void require_same_dim(const Point& a, const Point& b,
                             const char* context) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(context) +
                                ": dimension mismatch between operands");
  }
}

inline Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b, "Point::operator+");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return Point(std::move(out));
}

inline Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b, "Point::operator-");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return Point(std::move(out));
}

inline Point operator*(double s, const Point& p) {
  std::vector<double> out(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) out[i] = s * p[i];
  return Point(std::move(out));
}

inline double max_abs_coord(const Point& p) {
  double m = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) m = std::max(m, std::abs(p[i]));
  return m;
}

inline Point zero_point(std::size_t dim) {
  return Point(std::vector<double>(dim, 0.0));
}

}  // namespace asymfp
