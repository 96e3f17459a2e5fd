#include "asymfp/axioms.hpp"

#include <cmath>
#include <stdexcept>

namespace asymfp {

namespace {

void require_sample(const std::vector<Point>& sample) {
  if (sample.empty()) {
    throw std::invalid_argument("axiom check: sample must be non-empty");
  }
  for (const Point& p : sample) {
    if (p.dim() != sample[0].dim()) {
      throw std::invalid_argument("axiom check: sample dimensions differ");
    }
  }
}

}  // namespace

AxiomReport check_distance_axioms(const DistanceFn& dist,
                                  const std::vector<Point>& sample, double tol,
                                  const std::string& subject) {
  require_sample(sample);
  AxiomReport report{subject, sample.size(), tol, {}};
  const std::size_t n = sample.size();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = dist(sample[i], sample[j]);
      if (!std::isfinite(d) || d < -tol) {
        report.violations.push_back({"AD1",
                                     {sample[i], sample[j]},
                                     std::nullopt,
                                     std::isfinite(d) ? -d : d,
                                     "p(x,y) is negative or non-finite"});
      }
      if (i < j) {
        const double back = dist(sample[j], sample[i]);
        if (sample[i] != sample[j] && d <= tol && back <= tol) {
          report.violations.push_back(
              {"AD2",
               {sample[i], sample[j]},
               std::nullopt,
               tol - std::max(d, back),
               "both directed distances vanish for distinct points"});
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d_ij = dist(sample[i], sample[j]);
      for (std::size_t k = 0; k < n; ++k) {
        const double excess =
            dist(sample[i], sample[k]) - d_ij - dist(sample[j], sample[k]);
        if (excess > tol) {
          report.violations.push_back(
              {"AD3",
               {sample[i], sample[j], sample[k]},
               std::nullopt,
               excess,
               "p(x,z) exceeds p(x,y) + p(y,z)"});
        }
      }
    }
  }
  return report;
}

AxiomReport check_distance_axioms(const DistanceDescriptor& desc,
                                  const std::vector<Point>& sample,
                                  double tol) {
  return check_distance_axioms(
      [&desc](const Point& x, const Point& y) { return desc(x, y); }, sample,
      tol, desc.kind_name());
}

AxiomReport check_norm_axioms(const NormFn& norm,
                              const std::vector<Point>& sample,
                              const std::vector<double>& scalars, double tol,
                              const std::string& subject) {
  require_sample(sample);
  for (double s : scalars) {
    if (!(s >= 0.0)) {
      throw std::invalid_argument("axiom check: AN3 scalars must be >= 0");
    }
  }
  AxiomReport report{subject, sample.size(), tol, {}};

  for (const Point& v : sample) {
    const double value = norm(v);
    if (!std::isfinite(value) || value < -tol) {
      report.violations.push_back({"AN1",
                                   {v},
                                   std::nullopt,
                                   std::isfinite(value) ? -value : value,
                                   "|v| is negative or non-finite"});
    }
    if (max_abs_coord(v) > tol) {
      const double neg = norm(-1.0 * v);
      if (value <= tol && neg <= tol) {
        report.violations.push_back(
            {"AN2",
             {v},
             std::nullopt,
             tol - std::max(value, neg),
             "|v| and |-v| both vanish for non-zero v"});
      }
    }
    for (double lambda : scalars) {
      const double excess = std::abs(norm(lambda * v) - lambda * value);
      if (excess > tol) {
        report.violations.push_back({"AN3",
                                     {v},
                                     lambda,
                                     excess,
                                     "|lambda v| differs from lambda |v|"});
      }
    }
  }

  for (const Point& x : sample) {
    const double nx = norm(x);
    for (const Point& y : sample) {
      const double excess = norm(x + y) - nx - norm(y);
      if (excess > tol) {
        report.violations.push_back(
            {"AN4", {x, y}, std::nullopt, excess, "|x+y| exceeds |x| + |y|"});
      }
    }
  }
  return report;
}

AxiomReport check_norm_axioms(const NormDescriptor& desc,
                              const std::vector<Point>& sample,
                              const std::vector<double>& scalars, double tol) {
  return check_norm_axioms([&desc](const Point& v) { return desc(v); }, sample,
                           scalars, tol, desc.kind_name());
}

std::vector<Point> grid_points(const std::vector<double>& lo,
                               const std::vector<double>& hi,
                               const std::vector<std::size_t>& points_per_axis) {
  const std::size_t dim = lo.size();
  if (dim == 0 || hi.size() != dim || points_per_axis.size() != dim) {
    throw std::invalid_argument("grid_points: lo/hi/count shape mismatch");
  }
  std::size_t total = 1;
  for (std::size_t c : points_per_axis) {
    if (c == 0) throw std::invalid_argument("grid_points: zero count");
    total *= c;
  }
  std::vector<Point> out;
  out.reserve(total);
  std::vector<std::size_t> index(dim, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<double> coords(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      coords[a] = points_per_axis[a] == 1
                      ? lo[a]
                      : lo[a] + (hi[a] - lo[a]) *
                                    static_cast<double>(index[a]) /
                                    static_cast<double>(points_per_axis[a] - 1);
    }
    out.push_back(Point(std::move(coords)));
    for (std::size_t a = dim; a-- > 0;) {
      if (++index[a] < points_per_axis[a]) break;
      index[a] = 0;
    }
  }
  return out;
}

std::vector<Point> grid_points_1d(double lo, double hi, std::size_t count) {
  return grid_points({lo}, {hi}, {count});
}

}  // namespace asymfp
