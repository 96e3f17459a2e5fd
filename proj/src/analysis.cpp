#include "asymfp/analysis.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "asymfp/axioms.hpp"

namespace asymfp {

std::vector<double> convergence_residuals(const std::vector<Point>& seq,
                                          const Point& limit,
                                          const DistanceDescriptor& dist,
                                          SeqDirection direction) {
  if (seq.empty()) {
    throw std::invalid_argument("convergence_residuals: empty sequence");
  }
  std::vector<double> out;
  out.reserve(seq.size());
  for (const Point& x : seq) {
    out.push_back(direction == SeqDirection::f ? dist(limit, x)
                                               : dist(x, limit));
  }
  return out;
}

namespace {

CauchyCheck cauchy_prefix(const std::vector<Point>& seq,
                          const DistanceDescriptor& dist, double eps,
                          SeqDirection direction) {
  if (seq.size() < 2) {
    throw std::invalid_argument("cauchy check: sequence length must be >= 2");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("cauchy check: eps must be positive");
  }
  const std::size_t len = seq.size();
  auto step = [&](std::size_t n, std::size_t m) {
    // f checks p(x_n, x_m), b checks p(x_m, x_n); m >= n in both.
    return direction == SeqDirection::f ? dist(seq[n], seq[m])
                                        : dist(seq[m], seq[n]);
  };

  // ok[N] = all ordered pairs m >= n >= N stay under eps. Computed from the
  // back so the smallest admissible N falls out in one sweep.
  std::size_t smallest = len;  // len means "only the trivial suffix"
  for (std::size_t n = len; n-- > 0;) {
    bool row_ok = true;
    for (std::size_t m = n; m < len; ++m) {
      if (!(step(n, m) < eps)) {
        row_ok = false;
        break;
      }
    }
    if (row_ok) {
      smallest = n;
    } else {
      break;  // suffix property is monotone; earlier N cannot recover
    }
  }

  CauchyCheck result;
  const std::size_t gate = len / 2;
  if (smallest <= gate) {
    result.passed = true;
    result.threshold = smallest;
    return result;
  }
  result.passed = false;
  result.threshold = smallest;
  for (std::size_t n = gate; n < len && !result.witness; ++n) {
    for (std::size_t m = n; m < len; ++m) {
      if (!(step(n, m) < eps)) {
        result.witness = std::make_pair(n, m);
        break;
      }
    }
  }
  return result;
}

}  // namespace

CauchyCheck is_f_cauchy_prefix(const std::vector<Point>& seq,
                               const DistanceDescriptor& dist, double eps) {
  return cauchy_prefix(seq, dist, eps, SeqDirection::f);
}

CauchyCheck is_b_cauchy_prefix(const std::vector<Point>& seq,
                               const DistanceDescriptor& dist, double eps) {
  return cauchy_prefix(seq, dist, eps, SeqDirection::b);
}

std::string to_string(PropK12Verdict verdict) {
  switch (verdict) {
    case PropK12Verdict::consistent: return "consistent";
    case PropK12Verdict::inconsistent: return "inconsistent";
    case PropK12Verdict::undetermined: return "undetermined";
  }
  throw std::logic_error("unreachable PropK12Verdict");
}

PropK12Result verify_prop_k12(const std::vector<Point>& seq,
                              const std::vector<std::size_t>& subseq_indices,
                              const Point& limit,
                              const DistanceDescriptor& dist, double eps) {
  if (seq.size() < 2) {
    throw std::invalid_argument("verify_prop_k12: sequence length must be >= 2");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("verify_prop_k12: eps must be positive");
  }
  if (subseq_indices.empty()) {
    throw std::invalid_argument("verify_prop_k12: empty subsequence");
  }
  for (std::size_t k = 0; k < subseq_indices.size(); ++k) {
    if (subseq_indices[k] >= seq.size() ||
        (k > 0 && subseq_indices[k] <= subseq_indices[k - 1])) {
      throw std::invalid_argument(
          "verify_prop_k12: subsequence indices must be increasing and in range");
    }
  }

  PropK12Result result;
  const CauchyCheck bc = is_b_cauchy_prefix(seq, dist, eps / 2.0);
  if (!bc.passed) {
    result.note = "prefix is not b-Cauchy at eps/2";
    return result;
  }

  // Smallest K with p(limit, x_{n_k}) < eps/2 for every k >= K.
  std::size_t tail_start = subseq_indices.size();
  for (std::size_t k = subseq_indices.size(); k-- > 0;) {
    if (dist(limit, seq[subseq_indices[k]]) < eps / 2.0) {
      tail_start = k;
    } else {
      break;
    }
  }
  if (tail_start == subseq_indices.size()) {
    result.note = "subsequence residuals never fall below eps/2";
    return result;
  }

  const std::size_t combined =
      std::max(bc.threshold, subseq_indices[tail_start]);
  result.threshold = combined;
  for (std::size_t n = combined; n < seq.size(); ++n) {
    if (!(dist(limit, seq[n]) < eps)) {
      result.verdict = PropK12Verdict::inconsistent;
      result.witness_index = n;
      result.note = "forward residual at or above eps past the threshold";
      return result;
    }
  }
  result.verdict = PropK12Verdict::consistent;
  return result;
}

std::string to_string(FlagStatus status) {
  switch (status) {
    case FlagStatus::holds_on_sample: return "holds_on_sample";
    case FlagStatus::violated: return "violated";
    case FlagStatus::undetermined: return "undetermined";
  }
  throw std::logic_error("unreachable FlagStatus");
}

LipschitzReport estimate_lipschitz(
    const MapDescriptor& map, const DistanceDescriptor& dist,
    const std::vector<std::pair<Point, Point>>& pairs) {
  if (pairs.empty()) {
    throw std::invalid_argument("estimate_lipschitz: empty pair list");
  }
  const double inf = std::numeric_limits<double>::infinity();

  LipschitzReport report;
  bool any_f = false, any_b = false;
  bool f_contr_violated = false, b_contr_violated = false;
  bool f_nonexp_violated = false, b_nonexp_violated = false;
  std::optional<std::pair<Point, Point>> f_contr_wit, b_contr_wit;
  std::optional<std::pair<Point, Point>> f_nonexp_wit, b_nonexp_wit;
  std::optional<std::pair<Point, Point>> f_shrink_wit, b_shrink_wit;

  for (const auto& [x, y] : pairs) {
    if (x == y) {
      throw std::invalid_argument("estimate_lipschitz: pair with x == y");
    }
    const Point tx = map.apply(x);
    const Point ty = map.apply(y);
    const double num = dist(tx, ty);
    const double den_f = dist(x, y);
    const double den_b = dist(y, x);
    ++report.pairs_evaluated;

    // Flag comparisons work on the raw distances, not the ratios, so a zero
    // denominator still produces an honest verdict.
    if (num >= den_f && !f_contr_wit) f_contr_wit = std::make_pair(x, y);
    if (num >= den_f) f_contr_violated = true;
    if (num > den_f && !f_nonexp_wit) f_nonexp_wit = std::make_pair(x, y);
    if (num > den_f) f_nonexp_violated = true;
    if (!(num < den_f) && !f_shrink_wit) f_shrink_wit = std::make_pair(x, y);
    if (num >= den_b && !b_contr_wit) b_contr_wit = std::make_pair(x, y);
    if (num >= den_b) b_contr_violated = true;
    if (num > den_b && !b_nonexp_wit) b_nonexp_wit = std::make_pair(x, y);
    if (num > den_b) b_nonexp_violated = true;
    if (!(num < den_b) && !b_shrink_wit) b_shrink_wit = std::make_pair(x, y);

    if (den_f == 0.0 && num == 0.0) {
      ++report.pairs_skipped_f;
    } else {
      const double ratio = den_f == 0.0 ? inf : num / den_f;
      if (!any_f || ratio > report.k_f_estimate) {
        report.k_f_estimate = ratio;
        report.witness_pair_f = std::make_pair(x, y);
      }
      any_f = true;
    }
    if (den_b == 0.0 && num == 0.0) {
      ++report.pairs_skipped_b;
    } else {
      const double ratio = den_b == 0.0 ? inf : num / den_b;
      if (!any_b || ratio > report.l_b_estimate) {
        report.l_b_estimate = ratio;
        report.witness_pair_b = std::make_pair(x, y);
      }
      any_b = true;
    }
  }

  auto classify = [](bool informed, bool violated,
                     const std::optional<std::pair<Point, Point>>& wit)
      -> ClassificationFlag {
    if (!informed) return {FlagStatus::undetermined, std::nullopt};
    if (violated) return {FlagStatus::violated, wit};
    return {FlagStatus::holds_on_sample, std::nullopt};
  };
  report.f_contraction = classify(any_f, f_contr_violated, f_contr_wit);
  report.f_nonexpansive = classify(any_f, f_nonexp_violated, f_nonexp_wit);
  report.b_contraction = classify(any_b, b_contr_violated, b_contr_wit);
  report.b_nonexpansive = classify(any_b, b_nonexp_violated, b_nonexp_wit);
  // Shrinkage is a pure pairwise strict inequality: every pair is informative.
  report.f_shrinkage = f_shrink_wit
                           ? ClassificationFlag{FlagStatus::violated, f_shrink_wit}
                           : ClassificationFlag{FlagStatus::holds_on_sample, {}};
  report.b_shrinkage = b_shrink_wit
                           ? ClassificationFlag{FlagStatus::violated, b_shrink_wit}
                           : ClassificationFlag{FlagStatus::holds_on_sample, {}};
  return report;
}

namespace {

// Deterministic uniform double in [0, 1); independent of library
// distribution internals so seeds reproduce across platforms.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<Point> grid_sample(const SamplerConfig& config) {
  std::vector<std::size_t> counts(config.box_lo.size(),
                                  config.points_per_axis);
  return grid_points(config.box_lo, config.box_hi, counts);
}

std::vector<std::pair<Point, Point>> sample_pairs(const SamplerConfig& config) {
  const std::size_t dim = config.box_lo.size();
  if (dim == 0 || config.box_hi.size() != dim) {
    throw std::invalid_argument("sample_pairs: box shape mismatch");
  }
  if (config.points_per_axis == 0 && config.random_pairs == 0) {
    throw std::invalid_argument("sample_pairs: degenerate sampler");
  }

  std::vector<std::pair<Point, Point>> pairs;
  if (config.points_per_axis > 1) {
    const std::vector<Point> grid = grid_sample(config);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = 0; j < grid.size(); ++j) {
        if (i != j && grid[i] != grid[j]) {
          pairs.emplace_back(grid[i], grid[j]);
        }
      }
    }
  }

  std::mt19937_64 rng(config.seed);
  auto random_point = [&]() {
    std::vector<double> coords(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      coords[a] = config.box_lo[a] +
                  next_unit(rng) * (config.box_hi[a] - config.box_lo[a]);
    }
    return Point(std::move(coords));
  };
  for (std::size_t k = 0; k < config.random_pairs; ++k) {
    Point x = random_point();
    Point y = random_point();
    while (y == x) y = random_point();
    pairs.emplace_back(std::move(x), std::move(y));
  }
  if (pairs.empty()) {
    throw std::invalid_argument("sample_pairs: sampler produced no pairs");
  }
  return pairs;
}

LipschitzReport classify_map(const MapDescriptor& map,
                             const DistanceDescriptor& dist,
                             const SamplerConfig& config) {
  return estimate_lipschitz(map, dist, sample_pairs(config));
}

}  // namespace asymfp
