#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asymfp/distance.hpp"
#include "asymfp/map.hpp"
#include "asymfp/point.hpp"

namespace asymfp {

enum class SeqDirection { f, b };

/// Directed residuals of a sequence against a candidate limit:
/// f gives p(limit, x_n), b gives p(x_n, limit). The caller judges decay.
std::vector<double> convergence_residuals(const std::vector<Point>& seq,
                                          const Point& limit,
                                          const DistanceDescriptor& dist,
                                          SeqDirection direction);

/// Outcome of a Cauchy prefix scan. `threshold` is the smallest N for which
/// every ordered index pair m >= n >= N inside the prefix stays under eps;
/// the scan fails when that N would have to exceed length/2, and then carries
/// a violating pair with indices past length/2.
struct CauchyCheck {
  bool passed = false;
  std::size_t threshold = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (n, m), m >= n
};

CauchyCheck is_f_cauchy_prefix(const std::vector<Point>& seq,
                               const DistanceDescriptor& dist, double eps);
CauchyCheck is_b_cauchy_prefix(const std::vector<Point>& seq,
                               const DistanceDescriptor& dist, double eps);

enum class PropK12Verdict { consistent, inconsistent, undetermined };

struct PropK12Result {
  PropK12Verdict verdict = PropK12Verdict::undetermined;
  std::size_t threshold = 0;                // first index the conclusion is tested at
  std::optional<std::size_t> witness_index;  // index violating the conclusion
  std::string note;
};

/// Finite-prefix consistency check for the subsequence-upgrade property:
/// a b-Cauchy sequence with an f-convergent subsequence must itself be
/// f-convergent. Preconditions (b-Cauchy at eps/2, subsequence residuals
/// under eps/2 at the tail) gate the verdict; unmet preconditions yield
/// undetermined, never inconsistent.
PropK12Result verify_prop_k12(const std::vector<Point>& seq,
                              const std::vector<std::size_t>& subseq_indices,
                              const Point& limit,
                              const DistanceDescriptor& dist, double eps);

enum class FlagStatus { holds_on_sample, violated, undetermined };

std::string to_string(FlagStatus status);
std::string to_string(PropK12Verdict verdict);

struct ClassificationFlag {
  FlagStatus status = FlagStatus::undetermined;
  std::optional<std::pair<Point, Point>> witness;
};

/// Sampled Lipschitz data for a self-map under an asymmetric distance.
/// Estimates are suprema over the sampled pairs, hence lower bounds for the
/// true constants; flags are three-valued because a sample can refute a
/// universal bound but never certify one.
struct LipschitzReport {
  double k_f_estimate = 0.0;  // may be +infinity
  double l_b_estimate = 0.0;
  std::optional<std::pair<Point, Point>> witness_pair_f;
  std::optional<std::pair<Point, Point>> witness_pair_b;
  ClassificationFlag f_contraction, b_contraction;
  ClassificationFlag f_nonexpansive, b_nonexpansive;
  ClassificationFlag f_shrinkage, b_shrinkage;
  std::size_t pairs_evaluated = 0;
  std::size_t pairs_skipped_f = 0;  // 0/0 ratios, skipped for the estimate
  std::size_t pairs_skipped_b = 0;
};

/// Ratio suprema over an explicit pair list. Pairs with x == y are rejected.
/// Convention at zero denominators: 0/0 pairs are skipped for the estimate,
/// positive/0 pairs pin the estimate at +infinity with the pair as witness.
LipschitzReport estimate_lipschitz(
    const MapDescriptor& map, const DistanceDescriptor& dist,
    const std::vector<std::pair<Point, Point>>& pairs);

/// Standard sampling policy: a uniform grid over a box plus seeded
/// pseudo-random pairs. Fully deterministic for a fixed seed.
struct SamplerConfig {
  std::vector<double> box_lo;
  std::vector<double> box_hi;
  std::size_t points_per_axis = 21;
  std::size_t random_pairs = 200;
  std::uint64_t seed = 0;
};

std::vector<std::pair<Point, Point>> sample_pairs(const SamplerConfig& config);

/// Grid points of the sampler's box (row-major), without the random stage.
std::vector<Point> grid_sample(const SamplerConfig& config);

LipschitzReport classify_map(const MapDescriptor& map,
                             const DistanceDescriptor& dist,
                             const SamplerConfig& config);

}  // namespace asymfp
