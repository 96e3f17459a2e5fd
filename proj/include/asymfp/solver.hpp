#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asymfp/distance.hpp"
#include "asymfp/map.hpp"
#include "asymfp/norm.hpp"
#include "asymfp/point.hpp"

namespace asymfp {

struct SolverConfig {
  double tol = 1e-10;
  int max_iter = 10000;
  bool record_trace = false;
};

enum class SolveStatus { converged, max_iter_exceeded, diverged };

std::string to_string(SolveStatus status);

struct TraceRow {
  int n = 0;
  Point x;
  double d_fwd_step = 0.0;  // d(x_n, x_{n+1})
  double d_bwd_step = 0.0;  // d(x_{n+1}, x_n)
  std::optional<double> bound;  // lambda k^n / (1-k) when a constant is known
};

/// Outcome of a fixed-point run. Convergence demands BOTH directed residuals
/// under tol: in a genuinely asymmetric space one vanishing direction does
/// not make a fixed point.
struct FixedPointResult {
  SolveStatus status = SolveStatus::max_iter_exceeded;
  Point point{{0.0}};
  int iterations = 0;
  double forward_residual = 0.0;   // d(x, Tx)
  double backward_residual = 0.0;  // d(Tx, x)
  std::optional<bool> bound_respected;
  std::vector<TraceRow> trace;
  std::map<std::string, double> diagnostics;
};

/// Iterate magnitude above which the run is declared diverged. Hypotheses
/// are the caller's job; the solver fails loudly when they are absent.
constexpr double kDivergenceGuard = 1e12;

using MapFn = std::function<std::vector<double>(const Point&)>;

/// Picard iteration x_{n+1} = T x_n with the dual stopping rule. When a
/// contraction constant k < 1 is supplied, the orbit is audited against the
/// a-priori pairwise bound d(x_n, x_m) <= lambda k^m / (1-k) with
/// lambda = max{d(x_1,x_0), d(x_0,x_1)}, and trace rows carry the bound.
FixedPointResult picard(const MapDescriptor& map, const DistanceDescriptor& dist,
                        const Point& x0, const SolverConfig& cfg,
                        std::optional<double> contraction_k = std::nullopt);

/// Callable-based core used by every solver above and by the averaged maps.
FixedPointResult picard_fn(const MapFn& fn, const DistanceDescriptor& dist,
                           const Point& x0, const SolverConfig& cfg,
                           std::optional<double> contraction_k = std::nullopt);

/// Picard on the k-fold composition T^k, continued until the located point
/// is fixed under T itself (both directed T-residuals under tol) or the
/// iteration budget runs out. Reported residuals are the T-residuals; the
/// T^k residuals land in diagnostics. With k = 1 this is exactly picard.
FixedPointResult power_picard(const MapDescriptor& map,
                              const DistanceDescriptor& dist, int k,
                              const Point& x0, const SolverConfig& cfg,
                              std::optional<double> contraction_k = std::nullopt);

/// Grid minimization of g(z) = d(z, Tz) over the candidates (first index
/// wins ties) followed by Picard refinement from the argmin.
FixedPointResult edelstein_minimize(const MapDescriptor& map,
                                    const DistanceDescriptor& dist,
                                    const std::vector<Point>& candidates,
                                    const SolverConfig& cfg);

struct AveragedVariant {
  enum class Kind { schauder_anchor, sapf_anchor, scaling };
  Kind kind;
  Point anchor;  // x0 for schauder_anchor/scaling, b for sapf_anchor
};

std::string to_string(AveragedVariant::Kind kind);

struct FamilyEntry {
  int n = 0;
  Point point{{0.0}};
  double forward_residual = 0.0;   // |x_n - T x_n|
  double backward_residual = 0.0;  // |T x_n - x_n|
  std::optional<double> bound;
  std::optional<bool> bound_respected;
  SolveStatus inner_status = SolveStatus::max_iter_exceeded;
};

struct FamilyResult {
  AveragedVariant::Kind variant;
  std::vector<FamilyEntry> entries;  // n = 2..n_max in order
  double bound_constant = 0.0;       // sapf: M (with slack); scaling: max{r, |Tx0|}
  bool all_solved = true;
};

/// Solves the fixed points of the averaged maps S_n (or T_n) for
/// n = 2..n_max by Picard under the forward norm-induced distance.
///   schauder_anchor: S_n x = (1 - 1/n) Tx + (1/n) x0      (no bound column)
///   sapf_anchor:     S_n x = a0/n + (1 - 1/n) Tx, a0 = Tb; bound M/n with
///                    M = 1.05 * max over sample_K of |x - b|
///   scaling:         T_n x = t_n Tx, t_n = n/(n+1); bound
///                    2 (1 - t_n) max{r, |T x0|}, r = max over sample_K of |x - x0|
FamilyResult averaged_family(const MapDescriptor& map, const NormDescriptor& norm,
                             const AveragedVariant& variant, int n_max,
                             const SolverConfig& cfg,
                             const std::vector<Point>& sample_K);

enum class GkVerdict { consistent_with_minimal, inconsistent, undetermined };

std::string to_string(GkVerdict verdict);

struct GkPointGap {
  Point x;
  double tail_mean = 0.0;  // mean of |x_n - x| over the last quarter
  double gap = 0.0;        // |tail_mean - diam|
};

struct GkReport {
  GkVerdict verdict = GkVerdict::undetermined;
  double diam = 0.0;
  std::vector<GkPointGap> gaps;
};

/// Contrapositive evidence check: on a minimal invariant set every
/// approximating sequence drifts to distance Diam(K) from every point, so a
/// tail that settles anywhere else marks the set as not minimal. The verdict
/// never claims minimality.
GkReport gk_diagnostic(const FamilyResult& family,
                       const std::vector<Point>& sample_K,
                       const NormDescriptor& norm);

}  // namespace asymfp
