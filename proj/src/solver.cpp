#include "asymfp/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace asymfp {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::max_iter_exceeded: return "max_iter_exceeded";
    case SolveStatus::diverged: return "diverged";
  }
  throw std::logic_error("unreachable SolveStatus");
}

namespace {

constexpr double kBoundSlack = 1e-12;
constexpr std::size_t kOrbitAuditCap = 512;

void validate(const SolverConfig& cfg) {
  if (!(cfg.tol > 0.0)) {
    throw std::invalid_argument("solver: tol must be positive");
  }
  if (cfg.max_iter < 1) {
    throw std::invalid_argument("solver: max_iter must be >= 1");
  }
}

bool finite_and_bounded(const std::vector<double>& coords) {
  for (double c : coords) {
    if (!std::isfinite(c) || std::abs(c) > kDivergenceGuard) return false;
  }
  return true;
}

}  // namespace

FixedPointResult picard_fn(const MapFn& fn, const DistanceDescriptor& dist,
                           const Point& x0, const SolverConfig& cfg,
                           std::optional<double> contraction_k) {
  validate(cfg);
  if (contraction_k && !(*contraction_k > 0.0 && *contraction_k < 1.0)) {
    throw std::invalid_argument("picard: contraction constant must lie in (0,1)");
  }

  FixedPointResult result;
  result.point = x0;
  const bool keep_orbit = contraction_k.has_value();
  std::vector<Point> orbit;
  if (keep_orbit) orbit.push_back(x0);

  std::optional<double> lambda;  // max{d(x1,x0), d(x0,x1)}, set after step 0
  Point x = x0;
  for (int n = 0;; ++n) {
    const std::vector<double> raw = fn(x);
    if (!finite_and_bounded(raw)) {
      result.status = SolveStatus::diverged;
      result.point = x;
      result.iterations = n;
      result.forward_residual = std::numeric_limits<double>::infinity();
      result.backward_residual = std::numeric_limits<double>::infinity();
      break;
    }
    const Point y(raw);
    const double fwd = dist(x, y);
    const double bwd = dist(y, x);
    if (n == 0) {
      lambda = std::max(fwd, bwd);
      if (contraction_k) result.diagnostics["lambda"] = *lambda;
    }
    if (fwd <= cfg.tol && bwd <= cfg.tol) {
      result.status = SolveStatus::converged;
      result.point = x;
      result.iterations = n;
      result.forward_residual = fwd;
      result.backward_residual = bwd;
      break;
    }
    if (n == cfg.max_iter) {
      result.status = SolveStatus::max_iter_exceeded;
      result.point = x;
      result.iterations = n;
      result.forward_residual = fwd;
      result.backward_residual = bwd;
      break;
    }
    if (cfg.record_trace) {
      std::optional<double> bound;
      if (contraction_k) {
        bound = *lambda * std::pow(*contraction_k, n) / (1.0 - *contraction_k);
      }
      result.trace.push_back({n, x, fwd, bwd, bound});
    }
    x = y;
    if (keep_orbit && orbit.size() < kOrbitAuditCap) orbit.push_back(x);
  }

  if (contraction_k && result.status != SolveStatus::diverged) {
    // Audit every recorded pair m <= n against lambda k^m / (1-k).
    const double k = *contraction_k;
    bool respected = true;
    for (std::size_t m = 0; m < orbit.size() && respected; ++m) {
      const double bound =
          *lambda * std::pow(k, static_cast<double>(m)) / (1.0 - k);
      for (std::size_t n = m; n < orbit.size(); ++n) {
        if (dist(orbit[n], orbit[m]) > bound + kBoundSlack) {
          respected = false;
          result.diagnostics["bound_violation_m"] = static_cast<double>(m);
          result.diagnostics["bound_violation_n"] = static_cast<double>(n);
          break;
        }
      }
    }
    result.bound_respected = respected;
  }
  return result;
}

FixedPointResult picard(const MapDescriptor& map, const DistanceDescriptor& dist,
                        const Point& x0, const SolverConfig& cfg,
                        std::optional<double> contraction_k) {
  return picard_fn([&map](const Point& p) { return map.apply_raw(p); }, dist,
                   x0, cfg, contraction_k);
}

FixedPointResult power_picard(const MapDescriptor& map,
                              const DistanceDescriptor& dist, int k,
                              const Point& x0, const SolverConfig& cfg,
                              std::optional<double> contraction_k) {
  if (k < 1) {
    throw std::invalid_argument("power_picard: k must be >= 1");
  }
  validate(cfg);

  const MapFn power = [&map, k](const Point& p) {
    std::vector<double> raw = map.apply_raw(p);
    for (int i = 1; i < k; ++i) {
      if (!finite_and_bounded(raw)) return raw;
      raw = map.apply_raw(Point(raw));
    }
    return raw;
  };
  FixedPointResult result = picard_fn(power, dist, x0, cfg, contraction_k);

  // The corollary only hands us a fixed point of T^k; insist on fixedness
  // under T itself, resuming the same Picard sequence while budget remains.
  int spent = result.iterations;
  while (result.status == SolveStatus::converged) {
    const std::vector<double> t_raw = map.apply_raw(result.point);
    if (!finite_and_bounded(t_raw)) {
      result.status = SolveStatus::diverged;
      break;
    }
    const Point t_image(t_raw);
    const double t_fwd = dist(result.point, t_image);
    const double t_bwd = dist(t_image, result.point);
    result.diagnostics["power_forward_residual"] = result.forward_residual;
    result.diagnostics["power_backward_residual"] = result.backward_residual;
    result.forward_residual = t_fwd;
    result.backward_residual = t_bwd;
    if (t_fwd <= cfg.tol && t_bwd <= cfg.tol) break;  // fixed under T as well

    if (spent >= cfg.max_iter) {
      result.status = SolveStatus::max_iter_exceeded;
      break;
    }
    SolverConfig remaining = cfg;
    remaining.max_iter = cfg.max_iter - spent;
    FixedPointResult next =
        picard_fn(power, dist, map.apply(result.point), remaining,
                  contraction_k ? contraction_k : std::nullopt);
    // One T application plus the inner T^k steps.
    spent += 1 + next.iterations;
    for (TraceRow& row : next.trace) row.n += result.iterations + 1;
    result.trace.insert(result.trace.end(), next.trace.begin(),
                        next.trace.end());
    result.point = next.point;
    result.iterations = spent;
    result.status = next.status;
    result.forward_residual = next.forward_residual;
    result.backward_residual = next.backward_residual;
    if (next.status != SolveStatus::converged) break;
  }
  return result;
}

FixedPointResult edelstein_minimize(const MapDescriptor& map,
                                    const DistanceDescriptor& dist,
                                    const std::vector<Point>& candidates,
                                    const SolverConfig& cfg) {
  if (candidates.empty()) {
    throw std::invalid_argument("edelstein_minimize: empty candidate list");
  }
  validate(cfg);
  std::size_t argmin = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double g = dist(candidates[i], map.apply(candidates[i]));
    if (g < best) {  // strict: first index wins ties
      best = g;
      argmin = i;
    }
  }
  FixedPointResult result = picard(map, dist, candidates[argmin], cfg);
  result.diagnostics["grid_argmin_index"] = static_cast<double>(argmin);
  result.diagnostics["grid_min_g"] = best;
  return result;
}

std::string to_string(AveragedVariant::Kind kind) {
  switch (kind) {
    case AveragedVariant::Kind::schauder_anchor: return "schauder_anchor";
    case AveragedVariant::Kind::sapf_anchor: return "sapf_anchor";
    case AveragedVariant::Kind::scaling: return "scaling";
  }
  throw std::logic_error("unreachable AveragedVariant::Kind");
}

FamilyResult averaged_family(const MapDescriptor& map, const NormDescriptor& norm,
                             const AveragedVariant& variant, int n_max,
                             const SolverConfig& cfg,
                             const std::vector<Point>& sample_K) {
  validate(cfg);
  if (n_max < 2) {
    throw std::invalid_argument("averaged_family: n_max must be >= 2");
  }
  const DistanceDescriptor dist = DistanceDescriptor::norm_forward(norm);
  const Point& anchor = variant.anchor;

  FamilyResult family{variant.kind, {}, 0.0, true};
  const bool needs_sample = variant.kind != AveragedVariant::Kind::schauder_anchor;
  if (needs_sample && sample_K.empty()) {
    throw std::invalid_argument(
        "averaged_family: this variant needs a sample of K for its bound");
  }

  std::optional<Point> sapf_a0;
  if (variant.kind == AveragedVariant::Kind::sapf_anchor) {
    sapf_a0 = map.apply(anchor);
    double sup = 0.0;
    for (const Point& x : sample_K) sup = std::max(sup, norm(x - anchor));
    family.bound_constant = 1.05 * sup;  // sampled supremum plus slack
  } else if (variant.kind == AveragedVariant::Kind::scaling) {
    double r = 0.0;
    for (const Point& x : sample_K) r = std::max(r, norm(x - anchor));
    family.bound_constant = std::max(r, norm(map.apply(anchor)));
  }

  for (int n = 2; n <= n_max; ++n) {
    const double inv_n = 1.0 / static_cast<double>(n);
    const double t_n = static_cast<double>(n) / static_cast<double>(n + 1);
    MapFn averaged;
    switch (variant.kind) {
      case AveragedVariant::Kind::schauder_anchor:
        averaged = [&map, &anchor, inv_n](const Point& p) {
          const std::vector<double> t = map.apply_raw(p);
          std::vector<double> out(t.size());
          for (std::size_t i = 0; i < t.size(); ++i) {
            out[i] = (1.0 - inv_n) * t[i] + inv_n * anchor[i];
          }
          return out;
        };
        break;
      case AveragedVariant::Kind::sapf_anchor:
        averaged = [&map, &sapf_a0, inv_n](const Point& p) {
          const std::vector<double> t = map.apply_raw(p);
          std::vector<double> out(t.size());
          for (std::size_t i = 0; i < t.size(); ++i) {
            out[i] = inv_n * (*sapf_a0)[i] + (1.0 - inv_n) * t[i];
          }
          return out;
        };
        break;
      case AveragedVariant::Kind::scaling:
        averaged = [&map, t_n](const Point& p) {
          std::vector<double> out = map.apply_raw(p);
          for (double& c : out) c *= t_n;
          return out;
        };
        break;
    }

    SolverConfig inner = cfg;
    inner.record_trace = false;
    const FixedPointResult solved = picard_fn(averaged, dist, anchor, inner);

    FamilyEntry entry;
    entry.n = n;
    entry.inner_status = solved.status;
    entry.point = solved.point;
    if (solved.status == SolveStatus::converged) {
      const Point image = map.apply(solved.point);
      entry.forward_residual = norm(solved.point - image);
      entry.backward_residual = norm(image - solved.point);
      switch (variant.kind) {
        case AveragedVariant::Kind::sapf_anchor:
          entry.bound = family.bound_constant * inv_n;
          entry.bound_respected = entry.forward_residual <= *entry.bound;
          break;
        case AveragedVariant::Kind::scaling:
          entry.bound = 2.0 * (1.0 - t_n) * family.bound_constant;
          entry.bound_respected = entry.backward_residual <= *entry.bound;
          break;
        case AveragedVariant::Kind::schauder_anchor:
          break;  // the theorem states no residual bound
      }
    } else {
      family.all_solved = false;
    }
    family.entries.push_back(std::move(entry));
  }
  return family;
}

std::string to_string(GkVerdict verdict) {
  switch (verdict) {
    case GkVerdict::consistent_with_minimal: return "consistent_with_minimal";
    case GkVerdict::inconsistent: return "inconsistent";
    case GkVerdict::undetermined: return "undetermined";
  }
  throw std::logic_error("unreachable GkVerdict");
}

GkReport gk_diagnostic(const FamilyResult& family,
                       const std::vector<Point>& sample_K,
                       const NormDescriptor& norm) {
  if (sample_K.empty()) {
    throw std::invalid_argument("gk_diagnostic: empty sample of K");
  }
  GkReport report;
  if (family.entries.size() < 4) {
    report.verdict = GkVerdict::undetermined;
    return report;
  }

  double diam = 0.0;
  for (const Point& u : sample_K) {
    for (const Point& v : sample_K) diam = std::max(diam, norm(v - u));
  }
  report.diam = diam;

  const std::size_t tail = std::max<std::size_t>(1, family.entries.size() / 4);
  const std::size_t start = family.entries.size() - tail;
  bool inconsistent = false;
  for (const Point& x : sample_K) {
    double acc = 0.0;
    for (std::size_t i = start; i < family.entries.size(); ++i) {
      acc += norm(family.entries[i].point - x);
    }
    GkPointGap gap{x, acc / static_cast<double>(tail), 0.0};
    gap.gap = std::abs(gap.tail_mean - diam);
    if (gap.gap > 0.10 * diam + 1e-12) inconsistent = true;
    report.gaps.push_back(std::move(gap));
  }
  report.verdict = inconsistent ? GkVerdict::inconsistent
                                : GkVerdict::consistent_with_minimal;
  return report;
}

}  // namespace asymfp
