#include "sphere_search/verification.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sphere_search/parallel.hpp"

namespace sphere_search {

namespace {

constexpr std::size_t kMaxDiagonalDim = 12;

std::size_t common_dim(std::span<const Vector> points, const char* what) {
  if (points.empty()) throw GeometryError(std::string(what) + ": empty point set");
  const std::size_t d = points.front().size();
  if (d == 0) throw GeometryError(std::string(what) + ": zero-dimensional points");
  for (const auto& p : points) {
    if (p.size() != d) throw GeometryError(std::string(what) + ": mixed dimensions");
    require_finite(p, what);
  }
  return d;
}

void require_directions(std::span<const UnitDirection> directions, std::size_t dim,
                        const char* what) {
  if (directions.empty()) {
    throw GeometryError(std::string(what) + ": need at least one direction");
  }
  for (const auto& u : directions) {
    if (u.dim() != dim) throw GeometryError(std::string(what) + ": mixed dimensions");
  }
}

CoverReport report_first_failure(std::span<const UnitDirection> directions,
                                 std::optional<std::size_t> failure) {
  CoverReport report;
  report.samples_used = directions.size();
  report.covered = !failure.has_value();
  if (failure) report.witness = directions[*failure];
  return report;
}

double max_dot(std::span<const UnitDirection> poles, std::span<const double> x) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : poles) best = std::max(best, dot(p.coords(), x));
  return best;
}

/// Subgradient descent of max_i <pole_i, x> on the sphere from `start`.
/// Returns the best point visited.
Vector descend_max_dot(std::span<const UnitDirection> poles, Vector x) {
  constexpr std::size_t kMaxIterations = 2000;
  constexpr std::size_t kPatience = 100;
  constexpr double kImprovement = 1e-12;

  Vector best = x;
  double best_value = max_dot(poles, x);
  std::size_t stale = 0;
  for (std::size_t iter = 1; iter <= kMaxIterations && stale < kPatience; ++iter) {
    std::size_t active = 0;
    double value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poles.size(); ++i) {
      const double v = dot(poles[i].coords(), x);
      if (v > value) {
        value = v;
        active = i;
      }
    }
    const double step = 0.1 / std::sqrt(static_cast<double>(iter));
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= step * poles[active][k];
    const double n = norm2(x);
    if (n == 0.0) break;
    for (double& c : x) c /= n;

    const double next = max_dot(poles, x);
    if (next < best_value - kImprovement) {
      best_value = next;
      best = x;
      stale = 0;
    } else {
      ++stale;
    }
  }
  return best;
}

/// Exact starting point from linear algebra: with rank < d any kernel vector
/// is orthogonal to every pole; with d independent poles, x = -P^{-1} 1 has
/// all dots negative.
std::optional<Vector> linear_refutation(std::span<const UnitDirection> poles,
                                        std::size_t dim) {
  if (poles.size() > dim) return std::nullopt;
  Eigen::MatrixXd matrix(static_cast<Eigen::Index>(poles.size()),
                         static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < poles.size(); ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = poles[i][k];
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(matrix);
  Eigen::VectorXd x;
  if (static_cast<std::size_t>(lu.rank()) < dim) {
    x = lu.kernel().col(0);
  } else {
    x = lu.solve(-Eigen::VectorXd::Ones(static_cast<Eigen::Index>(poles.size())));
  }
  if (!x.allFinite() || x.norm() == 0.0) return std::nullopt;
  x.normalize();
  return Vector(x.data(), x.data() + x.size());
}

}  // namespace

double support(std::span<const Vector> points, std::span<const double> u) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : points) best = std::max(best, dot(v, u));
  return best;
}

std::vector<UnitDirection> structured_directions(std::size_t dim,
                                                 std::span<const Vector> points) {
  if (dim == 0) throw GeometryError("structured_directions: dim must be >= 1");
  std::vector<UnitDirection> out;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector e(dim, 0.0);
    e[i] = 1.0;
    out.emplace_back(e);
    e[i] = -1.0;
    out.emplace_back(e);
  }
  if (dim <= kMaxDiagonalDim) {
    const double c = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
      Vector v(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] = (mask >> i) & 1U ? -c : c;
      out.push_back(UnitDirection::normalize(v));
    }
  }
  for (const auto& p : points) {
    if (p.size() != dim) throw GeometryError("structured_directions: mixed dimensions");
    if (norm2(p) > 0.0) out.push_back(UnitDirection::normalize(p));
  }
  return out;
}

std::vector<UnitDirection> sample_directions(std::size_t dim, std::size_t samples,
                                             Rng& rng, std::span<const Vector> points) {
  auto out = structured_directions(dim, points);
  out.reserve(out.size() + samples);
  for (std::size_t i = 0; i < samples; ++i) out.push_back(sample_unit_direction(dim, rng));
  return out;
}

CoverReport vertex_set_sees_all(std::span<const Vector> points,
                                std::span<const UnitDirection> directions) {
  const std::size_t d = common_dim(points, "vertex_set_sees_all");
  require_directions(directions, d, "vertex_set_sees_all");
  const auto failure = parallel_find_first(directions.size(), [&](std::size_t i) {
    return std::none_of(points.begin(), points.end(),
                        [&](const Vector& v) { return sees(v, directions[i]); });
  });
  return report_first_failure(directions, failure);
}

CoverReport vertex_set_sees_all(std::span<const Vector> points, std::size_t samples,
                                Rng& rng) {
  const std::size_t d = common_dim(points, "vertex_set_sees_all");
  if (samples == 0) throw GeometryError("vertex_set_sees_all: samples must be >= 1");
  const auto directions = sample_directions(d, samples, rng, points);
  return vertex_set_sees_all(points, directions);
}

CoverReport hull_contains_sphere(std::span<const Vector> points,
                                 std::span<const UnitDirection> directions) {
  const std::size_t d = common_dim(points, "hull_contains_sphere");
  require_directions(directions, d, "hull_contains_sphere");
  const auto failure = parallel_find_first(directions.size(), [&](std::size_t i) {
    return support(points, directions[i].coords()) < 1.0 - kGeometryTolerance;
  });
  return report_first_failure(directions, failure);
}

CoverReport hull_contains_sphere(std::span<const Vector> points, std::size_t samples,
                                 Rng& rng) {
  const std::size_t d = common_dim(points, "hull_contains_sphere");
  if (samples == 0) throw GeometryError("hull_contains_sphere: samples must be >= 1");
  const auto directions = sample_directions(d, samples, rng, points);
  return hull_contains_sphere(points, directions);
}

bool lemma_aux_equivalence(std::span<const Vector> points, std::size_t samples,
                           Rng& rng) {
  const std::size_t d = common_dim(points, "lemma_aux_equivalence");
  if (samples == 0) throw GeometryError("lemma_aux_equivalence: samples must be >= 1");
  const auto directions = sample_directions(d, samples, rng, points);
  const auto by_visibility = vertex_set_sees_all(points, directions);
  const auto by_support = hull_contains_sphere(points, directions);
  if (by_visibility.covered != by_support.covered) return false;
  if (by_visibility.covered) return true;
  return by_visibility.witness->coords() == by_support.witness->coords();
}

std::vector<Hemisphere> simplex_cover(std::size_t dim) {
  if (dim == 0) throw GeometryError("simplex_cover: dim must be >= 1");
  // Orthonormal (Helmert) basis of the hyperplane orthogonal to (1, ..., 1)
  // in R^{d+1}: b_k = (1, ..., 1, -k, 0, ..., 0) / sqrt(k (k + 1)). Pole i is
  // the normalized projection of e_i, written in that basis.
  const std::size_t n = dim + 1;
  std::vector<Hemisphere> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector pole(dim, 0.0);
    for (std::size_t k = 1; k <= dim; ++k) {
      const double kd = static_cast<double>(k);
      const double norm = std::sqrt(kd * (kd + 1.0));
      double entry = 0.0;
      if (i < k) {
        entry = 1.0 / norm;
      } else if (i == k) {
        entry = -kd / norm;
      }
      pole[k - 1] = entry;
    }
    out.push_back(Hemisphere{UnitDirection::normalize(pole)});
  }
  return out;
}

std::optional<UnitDirection> refute_cover(std::span<const UnitDirection> poles,
                                          Rng& rng) {
  if (poles.empty()) {
    throw GeometryError("refute_cover: empty pole list, every point is uncovered");
  }
  const std::size_t d = poles.front().dim();
  for (const auto& p : poles) {
    if (p.dim() != d) throw GeometryError("refute_cover: mixed dimensions");
  }
  constexpr std::size_t kRestarts = 32;

  if (auto exact = linear_refutation(poles, d)) {
    Vector x = descend_max_dot(poles, std::move(*exact));
    if (max_dot(poles, x) <= kRefuteTolerance) {
      auto witness = UnitDirection::normalize(x);
      if (max_dot(poles, witness.coords()) <= kRefuteTolerance) return witness;
    }
  }

  std::vector<Vector> starts;
  Vector sum(d, 0.0);
  for (const auto& p : poles) {
    for (std::size_t k = 0; k < d; ++k) sum[k] -= p[k];
  }
  if (norm2(sum) > 1e-9) starts.push_back(UnitDirection::normalize(sum).coords());
  for (std::size_t r = 0; r < kRestarts; ++r) {
    starts.push_back(sample_unit_direction(d, rng).coords());
  }

  std::optional<Vector> best;
  double best_value = std::numeric_limits<double>::infinity();
  for (auto& start : starts) {
    Vector x = descend_max_dot(poles, std::move(start));
    const double value = max_dot(poles, x);
    if (value < best_value) {
      best_value = value;
      best = std::move(x);
    }
  }
  if (!best || best_value > kRefuteTolerance) return std::nullopt;
  auto witness = UnitDirection::normalize(*best);
  if (max_dot(poles, witness.coords()) > kRefuteTolerance) return std::nullopt;
  return witness;
}

std::vector<Vector> subdivided_vertices(const PolylineCurve& curve, unsigned depth) {
  if (depth > 20) throw GeometryError("subdivided_vertices: depth too large");
  const std::size_t pieces = std::size_t{1} << depth;
  std::vector<Vector> out;
  out.reserve(curve.segment_count() * pieces + 1);
  for (std::size_t s = 0; s < curve.segment_count(); ++s) {
    const auto& a = curve.segment_start(s);
    const auto& b = curve.segment_end(s);
    for (std::size_t j = 0; j < pieces; ++j) {
      out.push_back(lerp(a, b, static_cast<double>(j) / static_cast<double>(pieces)));
    }
  }
  if (!curve.closed()) out.push_back(curve.vertices().back());
  return out;
}

std::optional<UnitDirection> find_uncovered_witness(const PolylineCurve& curve,
                                                    std::size_t samples, Rng& rng,
                                                    const WitnessSearchOptions& options) {
  const auto points = subdivided_vertices(curve, options.subdivision_depth);
  const std::size_t d = curve.dim();
  const auto directions = sample_directions(d, samples, rng, points);

  // gap(u) = 1 - h(u) is positive exactly where u is unseen.
  const auto gaps = parallel_map<double>(directions.size(), [&](std::size_t i) {
    return 1.0 - support(points, directions[i].coords());
  });

  std::vector<std::size_t> order(directions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t restarts = std::min(options.restarts, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(restarts),
                    order.end(), [&](std::size_t a, std::size_t b) {
                      return gaps[a] != gaps[b] ? gaps[a] > gaps[b] : a < b;
                    });

  auto refined = parallel_map<std::pair<double, Vector>>(restarts, [&](std::size_t r) {
    Vector u = directions[order[r]].coords();
    double best_gap = gaps[order[r]];
    Vector best = u;
    for (std::size_t iter = 1; iter <= options.iterations; ++iter) {
      // The gradient of 1 - <u, v*> is -v* for the maximizing point v*.
      const Vector* top = &points.front();
      double top_value = -std::numeric_limits<double>::infinity();
      for (const auto& v : points) {
        const double value = dot(v, u);
        if (value > top_value) {
          top_value = value;
          top = &v;
        }
      }
      const double step = 0.1 / std::sqrt(static_cast<double>(iter));
      for (std::size_t k = 0; k < d; ++k) u[k] -= step * (*top)[k];
      const double n = norm2(u);
      if (n == 0.0) break;
      for (double& c : u) c /= n;
      const double gap = 1.0 - support(points, u);
      if (gap > best_gap) {
        best_gap = gap;
        best = u;
      }
    }
    return std::pair{best_gap, best};
  });

  std::optional<UnitDirection> witness;
  double witness_gap = kGeometryTolerance;
  for (auto& [gap, u] : refined) {
    if (gap <= witness_gap) continue;
    auto candidate = UnitDirection::normalize(u);
    const bool unseen = std::none_of(points.begin(), points.end(),
                                     [&](const Vector& v) { return sees(v, candidate); });
    if (unseen) {
      witness_gap = gap;
      witness = std::move(candidate);
    }
  }
  return witness;
}

}  // namespace sphere_search
