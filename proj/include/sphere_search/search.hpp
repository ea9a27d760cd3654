#pragma once

// Reduction between sphere inspection and competitive hyperplane search.
//
// From a closed inspecting curve of length L anchored at its first vertex g,
// phase i of the doubling strategy walks 0 -> 2^i g, around 2^i * curve, and
// back 2^i g -> 0. Every hyperplane at distance <= 2^i is met during phase
// i, and phase i has length <= 3 * 2^i * L, which gives traversed length
// <= 12 L * rho + 3 L for a hyperplane at distance rho.
//
// Conversely a prefix of a competitive search path, scaled down by the
// target radius, yields a curve that inspects the sphere.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sphere_search/geometry.hpp"

namespace sphere_search {

class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxPhases = 64;

class DoublingStrategy {
 public:
  /// Throws GeometryError for an open base curve or an anchor farther from
  /// the origin than the curve is long.
  explicit DoublingStrategy(PolylineCurve base, int max_phases = kDefaultMaxPhases);

  const PolylineCurve& base_curve() const noexcept { return base_; }
  const Vector& anchor() const noexcept { return base_.vertices().front(); }
  double base_length() const noexcept { return base_.length(); }
  int max_phases() const noexcept { return max_phases_; }

  /// 0, 2^i v_0, 2^i v_1, ..., 2^i v_{m-1}, 2^i v_0, 0 as an open polyline.
  PolylineCurve phase_path(int phase) const;
  double phase_length(int phase) const;

  /// Phases 0..phases-1 concatenated, starting at the origin.
  PolylineCurve path(int phases) const;

 private:
  PolylineCurve base_;
  int max_phases_;
};

DoublingStrategy build_doubling_strategy(PolylineCurve base,
                                         int max_phases = kDefaultMaxPhases);

struct SearchTranscript {
  Hyperplane target;
  double traversed_length = 0.0;
  Vector hit_point;
  int phase = 0;
  /// traversed_length / rho, or 0 when rho == 0.
  double ratio = 0.0;
};

/// Walks the strategy phase by phase until it first touches the target.
/// Throws SearchError if max_phases pass without a hit.
SearchTranscript simulate_search(const DoublingStrategy& strategy,
                                 const Hyperplane& target);

/// traversed_length <= 12 L rho + 3 L
bool within_envelope(const SearchTranscript& transcript, double base_length);
bool check_envelope(std::span<const SearchTranscript> transcripts, double base_length);

struct ExtractedCurve {
  PolylineCurve curve;
  /// Arc length of the unscaled prefix (the approximated t*).
  double prefix_length = 0.0;
  /// curve.length() <= competitive_ratio + epsilon.
  bool within_bound = false;
};

/// Cuts `path` at the largest first-hit arc length over the hyperplanes
/// <u, x> = additive / epsilon for u in `directions`, then scales the prefix
/// by epsilon / additive. Throws SearchError if some hyperplane is never hit.
ExtractedCurve extract_inspection_curve(const PolylineCurve& path,
                                        double competitive_ratio, double additive,
                                        double epsilon,
                                        std::span<const UnitDirection> directions);

}  // namespace sphere_search
