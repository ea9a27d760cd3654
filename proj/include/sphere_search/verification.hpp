#pragma once

// Sampling checks for sphere inspection: visibility from a vertex set, hull
// containment via the support function, hemisphere covers, and witness
// search for curves that fail to inspect.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sphere_search/geometry.hpp"

namespace sphere_search {

/// The open hemisphere {x in S^{d-1} : <pole, x> > 0}.
struct Hemisphere {
  UnitDirection pole;

  bool contains(std::span<const double> x) const { return dot(pole.coords(), x) > 0.0; }
};

struct CoverReport {
  bool covered = false;
  /// First failing direction, present iff !covered.
  std::optional<UnitDirection> witness;
  std::size_t samples_used = 0;
};

/// h(u) = max over points v of <u, v>.
double support(std::span<const Vector> points, std::span<const double> u);

/// Directions where support minima of axis-aligned polytopes sit: +-e_i, the
/// diagonals (+-1, ..., +-1)/sqrt(d) when d <= 12, and the direction of every
/// nonzero point.
std::vector<UnitDirection> structured_directions(std::size_t dim,
                                                 std::span<const Vector> points = {});

/// structured_directions followed by `samples` uniform draws.
std::vector<UnitDirection> sample_directions(std::size_t dim, std::size_t samples,
                                             Rng& rng,
                                             std::span<const Vector> points = {});

/// covered iff every direction u is seen by some point of V.
CoverReport vertex_set_sees_all(std::span<const Vector> points,
                                std::span<const UnitDirection> directions);
CoverReport vertex_set_sees_all(std::span<const Vector> points, std::size_t samples,
                                Rng& rng);

/// covered iff support(V, u) >= 1 - kGeometryTolerance for every direction u,
/// which on all of S^{d-1} is equivalent to S^{d-1} lying in conv(V).
CoverReport hull_contains_sphere(std::span<const Vector> points,
                                 std::span<const UnitDirection> directions);
CoverReport hull_contains_sphere(std::span<const Vector> points, std::size_t samples,
                                 Rng& rng);

/// Runs both checks above on one shared direction set and reports whether
/// their verdicts and witnesses agree.
bool lemma_aux_equivalence(std::span<const Vector> points, std::size_t samples,
                           Rng& rng);

/// d + 1 hemispheres whose poles are the vertex directions of a regular
/// simplex centred at the origin. They cover S^{d-1}.
std::vector<Hemisphere> simplex_cover(std::size_t dim);

/// Tolerance on max_i <pole_i, x> for a refutation witness.
inline constexpr double kRefuteTolerance = 1e-7;

/// Looks for x on S^{d-1} lying in none of the open hemispheres, i.e. with
/// max_i <pole_i, x> <= kRefuteTolerance. One always exists for at most d
/// poles; with more poles the result may be empty.
std::optional<UnitDirection> refute_cover(std::span<const UnitDirection> poles,
                                          Rng& rng);

struct WitnessSearchOptions {
  unsigned subdivision_depth = 6;
  std::size_t restarts = 32;
  std::size_t iterations = 200;
};

/// Curve vertices with every segment split into 2^depth equal pieces.
std::vector<Vector> subdivided_vertices(const PolylineCurve& curve, unsigned depth);

/// A sphere point seen by no point of the (subdivided) curve, if one is found.
std::optional<UnitDirection> find_uncovered_witness(const PolylineCurve& curve,
                                                    std::size_t samples, Rng& rng,
                                                    const WitnessSearchOptions& options = {});

}  // namespace sphere_search
