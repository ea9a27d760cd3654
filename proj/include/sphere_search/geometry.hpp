#pragma once

// Vector, hyperplane and polyline primitives plus the visibility predicate
// against the closed unit ball.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphere_search {

/// A point or vector in R^d.
using Vector = std::vector<double>;

/// Deterministic engine used for every sampling routine in the library.
using Rng = std::mt19937_64;

/// Tolerance on | ||u|| - 1 | for values claimed to be unit directions.
inline constexpr double kNormTolerance = 1e-12;

/// Tolerance for on-sphere, on-hyperplane and tangency decisions.
inline constexpr double kGeometryTolerance = 1e-9;

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double dot(std::span<const double> a, std::span<const double> b);

/// Euclidean norm. Throws GeometryError on non-finite input.
double norm2(std::span<const double> v);

double distance(std::span<const double> a, std::span<const double> b);
Vector scaled(std::span<const double> v, double factor);

/// (1 - t) a + t b
Vector lerp(std::span<const double> a, std::span<const double> b, double t);

bool all_finite(std::span<const double> v);
void require_finite(std::span<const double> v, const char* what);
void require_same_dim(std::span<const double> a, std::span<const double> b);

/// A vector on S^{d-1}, validated to kNormTolerance at construction.
class UnitDirection {
 public:
  explicit UnitDirection(Vector coords);

  /// Rescales a nonzero finite vector onto the sphere.
  static UnitDirection normalize(std::span<const double> v);

  const Vector& coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  operator std::span<const double>() const noexcept { return coords_; }

  UnitDirection operator-() const;

 private:
  Vector coords_;
};

/// The hyperplane {x : <normal, x> = offset} in canonical form: offset >= 0,
/// and for offset == 0 the first nonzero normal coordinate is positive.
class Hyperplane {
 public:
  /// A negative offset is folded into the normal.
  Hyperplane(UnitDirection normal, double offset);

  const UnitDirection& normal() const noexcept { return normal_; }
  double offset() const noexcept { return offset_; }
  std::size_t dim() const noexcept { return normal_.dim(); }

  double signed_distance(std::span<const double> x) const;
  bool contains(std::span<const double> x,
                double tolerance = kGeometryTolerance) const;

 private:
  UnitDirection normal_;
  double offset_;
};

struct Segment {
  Vector a;
  Vector b;

  double length() const { return distance(a, b); }
};

/// Ordered vertices joined by straight segments; a closed curve also has the
/// wrap segment from the last vertex back to the first.
class PolylineCurve {
 public:
  PolylineCurve(std::vector<Vector> vertices, bool closed);

  const std::vector<Vector>& vertices() const noexcept { return vertices_; }
  bool closed() const noexcept { return closed_; }
  std::size_t dim() const noexcept { return vertices_.front().size(); }

  std::size_t segment_count() const noexcept;
  Segment segment(std::size_t i) const;
  const Vector& segment_start(std::size_t i) const;
  const Vector& segment_end(std::size_t i) const;

  double length() const noexcept { return length_; }

  /// Point at the given arc length, clamped to [0, length()].
  Vector point_at(double arc_length) const;

  /// Open curve covering arc lengths [0, arc_length].
  PolylineCurve prefix(double arc_length) const;

  PolylineCurve scaled(double factor) const;

 private:
  std::vector<Vector> vertices_;
  bool closed_;
  double length_ = 0.0;
};

/// True iff the closed segment from p to q meets the closed unit ball only
/// at q. Grazing contact with the sphere counts as seeing.
bool sees(std::span<const double> p, const UnitDirection& q);

struct CurveHit {
  double arc_length;
  Vector point;
};

/// Parameter t in [0, 1] of the first point of segment ab on H, if any.
std::optional<double> segment_hit(std::span<const double> a,
                                  std::span<const double> b,
                                  const Hyperplane& hyperplane);

/// Smallest arc length at which the curve touches H.
std::optional<CurveHit> first_hit(const PolylineCurve& curve,
                                  const Hyperplane& hyperplane);

/// Uniform direction on S^{d-1} from normalized independent Gaussians.
UnitDirection sample_unit_direction(std::size_t dim, Rng& rng);

}  // namespace sphere_search
