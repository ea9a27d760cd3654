#include "sphere_search/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace sphere_search {

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double norm2(std::span<const double> v) {
  require_finite(v, "norm2");
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

double distance(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

Vector scaled(std::span<const double> v, double factor) {
  Vector out(v.begin(), v.end());
  for (double& x : out) x *= factor;
  return out;
}

Vector lerp(std::span<const double> a, std::span<const double> b, double t) {
  require_same_dim(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = (1.0 - t) * a[i] + t * b[i];
  }
  return out;
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

void require_finite(std::span<const double> v, const char* what) {
  if (!all_finite(v)) {
    throw GeometryError(std::string(what) + ": non-finite coordinate");
  }
}

void require_same_dim(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw GeometryError("dimension mismatch: " + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()));
  }
}

// -- UnitDirection ----------------------------------------------------------

UnitDirection::UnitDirection(Vector coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw GeometryError("unit direction: empty vector");
  const double n = norm2(coords_);
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw GeometryError("unit direction: norm " + std::to_string(n) +
                        " is not 1");
  }
}

UnitDirection UnitDirection::normalize(std::span<const double> v) {
  const double n = norm2(v);
  if (n == 0.0) throw GeometryError("cannot normalize the zero vector");
  Vector out = scaled(v, 1.0 / n);
  // One more pass pulls the norm to within an ulp or two of 1.
  const double again = norm2(out);
  for (double& x : out) x /= again;
  return UnitDirection(std::move(out));
}

UnitDirection UnitDirection::operator-() const {
  return UnitDirection(scaled(coords_, -1.0));
}

// -- Hyperplane -------------------------------------------------------------

namespace {

UnitDirection canonical_normal(const UnitDirection& normal, double offset) {
  if (offset < 0.0) return -normal;
  if (offset == 0.0) {
    for (double x : normal.coords()) {
      if (x > 0.0) break;
      if (x < 0.0) return -normal;
    }
  }
  return normal;
}

}  // namespace

Hyperplane::Hyperplane(UnitDirection normal, double offset)
    : normal_(canonical_normal(normal, offset)), offset_(std::abs(offset)) {
  if (!std::isfinite(offset)) {
    throw GeometryError("hyperplane: non-finite offset");
  }
}

double Hyperplane::signed_distance(std::span<const double> x) const {
  return dot(normal_.coords(), x) - offset_;
}

bool Hyperplane::contains(std::span<const double> x, double tolerance) const {
  return std::abs(signed_distance(x)) <= tolerance;
}

// -- PolylineCurve ----------------------------------------------------------

PolylineCurve::PolylineCurve(std::vector<Vector> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  const std::size_t needed = closed_ ? 3 : 2;
  if (vertices_.size() < needed) {
    throw GeometryError("polyline: " + std::string(closed_ ? "closed" : "open") +
                        " curve needs at least " + std::to_string(needed) +
                        " vertices");
  }
  const std::size_t d = vertices_.front().size();
  if (d == 0) throw GeometryError("polyline: zero-dimensional vertices");
  for (const auto& v : vertices_) {
    if (v.size() != d) throw GeometryError("polyline: mixed dimensions");
    require_finite(v, "polyline vertex");
  }
  for (std::size_t i = 0; i < segment_count(); ++i) {
    length_ += distance(segment_start(i), segment_end(i));
  }
  if (!std::isfinite(length_)) throw GeometryError("polyline: infinite length");
}

std::size_t PolylineCurve::segment_count() const noexcept {
  return closed_ ? vertices_.size() : vertices_.size() - 1;
}

const Vector& PolylineCurve::segment_start(std::size_t i) const {
  return vertices_.at(i);
}

const Vector& PolylineCurve::segment_end(std::size_t i) const {
  return vertices_.at((i + 1) % vertices_.size());
}

Segment PolylineCurve::segment(std::size_t i) const {
  return Segment{segment_start(i), segment_end(i)};
}

Vector PolylineCurve::point_at(double arc_length) const {
  double walked = 0.0;
  for (std::size_t i = 0; i < segment_count(); ++i) {
    const auto& a = segment_start(i);
    const auto& b = segment_end(i);
    const double len = distance(a, b);
    if (walked + len >= arc_length) {
      const double t = len > 0.0 ? std::clamp((arc_length - walked) / len, 0.0, 1.0) : 0.0;
      return lerp(a, b, t);
    }
    walked += len;
  }
  return segment_end(segment_count() - 1);
}

PolylineCurve PolylineCurve::prefix(double arc_length) const {
  std::vector<Vector> out{vertices_.front()};
  double walked = 0.0;
  for (std::size_t i = 0; i < segment_count(); ++i) {
    const auto& a = segment_start(i);
    const auto& b = segment_end(i);
    const double len = distance(a, b);
    if (walked + len >= arc_length) {
      const double t = len > 0.0 ? std::clamp((arc_length - walked) / len, 0.0, 1.0) : 0.0;
      out.push_back(t == 1.0 ? b : lerp(a, b, t));
      return PolylineCurve(std::move(out), false);
    }
    walked += len;
    out.push_back(b);
  }
  return PolylineCurve(std::move(out), false);
}

PolylineCurve PolylineCurve::scaled(double factor) const {
  std::vector<Vector> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(sphere_search::scaled(v, factor));
  return PolylineCurve(std::move(out), closed_);
}

// -- visibility ---------------------------------------------------------------

bool sees(std::span<const double> p, const UnitDirection& q) {
  require_finite(p, "sees");
  require_same_dim(p, q.coords());
  // On x(t) = p + t (q - p), ||x(t)||^2 - 1 = a t^2 + b t + c with
  //   a = ||q - p||^2,  b = 2 <p, q - p>,  c = ||p||^2 - 1.
  // t = 1 is a root because q is on the sphere, so the quadratic factors as
  //   (t - 1) (a t + a + b),
  // and it is nonnegative on [0, 1) iff the linear factor is <= 0 there,
  // i.e. iff 2a + b = 2 <q - p, q> <= 0. A near-zero value is tangency.
  double linear_at_one = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    linear_at_one += (q[i] - p[i]) * q[i];
  }
  return linear_at_one <= kGeometryTolerance;
}

std::optional<double> segment_hit(std::span<const double> a,
                                  std::span<const double> b,
                                  const Hyperplane& hyperplane) {
  const double sa = hyperplane.signed_distance(a);
  if (std::abs(sa) <= kGeometryTolerance) return 0.0;
  const double sb = hyperplane.signed_distance(b);
  const bool crosses = (sa < 0.0) != (sb < 0.0);
  if (!crosses && std::abs(sb) > kGeometryTolerance) return std::nullopt;
  if (sa == sb) return std::nullopt;
  return std::clamp(sa / (sa - sb), 0.0, 1.0);
}

std::optional<CurveHit> first_hit(const PolylineCurve& curve,
                                  const Hyperplane& hyperplane) {
  if (curve.dim() != hyperplane.dim()) {
    throw GeometryError("first_hit: curve and hyperplane dimensions differ");
  }
  double walked = 0.0;
  for (std::size_t i = 0; i < curve.segment_count(); ++i) {
    const auto& a = curve.segment_start(i);
    const auto& b = curve.segment_end(i);
    const double len = distance(a, b);
    if (auto t = segment_hit(a, b, hyperplane)) {
      return CurveHit{walked + *t * len, lerp(a, b, *t)};
    }
    walked += len;
  }
  return std::nullopt;
}

UnitDirection sample_unit_direction(std::size_t dim, Rng& rng) {
  if (dim == 0) throw GeometryError("sample_unit_direction: dim must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (;;) {
    double sq = 0.0;
    for (double& x : v) {
      x = gauss(rng);
      sq += x * x;
    }
    if (sq > 0.0) break;
  }
  return UnitDirection::normalize(v);
}

}  // namespace sphere_search
