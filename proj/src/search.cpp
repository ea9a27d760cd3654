#include "sphere_search/search.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "sphere_search/parallel.hpp"

namespace sphere_search {

namespace {

PolylineCurve require_closed(PolylineCurve base) {
  if (!base.closed()) throw GeometryError("doubling strategy: base curve must be closed");
  return base;
}

}  // namespace

DoublingStrategy::DoublingStrategy(PolylineCurve base, int max_phases)
    : base_(require_closed(std::move(base))), max_phases_(max_phases) {
  if (max_phases_ < 1) throw GeometryError("doubling strategy: max_phases must be >= 1");
  // An inspecting closed curve crosses the hyperplane through 0 orthogonal
  // to its anchor, so the anchor is within one curve length of the origin.
  if (norm2(anchor()) > base_.length()) {
    throw GeometryError("doubling strategy: anchor farther from origin than curve length");
  }
}

PolylineCurve DoublingStrategy::phase_path(int phase) const {
  if (phase < 0) throw GeometryError("phase_path: negative phase");
  const double factor = std::ldexp(1.0, phase);
  const Vector origin(base_.dim(), 0.0);
  std::vector<Vector> vertices;
  vertices.reserve(base_.vertices().size() + 3);
  vertices.push_back(origin);
  for (const auto& v : base_.vertices()) vertices.push_back(scaled(v, factor));
  vertices.push_back(scaled(anchor(), factor));
  vertices.push_back(origin);
  return PolylineCurve(std::move(vertices), false);
}

double DoublingStrategy::phase_length(int phase) const {
  return phase_path(phase).length();
}

PolylineCurve DoublingStrategy::path(int phases) const {
  if (phases < 1) throw GeometryError("strategy path: need at least one phase");
  std::vector<Vector> vertices;
  for (int i = 0; i < phases; ++i) {
    const auto phase = phase_path(i);
    const auto& pv = phase.vertices();
    // Each phase starts where the previous one ended, at the origin.
    vertices.insert(vertices.end(), pv.begin() + (i == 0 ? 0 : 1), pv.end());
  }
  return PolylineCurve(std::move(vertices), false);
}

DoublingStrategy build_doubling_strategy(PolylineCurve base, int max_phases) {
  return DoublingStrategy(std::move(base), max_phases);
}

SearchTranscript simulate_search(const DoublingStrategy& strategy,
                                 const Hyperplane& target) {
  if (target.dim() != strategy.base_curve().dim()) {
    throw GeometryError("simulate_search: hyperplane dimension mismatch");
  }
  if (target.offset() == 0.0) {
    return SearchTranscript{target, 0.0, Vector(target.dim(), 0.0), 0, 0.0};
  }
  double walked = 0.0;
  for (int phase = 0; phase < strategy.max_phases(); ++phase) {
    const auto path = strategy.phase_path(phase);
    if (auto hit = first_hit(path, target)) {
      const double traversed = walked + hit->arc_length;
      return SearchTranscript{target, traversed, std::move(hit->point), phase,
                              traversed / target.offset()};
    }
    walked += path.length();
  }
  throw SearchError("simulate_search: no hit within " +
                    std::to_string(strategy.max_phases()) +
                    " phases; the base curve does not inspect the sphere");
}

bool within_envelope(const SearchTranscript& transcript, double base_length) {
  return transcript.traversed_length <=
         12.0 * base_length * transcript.target.offset() + 3.0 * base_length;
}

bool check_envelope(std::span<const SearchTranscript> transcripts, double base_length) {
  return std::all_of(transcripts.begin(), transcripts.end(),
                     [&](const SearchTranscript& t) { return within_envelope(t, base_length); });
}

ExtractedCurve extract_inspection_curve(const PolylineCurve& path,
                                        double competitive_ratio, double additive,
                                        double epsilon,
                                        std::span<const UnitDirection> directions) {
  if (!(competitive_ratio > 0.0) || !(additive > 0.0) || !(epsilon > 0.0)) {
    throw GeometryError("extract_inspection_curve: c, alpha and epsilon must be positive");
  }
  if (directions.empty()) {
    throw GeometryError("extract_inspection_curve: need at least one direction");
  }
  if (norm2(path.vertices().front()) > kGeometryTolerance) {
    throw GeometryError("extract_inspection_curve: path must start at the origin");
  }
  const double radius = additive / epsilon;
  const auto hits = parallel_map<std::optional<double>>(directions.size(), [&](std::size_t i) {
    const auto hit = first_hit(path, Hyperplane(directions[i], radius));
    return hit ? std::optional<double>(hit->arc_length) : std::nullopt;
  });
  double cut = 0.0;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (!hits[i]) {
      throw SearchError("extract_inspection_curve: path never meets the hyperplane at "
                        "radius " + std::to_string(radius) + " for direction " +
                        std::to_string(i));
    }
    cut = std::max(cut, *hits[i]);
  }
  auto curve = path.prefix(cut).scaled(epsilon / additive);
  const double bound = competitive_ratio + epsilon;
  const bool ok = curve.length() <= bound * (1.0 + 1e-12);
  return ExtractedCurve{std::move(curve), cut, ok};
}

}  // namespace sphere_search
