#include "sphere_search/tour.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace sphere_search {

namespace {

void require_tour_dim(std::size_t dim, const char* what) {
  if (dim < 2) {
    throw GeometryError(std::string(what) + ": dimension must be >= 2, got " +
                        std::to_string(dim));
  }
}

}  // namespace

CrossPolytopeSpec CrossPolytopeSpec::inspecting(std::size_t dim) {
  return CrossPolytopeSpec{dim, std::sqrt(static_cast<double>(dim))};
}

Vector vertex_for_label(VertexLabel label, const CrossPolytopeSpec& spec) {
  const auto axis = static_cast<std::size_t>(std::abs(label));
  if (label == 0 || axis > spec.dim) {
    throw GeometryError("vertex label " + std::to_string(label) +
                        " out of range for dimension " + std::to_string(spec.dim));
  }
  Vector v(spec.dim, 0.0);
  v[axis - 1] = label > 0 ? spec.scale : -spec.scale;
  return v;
}

HamiltonianOrder::HamiltonianOrder(std::size_t dim, std::vector<VertexLabel> labels)
    : dim_(dim), labels_(std::move(labels)) {
  if (!is_valid(dim_, labels_)) {
    throw GeometryError("not a Hamiltonian cycle of the cocktail-party graph");
  }
}

bool HamiltonianOrder::is_valid(std::size_t dim,
                                const std::vector<VertexLabel>& labels) {
  if (dim < 2 || labels.size() != 2 * dim) return false;
  std::vector<bool> seen(2 * dim, false);
  for (VertexLabel label : labels) {
    const auto axis = static_cast<std::size_t>(std::abs(label));
    if (label == 0 || axis > dim) return false;
    const std::size_t slot = label > 0 ? axis - 1 : dim + axis - 1;
    if (seen[slot]) return false;
    seen[slot] = true;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == -labels[(i + 1) % labels.size()]) return false;
  }
  return true;
}

std::vector<Vector> cross_polytope_vertices(const CrossPolytopeSpec& spec) {
  require_tour_dim(spec.dim, "cross_polytope_vertices");
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) {
    throw GeometryError("cross_polytope_vertices: scale must be positive");
  }
  std::vector<Vector> out;
  out.reserve(2 * spec.dim);
  const int d = static_cast<int>(spec.dim);
  for (int i = 1; i <= d; ++i) out.push_back(vertex_for_label(i, spec));
  for (int i = 1; i <= d; ++i) out.push_back(vertex_for_label(-i, spec));
  return out;
}

HamiltonianOrder hamiltonian_cycle(std::size_t dim) {
  require_tour_dim(dim, "hamiltonian_cycle");
  std::vector<VertexLabel> labels;
  labels.reserve(2 * dim);
  const int d = static_cast<int>(dim);
  for (int i = 1; i <= d; ++i) labels.push_back(i);
  for (int i = 1; i <= d; ++i) labels.push_back(-i);
  return HamiltonianOrder(dim, std::move(labels));
}

HamiltonianOrder inductive_hamiltonian_cycle(std::size_t dim) {
  require_tour_dim(dim, "inductive_hamiltonian_cycle");
  std::vector<VertexLabel> labels{1, 2, -1, -2};
  for (int k = 3; k <= static_cast<int>(dim); ++k) {
    // Edge {labels[0], labels[1]} becomes labels[0], +k, labels[1]; the
    // closing edge {labels.back(), labels[0]} becomes labels.back(), -k.
    labels.insert(labels.begin() + 1, k);
    labels.push_back(-k);
  }
  return HamiltonianOrder(dim, std::move(labels));
}

PolylineCurve build_tour(const HamiltonianOrder& order, double scale) {
  const CrossPolytopeSpec spec{order.dim(), scale};
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw GeometryError("build_tour: scale must be positive");
  }
  std::vector<Vector> vertices;
  vertices.reserve(order.labels().size());
  for (VertexLabel label : order.labels()) {
    vertices.push_back(vertex_for_label(label, spec));
  }
  return PolylineCurve(std::move(vertices), true);
}

PolylineCurve build_inspection_tour(std::size_t dim, std::optional<double> scale) {
  require_tour_dim(dim, "build_inspection_tour");
  return build_tour(hamiltonian_cycle(dim),
                    scale.value_or(std::sqrt(static_cast<double>(dim))));
}

double inspection_tour_length(std::size_t dim) {
  return std::pow(2.0 * static_cast<double>(dim), 1.5);
}

}  // namespace sphere_search
