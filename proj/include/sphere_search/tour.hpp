#pragma once

// The scaled cross-polytope and a closed tour through its 2d vertices whose
// length is (2d)^{3/2} and whose vertex set inspects S^{d-1}.

#include <cstddef>
#include <optional>
#include <vector>

#include "sphere_search/geometry.hpp"

namespace sphere_search {

/// Vertices {+-scale * e_i : i = 1..dim}.
struct CrossPolytopeSpec {
  std::size_t dim = 2;
  double scale = 1.0;

  /// The sqrt(dim) scaling, the smallest one whose hull contains S^{d-1}.
  static CrossPolytopeSpec inspecting(std::size_t dim);
};

/// Signed 1-based axis label: +i is scale * e_i, -i is -scale * e_i.
using VertexLabel = int;

Vector vertex_for_label(VertexLabel label, const CrossPolytopeSpec& spec);

/// A Hamiltonian cycle of the cocktail-party graph on the labels
/// +-1..+-d: every label once, no cyclically adjacent pair {i, -i}.
class HamiltonianOrder {
 public:
  /// Throws GeometryError if the labels do not form such a cycle.
  HamiltonianOrder(std::size_t dim, std::vector<VertexLabel> labels);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }

  static bool is_valid(std::size_t dim, const std::vector<VertexLabel>& labels);

 private:
  std::size_t dim_;
  std::vector<VertexLabel> labels_;
};

/// All 2d vertices in label order +1..+d, -1..-d.
std::vector<Vector> cross_polytope_vertices(const CrossPolytopeSpec& spec);

/// The explicit cycle (+1, +2, ..., +d, -1, -2, ..., -d).
HamiltonianOrder hamiltonian_cycle(std::size_t dim);

/// Grows the square's cycle one dimension at a time: +k is spliced into the
/// first edge of the previous cycle and -k into its closing edge.
HamiltonianOrder inductive_hamiltonian_cycle(std::size_t dim);

/// Closed polyline through the scaled cross-polytope vertices in
/// hamiltonian_cycle order, starting at +scale * e_1. Scale defaults to
/// sqrt(dim).
PolylineCurve build_inspection_tour(std::size_t dim,
                                    std::optional<double> scale = std::nullopt);

/// Same, with an explicit vertex order.
PolylineCurve build_tour(const HamiltonianOrder& order, double scale);

/// (2d)^{3/2}
double inspection_tour_length(std::size_t dim);

}  // namespace sphere_search
