#include <gtest/gtest.h>

#include <cmath>

#include "sphere_search/tour.hpp"
#include "sphere_search/verification.hpp"

using namespace sphere_search;

TEST(CrossPolytope, SquareVertices) {
  const double r = std::sqrt(2.0);
  const auto v = cross_polytope_vertices(CrossPolytopeSpec::inspecting(2));
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0], (Vector{r, 0.0}));
  EXPECT_EQ(v[1], (Vector{0.0, r}));
  EXPECT_EQ(v[2], (Vector{-r, 0.0}));
  EXPECT_EQ(v[3], (Vector{0.0, -r}));
}

TEST(CrossPolytope, NormsAndUnscaled) {
  for (const auto& v : cross_polytope_vertices(CrossPolytopeSpec::inspecting(3))) {
    EXPECT_NEAR(norm2(v), std::sqrt(3.0), 1e-15);
  }
  const auto unit = cross_polytope_vertices(CrossPolytopeSpec{2, 1.0});
  EXPECT_EQ(unit[0], (Vector{1.0, 0.0}));
  EXPECT_EQ(unit[3], (Vector{0.0, -1.0}));
}

TEST(CrossPolytope, RejectsLowDimension) {
  EXPECT_THROW(cross_polytope_vertices(CrossPolytopeSpec{1, 1.0}), GeometryError);
  EXPECT_THROW(cross_polytope_vertices(CrossPolytopeSpec{3, 0.0}), GeometryError);
}

TEST(HamiltonianCycle, ExplicitOrders) {
  EXPECT_EQ(hamiltonian_cycle(2).labels(), (std::vector<VertexLabel>{1, 2, -1, -2}));
  EXPECT_EQ(hamiltonian_cycle(3).labels(), (std::vector<VertexLabel>{1, 2, 3, -1, -2, -3}));
  EXPECT_THROW(hamiltonian_cycle(1), GeometryError);
}

TEST(HamiltonianCycle, InvariantRejectsBadOrders) {
  EXPECT_FALSE(HamiltonianOrder::is_valid(2, {1, -1, 2, -2}));   // antipodal neighbours
  EXPECT_FALSE(HamiltonianOrder::is_valid(2, {1, 2, -2, -1}));   // -1 wraps onto +1
  EXPECT_FALSE(HamiltonianOrder::is_valid(2, {1, 2, 2, -1}));    // repeat
  EXPECT_FALSE(HamiltonianOrder::is_valid(3, {1, 2, -1, -2}));   // too short
  EXPECT_THROW(HamiltonianOrder(2, {1, -1, 2, -2}), GeometryError);
}

TEST(HamiltonianCycle, BothGeneratorsValidForManyDims) {
  for (std::size_t d = 2; d <= 64; ++d) {
    EXPECT_TRUE(HamiltonianOrder::is_valid(d, hamiltonian_cycle(d).labels())) << d;
    const auto inductive = inductive_hamiltonian_cycle(d);
    EXPECT_TRUE(HamiltonianOrder::is_valid(d, inductive.labels())) << d;
    // Both tours have the same length: every cocktail-party edge is sqrt(2d).
    const double scale = std::sqrt(static_cast<double>(d));
    EXPECT_NEAR(build_tour(inductive, scale).length(), inspection_tour_length(d),
                1e-12 * inspection_tour_length(d));
  }
}

TEST(InspectionTour, Lengths) {
  EXPECT_NEAR(build_inspection_tour(2).length(), 8.0, 1e-12);
  EXPECT_NEAR(build_inspection_tour(3).length(), 6.0 * std::sqrt(6.0), 1e-12);
  const auto t2 = build_inspection_tour(2);
  EXPECT_NEAR(distance(t2.vertices()[0], t2.vertices()[1]), 2.0, 1e-15);
  EXPECT_TRUE(t2.closed());
  EXPECT_EQ(t2.vertices().front(), (Vector{std::sqrt(2.0), 0.0}));
}

TEST(InspectionTour, EveryEdgeHasLengthSqrt2d) {
  for (std::size_t d = 2; d <= 20; ++d) {
    const auto tour = build_inspection_tour(d);
    for (std::size_t i = 0; i < tour.segment_count(); ++i) {
      const auto s = tour.segment(i);
      EXPECT_NEAR(s.length(), std::sqrt(2.0 * static_cast<double>(d)), 1e-13);
    }
  }
}

TEST(InspectionTour, RelativeLengthErrorUpTo50) {
  for (std::size_t d = 2; d <= 50; ++d) {
    const double expected = std::pow(2.0 * static_cast<double>(d), 1.5);
    EXPECT_LE(std::abs(build_inspection_tour(d).length() - expected) / expected, 1e-12) << d;
  }
}

TEST(InspectionTour, SupportIsSqrtDTimesInfNorm) {
  Rng rng(31);
  for (std::size_t d = 2; d <= 8; ++d) {
    const auto vertices = build_inspection_tour(d).vertices();
    for (int i = 0; i < 20000; ++i) {
      const auto u = sample_unit_direction(d, rng);
      double inf_norm = 0.0;
      for (double x : u.coords()) inf_norm = std::max(inf_norm, std::abs(x));
      const double h = support(vertices, u.coords());
      ASSERT_NEAR(h, std::sqrt(static_cast<double>(d)) * inf_norm, 1e-12);
      ASSERT_GE(h, 1.0 - 1e-12);
    }
  }
}

TEST(InspectionTour, ShrunkTourMissesTheDiagonal) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const double shrink = 1.0 - 1e-3;
    const auto tour = build_inspection_tour(d, shrink * std::sqrt(static_cast<double>(d)));
    const auto diagonal = UnitDirection::normalize(Vector(d, 1.0));
    EXPECT_NEAR(support(tour.vertices(), diagonal.coords()), shrink, 1e-12);
    for (const auto& v : tour.vertices()) EXPECT_FALSE(sees(v, diagonal));
  }
}

TEST(InspectionTour, RejectsLowDimension) {
  EXPECT_THROW(build_inspection_tour(1), GeometryError);
  EXPECT_THROW(build_inspection_tour(0), GeometryError);
}
