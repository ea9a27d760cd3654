// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "sphere_search/cli.hpp"
#include "sphere_search/search.hpp"
#include "sphere_search/tour.hpp"
#include "sphere_search/verification.hpp"

using namespace sphere_search;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> check;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

// 1. Tour length within 1e-12 relative of (2d)^{3/2} for d = 2..50.
Outcome tour_length() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t d = 2; d <= 50; ++d) {
    const double expected = std::pow(2.0 * double(d), 1.5);
    const double rel = std::abs(build_inspection_tour(d).length() - expected) / expected;
    worst = std::max(worst, rel);
    if (rel > 1e-12) fail(o, "d=" + std::to_string(d) + " relative error " + std::to_string(rel));
  }
  if (o.pass) {
    std::ostringstream s;
    s << "max relative error " << worst;
    o.detail = s.str();
  }
  return o;
}

// 2. Every one of 1e5 uniform samples is seen by a tour vertex, d = 2..8.
Outcome inspection() {
  Outcome o;
  for (std::size_t d = 2; d <= 8; ++d) {
    Rng rng(200 + d);
    const auto tour = build_inspection_tour(d);
    const auto report = vertex_set_sees_all(tour.vertices(), 100000, rng);
    if (!report.covered) fail(o, "d=" + std::to_string(d) + " has an unseen sample");
  }
  if (o.pass) o.detail = "0 failures over 1e5 samples for each d in 2..8";
  return o;
}

// 3. Visibility and hull-containment verdicts agree on shared sample sets.
Outcome lemma_equivalence() {
  Outcome o;
  std::size_t trials = 0;
  std::size_t covered = 0;
  for (std::size_t d = 2; d <= 4; ++d) {
    Rng rng(300 + d);
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    for (int t = 0; t < 1000; ++t) {
      std::vector<Vector> points;
      for (std::size_t i = 0; i < 3 * d; ++i) {
        Vector v = sample_unit_direction(d, rng).coords();
        const double r = radius(rng);
        for (double& x : v) x *= r;
        points.push_back(std::move(v));
      }
      Rng samples(rng());
      const auto directions = sample_directions(d, 1000, samples, points);
      const auto a = vertex_set_sees_all(points, directions);
      const auto b = hull_contains_sphere(points, directions);
      ++trials;
      covered += a.covered ? 1 : 0;
      if (a.covered != b.covered) fail(o, "random set disagreement at d=" + std::to_string(d));
    }
    const double root = std::sqrt(double(d));
    const std::vector<std::vector<Vector>> structured{
        build_inspection_tour(d).vertices(),
        build_inspection_tour(d, 0.999 * root).vertices(),
        cross_polytope_vertices(CrossPolytopeSpec{d, 1.0})};
    const bool expected[] = {true, false, false};
    for (std::size_t k = 0; k < structured.size(); ++k) {
      Rng samples(310 + d * 10 + k);
      const auto directions = sample_directions(d, 10000, samples, structured[k]);
      const auto a = vertex_set_sees_all(structured[k], directions);
      const auto b = hull_contains_sphere(structured[k], directions);
      ++trials;
      if (a.covered != b.covered || a.covered != expected[k]) {
        fail(o, "structured case " + std::to_string(k) + " at d=" + std::to_string(d));
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(trials) + " vertex sets, 100% agreement (" +
               std::to_string(covered) + " random sets covered)";
  }
  return o;
}

// 4. Simplex poles are regular and cover; at most d poles are refuted.
Outcome hemisphere_cover() {
  Outcome o;
  double worst_dot = 0.0;
  double worst_refute = -1.0;
  for (std::size_t d = 1; d <= 10; ++d) {
    const auto cover = simplex_cover(d);
    if (cover.size() != d + 1) fail(o, "wrong pole count");
    for (std::size_t i = 0; i < cover.size(); ++i) {
      for (std::size_t j = i + 1; j < cover.size(); ++j) {
        const double err = std::abs(dot(cover[i].pole.coords(), cover[j].pole.coords()) + 1.0 / double(d));
        worst_dot = std::max(worst_dot, err);
        if (err > 1e-12) fail(o, "pairwise dot off at d=" + std::to_string(d));
      }
    }
    Rng rng(400 + d);
    for (const auto& x : sample_directions(d, 100000, rng)) {
      const bool inside = std::any_of(cover.begin(), cover.end(),
                                      [&](const Hemisphere& h) { return h.contains(x.coords()); });
      if (!inside) {
        fail(o, "uncovered sample at d=" + std::to_string(d));
        break;
      }
    }
    for (int t = 0; t < 1000; ++t) {
      std::vector<UnitDirection> poles;
      for (std::size_t i = 0; i < d; ++i) poles.push_back(sample_unit_direction(d, rng));
      const auto w = refute_cover(poles, rng);
      if (!w) {
        fail(o, "no witness for random poles at d=" + std::to_string(d));
        continue;
      }
      double m = -1.0;
      for (const auto& p : poles) m = std::max(m, dot(p.coords(), w->coords()));
      worst_refute = std::max(worst_refute, m);
      if (m > 1e-7) fail(o, "witness max dot " + std::to_string(m));
    }
  }
  if (o.pass) {
    std::ostringstream s;
    s << "max |dot + 1/d| " << worst_dot << ", worst refutation max dot " << worst_refute;
    o.detail = s.str();
  }
  return o;
}

// 5. Doubling strategy stays within 12 L rho + 3 L; phase i length <= 3 2^i L.
Outcome competitive_envelope() {
  Outcome o;
  double worst_margin = -1e300;
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto rows = run_sweep(SweepConfig{d, 10000, 0.1, 100.0, 500 + d});
    const double l = inspection_tour_length(d);
    for (const auto& r : rows) {
      const double margin = r.traversed_length - (12.0 * l * r.rho + 3.0 * l);
      worst_margin = std::max(worst_margin, margin);
      if (!r.envelope_ok || margin > 0.0) fail(o, "envelope violated at d=" + std::to_string(d));
    }
    const auto strategy = build_doubling_strategy(build_inspection_tour(d));
    for (int i = 0; i <= 20; ++i) {
      if (strategy.phase_length(i) > 3.0 * std::ldexp(1.0, i) * strategy.base_length() + 1e-9) {
        fail(o, "phase " + std::to_string(i) + " too long at d=" + std::to_string(d));
      }
    }
  }
  if (o.pass) {
    std::ostringstream s;
    s << "5 x 1e4 searches, largest traversed - envelope = " << worst_margin;
    o.detail = s.str();
  }
  return o;
}

// 6. The 0.99-scaled tour fails to inspect, with the diagonal as analytic witness.
Outcome lower_bound_property() {
  Outcome o;
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto shrunk = build_inspection_tour(d).scaled(0.99);
    Rng rng(600 + d);
    const auto w = find_uncovered_witness(shrunk, 20000, rng);
    if (!w) fail(o, "no witness for shrunk tour at d=" + std::to_string(d));
    const auto diagonal = UnitDirection::normalize(Vector(d, 1.0));
    const double deficit = 1.0 - support(shrunk.vertices(), diagonal.coords());
    const bool seen = std::any_of(shrunk.vertices().begin(), shrunk.vertices().end(),
                                  [&](const Vector& v) { return sees(v, diagonal); });
    if (!(deficit > 0.0) || std::abs(deficit - 0.01) > 1e-12 || seen) {
      fail(o, "diagonal not an analytic witness at d=" + std::to_string(d));
    }
  }
  if (o.pass) o.detail = "witness found for d = 2..6; diagonal support deficit 0.01";
  return o;
}

// 7. Prefix of the doubling path, rescaled, inspects and is short enough.
Outcome round_trip() {
  Outcome o;
  std::ostringstream s;
  for (std::size_t d : {2u, 3u}) {
    const auto strategy = build_doubling_strategy(build_inspection_tour(d));
    const double l = strategy.base_length();
    const double alpha = 3.0 * l;
    const double eps = l / 10.0;
    const int last_phase = static_cast<int>(std::ceil(std::log2(alpha / eps)));
    Rng rng(700 + d);
    const auto directions = sample_directions(d, 4096, rng);
    const auto extracted =
        extract_inspection_curve(strategy.path(last_phase + 1), 12.0 * l, alpha, eps, directions);
    const double limit = 12.0 * l + eps + 0.01 * l;
    if (extracted.curve.length() > limit) fail(o, "extracted curve too long at d=" + std::to_string(d));
    const auto& vertices = extracted.curve.vertices();
    for (const auto& u : directions) {
      const bool seen = std::any_of(vertices.begin(), vertices.end(),
                                    [&](const Vector& v) { return sees(v, u); });
      if (!seen) {
        fail(o, "extracted curve misses a direction at d=" + std::to_string(d));
        break;
      }
    }
    s << "d=" << d << " length " << extracted.curve.length() << " <= " << limit << "; ";
  }
  if (o.pass) o.detail = s.str() + "all sampled directions seen";
  return o;
}

// 8. Identical sweep invocations produce byte-identical CSV.
Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "sphere_search_acceptance_a.csv";
  const auto b = dir / "sphere_search_acceptance_b.csv";
  auto sweep = [](const std::filesystem::path& out) {
    std::ostringstream sink;
    return run_cli({"sweep", "--dim", "3", "--trials", "5000", "--rho-min", "0.1", "--rho-max",
                    "100", "--seed", "42", "--out", out.string()},
                   sink, sink);
  };
  if (sweep(a) != kExitOk || sweep(b) != kExitOk) fail(o, "sweep did not succeed");
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  const auto ta = slurp(a);
  if (ta.empty() || ta != slurp(b)) fail(o, "CSV outputs differ");
  if (o.pass) o.detail = std::to_string(ta.size()) + " identical bytes";
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "tour length (2d)^{3/2}, d=2..50", 1.0, tour_length},
      {"AC2", "tour vertices see 1e5 samples, d=2..8", 30.0, inspection},
      {"AC3", "sees-all == hull-contains-sphere", 0.0, lemma_equivalence},
      {"AC4", "simplex cover d+1 poles; d poles refuted", 60.0, hemisphere_cover},
      {"AC5", "competitive envelope 12L rho + 3L", 120.0, competitive_envelope},
      {"AC6", "shrunk tour has uncovered witness, d<=6", 0.0, lower_bound_property},
      {"AC7", "inspection curve extracted from search path", 0.0, round_trip},
      {"AC8", "sweep CSV byte-identical across runs", 0.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && seconds >= c.time_limit_s) {
      fail(o, "runtime " + std::to_string(seconds) + " s exceeds " +
                  std::to_string(c.time_limit_s) + " s");
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " ("
              << std::fixed << std::setprecision(2) << seconds << " s): "
              << std::defaultfloat << o.detail << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
