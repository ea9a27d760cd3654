#include "sphere_search/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "sphere_search/curve_io.hpp"
#include "sphere_search/parallel.hpp"
#include "sphere_search/search.hpp"
#include "sphere_search/tour.hpp"
#include "sphere_search/verification.hpp"

namespace sphere_search {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

std::string join(std::span<const double> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt(v[i]);
  }
  return out;
}

Vector parse_vector(const std::string& text) {
  Vector out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
  }
  return out;
}

// -- tour ---------------------------------------------------------------------

struct TourOptions {
  long dim = 0;
  std::optional<double> scale;
  std::string out_path;
};

int cmd_tour(const TourOptions& o, std::ostream& out) {
  if (o.dim < 2) throw UsageError("--dim must be >= 2");
  const auto dim = static_cast<std::size_t>(o.dim);
  const auto tour = build_inspection_tour(dim, o.scale);
  write_curve_file(o.out_path, tour);
  const double analytic = inspection_tour_length(dim);
  out << "vertices: " << tour.vertices().size() << "\n"
      << "length: " << fmt(tour.length()) << "\n"
      << "analytic (2d)^(3/2): " << fmt(analytic) << "\n"
      << "difference: " << fmt(tour.length() - analytic) << "\n"
      << "wrote: " << o.out_path << "\n";
  return kExitOk;
}

// -- verify -------------------------------------------------------------------

struct VerifyOptions {
  std::string curve_path;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned depth = 6;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.samples == 0) throw UsageError("--samples must be >= 1");
  const auto curve = read_curve_file(o.curve_path);
  const auto points = subdivided_vertices(curve, o.depth);
  Rng rng(o.seed);
  const auto directions = sample_directions(curve.dim(), o.samples, rng, points);
  const auto seen = vertex_set_sees_all(points, directions);
  const auto hull = hull_contains_sphere(points, directions);
  const bool agree = seen.covered == hull.covered;

  out << "dim: " << curve.dim() << "\n"
      << "curve length: " << fmt(curve.length()) << "\n"
      << "points tested: " << points.size() << "\n"
      << "directions tested: " << seen.samples_used << "\n"
      << "sees-all: " << (seen.covered ? "covered" : "uncovered") << "\n"
      << "hull-contains-sphere: " << (hull.covered ? "covered" : "uncovered") << "\n"
      << "agree: " << (agree ? "true" : "false") << "\n";
  if (seen.covered && hull.covered) return kExitOk;
  const auto& witness = seen.witness ? *seen.witness : *hull.witness;
  out << "witness: " << join(witness.coords()) << "\n"
      << "support at witness: " << fmt(support(points, witness.coords())) << "\n";
  return kExitFailure;
}

// -- sweep --------------------------------------------------------------------

struct SweepOptions {
  long dim = 0;
  long trials = 0;
  double rho_min = 0.1;
  double rho_max = 100.0;
  std::uint64_t seed = 1;
  std::string out_path;
};

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  if (o.dim < 2) throw UsageError("--dim must be >= 2");
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  if (!(o.rho_min > 0.0) || !(o.rho_max >= o.rho_min) || !std::isfinite(o.rho_max)) {
    throw UsageError("need 0 < --rho-min <= --rho-max");
  }
  const SweepConfig config{static_cast<std::size_t>(o.dim),
                           static_cast<std::size_t>(o.trials), o.rho_min, o.rho_max,
                           o.seed};
  const auto rows = run_sweep(config);
  {
    std::ofstream csv(o.out_path, std::ios::binary);
    if (!csv) throw FormatError("cannot write " + o.out_path);
    write_sweep_csv(rows, csv);
  }
  const double length = inspection_tour_length(config.dim);
  double max_ratio = 0.0;
  bool all_ok = true;
  for (const auto& row : rows) {
    max_ratio = std::max(max_ratio, row.ratio);
    all_ok = all_ok && row.envelope_ok;
  }
  out << "rows: " << rows.size() << "\n"
      << "tour length: " << fmt(length) << "\n"
      << "max ratio: " << fmt(max_ratio) << "\n"
      << "ratio bound 12L + 3L/rho_min: " << fmt(12.0 * length + 3.0 * length / o.rho_min)
      << "\n"
      << "envelope: " << (all_ok ? "PASS" : "FAIL") << "\n"
      << "wrote: " << o.out_path << "\n";
  return all_ok ? kExitOk : kExitFailure;
}

// -- cover --------------------------------------------------------------------

struct CoverOptions {
  std::optional<long> dim;
  std::optional<std::string> refute_path;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
};

int cmd_cover(const CoverOptions& o, std::ostream& out) {
  Rng rng(o.seed);
  if (o.refute_path) {
    const auto poles = read_pole_file(*o.refute_path);
    const std::size_t dim = poles.front().dim();
    if (o.dim && *o.dim != static_cast<long>(dim)) {
      throw UsageError("--dim does not match the pole file");
    }
    out << "dim: " << dim << "\n" << "poles: " << poles.size() << "\n";
    const auto witness = refute_cover(poles, rng);
    if (!witness) {
      if (poles.size() > dim) {
        out << "no witness found (expected for a covering set)\n";
        return kExitOk;
      }
      out << "no witness found for " << poles.size() << " <= " << dim << " poles\n";
      return kExitFailure;
    }
    double worst = -1.0;
    for (const auto& p : poles) worst = std::max(worst, dot(p.coords(), witness->coords()));
    out << "witness: " << join(witness->coords()) << "\n"
        << "max dot: " << fmt(worst) << "\n";
    return kExitOk;
  }

  if (!o.dim || *o.dim < 1) throw UsageError("--dim must be >= 1");
  if (o.samples == 0) throw UsageError("--samples must be >= 1");
  const auto dim = static_cast<std::size_t>(*o.dim);
  const auto cover = simplex_cover(dim);
  out << "dim: " << dim << "\n" << "poles: " << cover.size() << "\n";
  for (const auto& h : cover) out << "pole: " << join(h.pole.coords()) << "\n";
  const auto directions = sample_directions(dim, o.samples, rng);
  const auto uncovered = parallel_find_first(directions.size(), [&](std::size_t i) {
    return std::none_of(cover.begin(), cover.end(),
                        [&](const Hemisphere& h) { return h.contains(directions[i].coords()); });
  });
  out << "directions tested: " << directions.size() << "\n";
  if (uncovered) {
    out << "coverage: FAIL\n" << "witness: " << join(directions[*uncovered].coords()) << "\n";
    return kExitFailure;
  }
  out << "coverage: PASS\n";
  return kExitOk;
}

// -- search -------------------------------------------------------------------

struct SearchOptions {
  long dim = 0;
  std::string normal;
  double rho = 0.0;
};

int cmd_search(const SearchOptions& o, std::ostream& out) {
  if (o.dim < 2) throw UsageError("--dim must be >= 2");
  const auto dim = static_cast<std::size_t>(o.dim);
  const Vector normal = parse_vector(o.normal);
  if (normal.size() != dim) throw UsageError("--normal must have --dim entries");
  if (!std::isfinite(o.rho) || o.rho < 0.0) throw UsageError("--rho must be >= 0");
  const Hyperplane target(UnitDirection::normalize(normal), o.rho);
  const auto strategy = build_doubling_strategy(build_inspection_tour(dim));
  const auto t = simulate_search(strategy, target);
  const bool ok = within_envelope(t, strategy.base_length());
  out << "normal: " << join(t.target.normal().coords()) << "\n"
      << "rho: " << fmt(t.target.offset()) << "\n"
      << "phase: " << t.phase << "\n"
      << "traversed length: " << fmt(t.traversed_length) << "\n"
      << "hit point: " << join(t.hit_point) << "\n"
      << "ratio: " << fmt(t.ratio) << "\n"
      << "envelope 12L rho + 3L: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

std::uint64_t direction_hash(const UnitDirection& direction) {
  std::uint64_t h = 14695981039346656037ULL;
  for (double x : direction.coords()) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    for (int byte = 0; byte < 8; ++byte) {
      h ^= bits & 0xffU;
      h *= 1099511628211ULL;
      bits >>= 8;
    }
  }
  return h;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  const auto strategy = build_doubling_strategy(build_inspection_tour(config.dim));
  const double length = strategy.base_length();

  // Draw every target up front so rows do not depend on the thread schedule.
  Rng rng(config.seed);
  std::uniform_real_distribution<double> log_rho(std::log(config.rho_min),
                                                 std::log(config.rho_max));
  std::vector<Hyperplane> targets;
  targets.reserve(config.trials);
  for (std::size_t i = 0; i < config.trials; ++i) {
    auto normal = sample_unit_direction(config.dim, rng);
    const double rho = config.rho_min == config.rho_max ? config.rho_min
                                                         : std::exp(log_rho(rng));
    targets.emplace_back(std::move(normal), rho);
  }

  return parallel_map<SweepRow>(targets.size(), [&](std::size_t i) {
    const auto t = simulate_search(strategy, targets[i]);
    return SweepRow{config.dim,
                    config.seed,
                    t.target.offset(),
                    direction_hash(t.target.normal()),
                    t.traversed_length,
                    t.phase,
                    t.ratio,
                    within_envelope(t, length)};
  });
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "dim,seed,rho,direction_hash,traversed_length,phase,ratio,envelope_ok\n";
  for (const auto& r : rows) {
    std::ostringstream hash;
    hash << std::hex << std::setw(16) << std::setfill('0') << r.direction_hash;
    out << r.dim << ',' << r.seed << ',' << fmt(r.rho) << ',' << hash.str() << ','
        << fmt(r.traversed_length) << ',' << r.phase << ',' << fmt(r.ratio) << ','
        << (r.envelope_ok ? "true" : "false") << '\n';
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sphere inspection tours and competitive hyperplane search", "sphere_search"};
  app.require_subcommand(1);

  TourOptions tour;
  auto* tour_cmd = app.add_subcommand("tour", "Write the cross-polytope inspection tour");
  tour_cmd->add_option("--dim", tour.dim, "Dimension d >= 2")->required();
  tour_cmd->add_option("--scale", tour.scale, "Vertex distance from the origin (default sqrt(d))");
  tour_cmd->add_option("--out", tour.out_path, "Output curve file")->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a curve inspects the unit sphere");
  verify_cmd->add_option("--curve", verify.curve_path, "Curve file")->required();
  verify_cmd->add_option("--samples", verify.samples, "Random sphere samples");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");
  verify_cmd->add_option("--depth", verify.depth, "Midpoint subdivision depth per segment");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Simulate random hyperplane searches to CSV");
  sweep_cmd->add_option("--dim", sweep.dim, "Dimension d >= 2")->required();
  sweep_cmd->add_option("--trials", sweep.trials, "Number of hyperplanes")->required();
  sweep_cmd->add_option("--rho-min", sweep.rho_min, "Smallest hyperplane distance");
  sweep_cmd->add_option("--rho-max", sweep.rho_max, "Largest hyperplane distance");
  sweep_cmd->add_option("--seed", sweep.seed, "RNG seed");
  sweep_cmd->add_option("--out", sweep.out_path, "Output CSV")->required();

  CoverOptions cover;
  auto* cover_cmd = app.add_subcommand("cover", "Simplex hemisphere cover, or refute a pole set");
  cover_cmd->add_option("--dim", cover.dim, "Dimension d >= 1");
  cover_cmd->add_option("--refute", cover.refute_path, "Pole file to refute");
  cover_cmd->add_option("--samples", cover.samples, "Random sphere samples");
  cover_cmd->add_option("--seed", cover.seed, "RNG seed");

  SearchOptions search;
  auto* search_cmd = app.add_subcommand("search", "Search for one hyperplane with the doubling strategy");
  search_cmd->add_option("--dim", search.dim, "Dimension d >= 2")->required();
  search_cmd->add_option("--normal", search.normal, "Comma-separated normal (normalized)")->required();
  search_cmd->add_option("--rho", search.rho, "Distance from the origin")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tour_cmd) return cmd_tour(tour, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*cover_cmd) return cmd_cover(cover, out);
    if (*search_cmd) return cmd_search(search, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SearchError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace sphere_search
