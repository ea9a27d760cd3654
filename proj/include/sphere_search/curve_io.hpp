#pragma once

// JSON documents for curves and hemisphere pole sets.
//
//   {"dim": 2, "closed": true, "vertices": [[1.4142135623730951, 0.0], ...]}
//   {"dim": 2, "poles": [[1.0, 0.0], [0.0, 1.0]]}
//
// Doubles are written in shortest round-trip form, so reading a written file
// reproduces every coordinate exactly.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphere_search/geometry.hpp"

namespace sphere_search {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string curve_to_json(const PolylineCurve& curve);
PolylineCurve curve_from_json(const std::string& text);

void write_curve_file(const std::filesystem::path& path, const PolylineCurve& curve);
PolylineCurve read_curve_file(const std::filesystem::path& path);

/// Poles are normalized on read; zero vectors are rejected.
std::vector<UnitDirection> poles_from_json(const std::string& text);
std::string poles_to_json(const std::vector<UnitDirection>& poles);
std::vector<UnitDirection> read_pole_file(const std::filesystem::path& path);

}  // namespace sphere_search
