#pragma once

#include <filesystem>
#include <vector>

#include "quadcover/geometry.hpp"

namespace quadcover {

enum class PackingSource { Embedded, External };

/// M equal circles of one radius inside the unit square, centers sorted
/// lexicographically (y, then x) so downstream UAV indices are stable.
struct PackingConfig {
  int m = 0;
  double radius = 0;
  std::vector<Point2> centers;
  PackingSource source = PackingSource::Embedded;
};

/// Throws InvalidPackingError when a circle leaves the unit square or two
/// circles overlap (tolerance 1e-9), naming the offending circle or pair.
void validate_packing(const PackingConfig& p);

/// Best-known packing for m in [1,16]; perfect squares return the n x n grid
/// of radius 1/(2n). Throws UnsupportedCountError outside the range.
PackingConfig get_packing(int m);

/// Line-oriented text format: `m r` then m lines `x y`; '#' starts a comment.
/// Locale-independent strict parse. Throws PackingParseError or
/// InvalidPackingError.
PackingConfig load_packing_file(const std::filesystem::path& path);

/// m * pi * r^2
double packing_density(const PackingConfig& p);

}  // namespace quadcover
