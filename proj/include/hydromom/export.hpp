#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hydromom/grid.hpp"

namespace hydromom {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// CSV: one "# key: value" line per metadata entry, a header row
/// (x_label,y_label,re,im,abs2), then one row per grid cell with %.17g values.
void write_csv(std::ostream& out, const GridSample& sample, const Metadata& meta);

/// JSON: {"metadata": {...}, "columns": [...], "rows": [[x, y, re, im, abs2], ...]}.
void write_json(std::ostream& out, const GridSample& sample, const Metadata& meta);

struct Table {
  Metadata metadata;
  std::vector<std::string> columns;
  std::vector<std::array<double, 5>> rows;
};

/// Inverse of write_csv / write_json. Throws DomainError on malformed input.
Table read_csv(std::istream& in);
Table read_json(std::istream& in);

}  // namespace hydromom
