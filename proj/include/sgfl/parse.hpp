#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgfl/semigroup.hpp"

namespace sgfl {

/// Generators as `10,12,21,38` or `(2,0),(3,1),(0,5)`. The dimension is
/// taken from the first tuple; every vector must match it.
std::vector<Element> parse_generators(std::string_view text);

/// One line of the input format: `dim=<d>; gens=...`, or `gens=...` alone,
/// or a bare generator list. A stated dim must match the tuples.
Semigroup parse_semigroup(std::string_view line);

/// Semigroups from a file in the line format; blank lines and lines starting
/// with '#' are skipped.
std::vector<Semigroup> read_semigroup_file(const std::string& path);

/// `48` or `(30,10)`, checked against dim.
Element parse_element(std::string_view text, std::size_t dim);

/// Comma-separated integers; a non-integer entry raises NotIntegerPoint.
std::vector<std::int64_t> parse_point(std::string_view text);

}  // namespace sgfl
