#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgfl/semigroup.hpp"

namespace sgfl {

struct SearchOptions {
  /// Upper limit on search nodes; exceeding it raises BudgetExceeded.
  std::uint64_t budget = 10'000'000;
};

/// All of Z(v), as exponent vectors over S.generators(), in lexicographic order.
/// Empty iff v is not in S.
std::vector<Exponents> factorizations(const Semigroup& s, const Element& v, const SearchOptions& options = {});

struct LengthSummary {
  Element element;
  std::vector<std::int64_t> lengths;  // sorted, distinct
  std::int64_t longest = 0;
  std::int64_t shortest = 0;
  Exponents witness_longest;   // lexicographically least of maximal length
  Exponents witness_shortest;  // lexicographically least of minimal length
  std::optional<bool> has_m_in_longest;
  std::optional<bool> has_m_in_shortest;
};

/// Full enumeration of Z(v). When `m` is given (a generator), also reports
/// whether some factorization of extremal length uses m.
LengthSummary length_summary(const Semigroup& s, const Element& v, const std::optional<Element>& m = std::nullopt,
                             const SearchOptions& options = {});

struct ExtremeFactorization {
  std::int64_t length = 0;
  Exponents witness;
};

/// L(v) by branch and bound, without materializing Z(v).
ExtremeFactorization longest_factorization(const Semigroup& s, const Element& v, const SearchOptions& options = {});
/// l(v) by branch and bound.
ExtremeFactorization shortest_factorization(const Semigroup& s, const Element& v, const SearchOptions& options = {});

}  // namespace sgfl
