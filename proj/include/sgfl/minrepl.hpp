#pragma once

#include <cstddef>
#include <vector>

#include "sgfl/factorization.hpp"
#include "sgfl/semigroup.hpp"

namespace sgfl {

/// Minimal replaceable factorizations for an atom m, and the exception
/// candidate sets filtered from their evaluations.
struct MinReplReport {
  Element m;
  std::size_t m_index = 0;
  /// Indices into S.generators() of the atoms other than m, in presentation order.
  std::vector<std::size_t> atom_index;
  /// Lexicographically sorted antichain over atom_index.
  std::vector<Exponents> minimal_vectors;
  /// evaluations[i] is the value of minimal_vectors[i].
  std::vector<Element> evaluations;

  bool candidates_computed = false;
  /// Whether n1 / n2 were computed (numerical S with m the least / greatest atom).
  bool n1_applicable = false;
  bool n2_applicable = false;
  std::vector<Element> m1;
  std::vector<Element> m2;
  std::vector<Element> n1;
  std::vector<Element> n2;
};

/// True iff value(c) - m lies in S, where c ranges over the atoms other than m.
bool repl_contains(const Semigroup& s, const Element& m, std::span<const std::int64_t> c);

/// Minimal elements of the replaceable set, found as projections of the minimal
/// nonnegative solutions (c, b) of value(c) - value(b) = m.
MinReplReport min_repl(const Semigroup& s, const Element& m, const SearchOptions& options = {});

/// Fills m1, m2 and, for numerical S with m = n_1 (resp. n_k), n1 (resp. n2).
void candidate_sets(const Semigroup& s, MinReplReport& report);

/// Zeros on a prefix of the coordinates, strictly positive from then on.
bool is_left_zero(std::span<const std::int64_t> c);
/// Strictly positive on a prefix of the coordinates, zeros from then on.
bool is_right_zero(std::span<const std::int64_t> c);

/// Keeps the coordinatewise-minimal vectors, sorted lexicographically.
std::vector<Exponents> minimal_elements(std::vector<Exponents> vectors);

}  // namespace sgfl
