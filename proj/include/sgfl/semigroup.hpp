#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sgfl {

/// A vector in Z^d. Numerical semigroups use d = 1.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Element(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Element zero(std::size_t dim) { return Element(std::vector<std::int64_t>(dim, 0)); }

  std::size_t dim() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }
  bool is_zero() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(std::int64_t k, const Element& a);

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    return a.coords_ <=> b.coords_;
  }

  /// "48" for d = 1, "(30,10)" otherwise.
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

/// Exponent vector over an ordered atom list.
using Exponents = std::vector<std::int64_t>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept;
};

std::int64_t total_length(std::span<const std::int64_t> exps);

/// Coordinatewise a <= b.
bool dominated_by(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

struct SemigroupOptions {
  /// Coordinates of a searched grading functional lie in [-grading_box, grading_box].
  std::int64_t grading_box = 50;
};

/// A finitely generated, positively graded subsemigroup of Z^d, stored by its
/// minimal generating set. Immutable after construction; copies share the
/// membership memo, which is internally synchronized.
class Semigroup {
 public:
  /// Validates that `generators` is a minimal generating set. Numerical
  /// (d = 1) generators are sorted ascending; affine generators keep their order.
  static Semigroup create(std::vector<Element> generators, std::size_t dim,
                          const SemigroupOptions& options = {});
  static Semigroup numerical(std::vector<std::int64_t> generators);

  /// Accepts any generating set and keeps only the minimal generators.
  static Semigroup from_generating_set(std::vector<Element> generators, std::size_t dim,
                                       const SemigroupOptions& options = {});

  std::size_t dim() const { return dim_; }
  const std::vector<Element>& generators() const { return generators_; }
  std::size_t embedding_dimension() const { return generators_.size(); }
  const Element& grading() const { return grading_; }
  std::int64_t grade(const Element& v) const;

  /// d = 1 with gcd 1.
  bool is_numerical() const { return dim_ == 1 && gcd_ == 1; }
  /// gcd of the generators for d = 1, 0 otherwise.
  std::int64_t gcd() const { return gcd_; }

  bool contains(const Element& v) const;
  /// contains(Element{v}) for d = 1, without allocating.
  bool contains_value(std::int64_t v) const;
  bool divides(const Element& a, const Element& b) const;
  std::optional<std::size_t> generator_index(const Element& v) const;

  /// Sum of exps[i] * generators()[i].
  Element evaluate(std::span<const std::int64_t> exps) const;
  /// Sum of exps[i] * generators()[atoms[i]].
  Element evaluate(std::span<const std::int64_t> exps, std::span<const std::size_t> atoms) const;

  /// Least element of S in each residue class modulo m.
  std::vector<std::int64_t> apery_set(std::int64_t m) const;
  /// Largest integer not in S; -1 when S is all of N.
  std::int64_t frobenius() const;

  std::string to_string() const;

 private:
  struct Memo;

  Semigroup() = default;
  bool contains_by_search(const Element& v) const;

  std::size_t dim_ = 0;
  std::vector<Element> generators_;
  Element grading_;
  std::int64_t gcd_ = 0;
  std::vector<std::size_t> by_grade_desc_;
  std::vector<std::int64_t> apery_min_;  // Ap(S; n_1) for numerical S
  std::shared_ptr<Memo> memo_;
};

/// Depth-first search for c >= 0 with sum c[i] * gens[i] == target, using
/// `grading` (positive on every generator) to bound the search.
std::optional<Exponents> find_combination(const Element& target, std::span<const Element> gens,
                                          const Element& grading);

}  // namespace sgfl
