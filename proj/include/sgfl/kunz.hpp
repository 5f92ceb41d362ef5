#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgfl/semigroup.hpp"
#include "sgfl/verdict.hpp"

namespace sgfl {

/// Z/mZ with canonical representatives r_a = a and the carries
/// d[a][b] = (r_a + r_b - r_{a+b}) / m.
struct KunzContext {
  int m = 0;
  std::vector<std::vector<int>> d;

  int add(int a, int b) const { return (a + b) % m; }
  int sub(int a, int b) const { return ((a - b) % m + m) % m; }
  /// Group sum of c[i] * residues[i].
  int sum(std::span<const int> residues, std::span<const std::int64_t> c) const;
  /// d_(c) = (sum c[i] r_{residues[i]} - r_beta) / m.
  std::int64_t carry(std::span<const int> residues, std::span<const std::int64_t> c) const;
};

KunzContext numerical_context(std::int64_t m);

/// Absorbing element adjoined to the Kunz poset.
inline constexpr int kInfinity = -1;

struct InfFactorization {
  Exponents c;  // over KunzPoint::atoms()
  int beta = 0;
  std::int64_t d_value = 0;
  friend bool operator==(const InfFactorization&, const InfFactorization&) = default;
};

/// An integer point of the Kunz polytope, validated on construction, with the
/// poset, the P-infinity product table and its factorization data cached.
class KunzPoint {
 public:
  /// Requires size m, x_0 = 0, x >= 0 and every x_a + x_b + d_{a,b} >= x_{a+b}.
  KunzPoint(KunzContext ctx, std::vector<std::int64_t> x);

  const KunzContext& context() const { return ctx_; }
  int m() const { return ctx_.m; }
  const std::vector<std::int64_t>& x() const { return x_; }

  /// Pairs (a, b) with x_a + x_b + d_{a,b} = x_{a+b}, a <= b.
  const std::vector<std::pair<int, int>>& equality_set() const { return equality_; }
  bool precedes(int a, int b) const;
  /// All (a, b) with a below b, reflexive pairs included.
  std::vector<std::pair<int, int>> relations() const;
  /// a + b when a precedes a + b, kInfinity otherwise.
  int oplus(int a, int b) const;

  const std::vector<int>& atoms() const { return atoms_; }
  /// Minimal vectors over atoms() whose product is infinite, lexicographic.
  const std::vector<InfFactorization>& min_inf_factorizations() const { return min_inf_; }
  /// Longest and shortest factorization of b into atoms().
  std::pair<std::int64_t, std::int64_t> length_extremes(int b) const;
  /// Product of c over atoms().
  int product(std::span<const std::int64_t> c) const;

 private:
  KunzContext ctx_;
  std::vector<std::int64_t> x_;
  std::vector<std::pair<int, int>> equality_;
  std::vector<std::vector<int>> table_;
  std::vector<int> atoms_;
  std::vector<InfFactorization> min_inf_;
  std::vector<std::int64_t> longest_;
  std::vector<std::int64_t> shortest_;
};

/// x_a = (Ap(S; m)[a] - a) / m.
KunzPoint point_of_semigroup(const KunzContext& ctx, const Semigroup& s);
/// The numerical semigroup generated by m and every x_a m + a.
Semigroup semigroup_of_point(const KunzPoint& p);
/// Value in the semigroup of the point of the atom a: x_a m + a.
std::int64_t atom_value(const KunzPoint& p, int a);

struct StructureConstants {
  std::int64_t d = 0;
  std::int64_t b = 0;
};
/// d_(c) and b_{(c),(c')} for vectors over the given residues.
StructureConstants structure_constants(const KunzContext& ctx, std::span<const int> residues,
                                       std::span<const std::int64_t> c, std::span<const std::int64_t> c2);

/// -x_{b' - b} + sum (c'_a - c_a) x_a >= b_{(c),(c')}, vectors over p.atoms().
bool sq_leq(const KunzPoint& p, std::span<const std::int64_t> c, std::span<const std::int64_t> c2);
std::vector<InfFactorization> pseudomin(const KunzPoint& p);
/// Requires equal equality sets.
bool cominimal(const KunzPoint& p, const KunzPoint& q);

bool is_reduced_point(const KunzPoint& p);

struct AtomCheck {
  bool is_atom = true;
  /// When m is not an atom: counts over residues 0..m-1 with sum c_a a = m and sum c_a x_a = 0.
  Exponents witness;
};
AtomCheck is_m_atom_point(const KunzPoint& p);

enum class Sense { GreaterEqual, LessEqual };

/// coefficients . x (sense) rhs, with lhs its value at the point.
struct InequalityTemplate {
  Exponents c;
  int beta = 0;
  std::int64_t d_value = 0;
  std::int64_t extreme_length = 0;
  std::vector<std::int64_t> coefficients;  // over x_0 .. x_{m-1}
  Sense sense = Sense::GreaterEqual;
  std::int64_t rhs = 0;
  std::int64_t lhs = 0;
  bool satisfied = true;
  std::string text;
};

struct KunzVerdict {
  Formula formula = Formula::Longest;
  bool holds = true;
  std::vector<InequalityTemplate> inequalities;
};

KunzVerdict main_verdict(const KunzPoint& p, Formula formula);

}  // namespace sgfl
