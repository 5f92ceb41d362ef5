#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgfl/factorization.hpp"
#include "sgfl/minrepl.hpp"
#include "sgfl/semigroup.hpp"

namespace sgfl {

/// Longest: L(s + m) = L(s) + 1 for all s. Shortest: l(s + m) = l(s) + 1 for all s.
enum class Formula { Longest, Shortest };
enum class Method { MinReplCriterion, EmbDim3, OracleScan, KunzCriterion };

std::string_view to_string(Formula f);
std::string_view to_string(Method m);

/// One tested element t (with t - m in S): value = L(t) and shifted = L(t - m) + 1,
/// or the same with l.
struct CheckedElement {
  Element element;
  std::int64_t value = 0;
  std::int64_t shifted = 0;
  bool agrees() const { return value == shifted; }
};

struct Verdict {
  Formula formula = Formula::Longest;
  Element m;
  bool holds = true;
  std::vector<CheckedElement> checked;
  std::vector<CheckedElement> counterexamples;  // sorted by element
  Method method = Method::MinReplCriterion;
  /// False when the result is evidence over a finite range rather than a decision.
  bool exact = true;
  std::string note;
};

/// Atoms at which the formula can possibly hold: n_1 (Longest) or n_k
/// (Shortest) for numerical S, every generator otherwise.
std::vector<Element> candidate_atoms(const Semigroup& s, Formula formula);

/// Which evaluations of the minimal replaceable factorizations are tested.
/// Reduced keeps only the divisibility-minimal candidates (m1/m2, narrowed to
/// n1/n2 for numerical S); Full tests every evaluation. Reduced can miss a
/// failure whose witness is a non-minimal evaluation; Full cannot.
enum class CandidateScope { Reduced, Full };

std::string_view to_string(CandidateScope scope);

/// Decides the formula at m from the minimal replaceable factorizations.
Verdict check_formula(const Semigroup& s, const Element& m, Formula formula, const SearchOptions& options = {},
                      CandidateScope scope = CandidateScope::Reduced);
/// Same, reusing a report from min_repl(s, m); candidate sets are filled if missing.
Verdict check_formula(const Semigroup& s, MinReplReport& report, Formula formula, const SearchOptions& options = {},
                      CandidateScope scope = CandidateScope::Reduced);

/// Three-generator numerical semigroups need a single check at alpha * n_2
/// (Longest, m = n_1) or beta * n_2 (Shortest, m = n_3).
Verdict embdim3_check(const Semigroup& s, Formula formula, const SearchOptions& options = {});

struct OracleOptions {
  /// Largest t = s + m scanned (by value for numerical S, by grade otherwise).
  std::optional<std::int64_t> bound;
  /// Permit the default bound for affine S instead of raising MissingBound.
  bool allow_default = false;
  unsigned jobs = 1;
};

inline constexpr std::int64_t kDefaultAffineBound = 120;

/// The range t <= bound that settles the formula for numerical S: past the
/// eventual threshold it holds automatically at the candidate atom, and at any
/// other atom a failure already occurs at or below n_1 * m (resp. n_k * m).
std::int64_t exact_oracle_bound(const Semigroup& s, const Element& m, Formula formula);

/// Brute-force check of L(t) = L(t - m) + 1 for every t in S with t - m in S up
/// to the bound, using length tables built by dynamic programming.
Verdict oracle_scan(const Semigroup& s, const Element& m, Formula formula, const OracleOptions& options = {});

}  // namespace sgfl
