#include "sgfl/verdict.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <unordered_map>

#include "sgfl/error.hpp"

namespace sgfl {

std::string_view to_string(Formula f) { return f == Formula::Longest ? "longest" : "shortest"; }

std::string_view to_string(Method m) {
  switch (m) {
    case Method::MinReplCriterion: return "minrepl";
    case Method::EmbDim3: return "embdim3";
    case Method::OracleScan: return "oracle";
    case Method::KunzCriterion: return "kunz";
  }
  return "unknown";
}

std::string_view to_string(CandidateScope scope) { return scope == CandidateScope::Full ? "full" : "reduced"; }

namespace {

void require_atom(const Semigroup& s, const Element& m) {
  if (m.dim() != s.dim()) {
    throw Error(ErrorKind::DimensionMismatch, m.to_string() + " is not in Z^" + std::to_string(s.dim()));
  }
  if (!s.generator_index(m)) throw Error(ErrorKind::MNotAtom, m.to_string() + " is not an atom of " + s.to_string());
}

std::int64_t extreme_length(const Semigroup& s, const Element& v, Formula formula, const SearchOptions& options) {
  return formula == Formula::Longest ? longest_factorization(s, v, options).length
                                     : shortest_factorization(s, v, options).length;
}

void finish(Verdict& v) {
  std::sort(v.checked.begin(), v.checked.end(),
            [](const CheckedElement& a, const CheckedElement& b) { return a.element < b.element; });
  v.counterexamples.clear();
  for (const auto& c : v.checked) {
    if (!c.agrees()) v.counterexamples.push_back(c);
  }
  v.holds = v.counterexamples.empty();
}

CheckedElement check_element(const Semigroup& s, const Element& t, const Element& m, Formula formula,
                             const SearchOptions& options) {
  return {t, extreme_length(s, t, formula, options), extreme_length(s, t - m, formula, options) + 1};
}

constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::min();

}  // namespace

std::vector<Element> candidate_atoms(const Semigroup& s, Formula formula) {
  if (!s.is_numerical()) return s.generators();
  return {formula == Formula::Longest ? s.generators().front() : s.generators().back()};
}

Verdict check_formula(const Semigroup& s, const Element& m, Formula formula, const SearchOptions& options,
                      CandidateScope scope) {
  require_atom(s, m);
  MinReplReport report = min_repl(s, m, options);
  return check_formula(s, report, formula, options, scope);
}

Verdict check_formula(const Semigroup& s, MinReplReport& report, Formula formula, const SearchOptions& options,
                      CandidateScope scope) {
  require_atom(s, report.m);
  if (!report.candidates_computed) candidate_sets(s, report);

  Verdict v;
  v.formula = formula;
  v.m = report.m;
  v.method = Method::MinReplCriterion;
  std::vector<Element> all;
  const std::vector<Element>* candidates = nullptr;
  if (scope == CandidateScope::Full) {
    all = report.evaluations;
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    candidates = &all;
    v.note = "checked all evaluations";
  } else if (formula == Formula::Longest) {
    candidates = report.n1_applicable ? &report.n1 : &report.m1;
    v.note = report.n1_applicable ? "checked N1" : "checked M1";
  } else {
    candidates = report.n2_applicable ? &report.n2 : &report.m2;
    v.note = report.n2_applicable ? "checked N2" : "checked M2";
  }
  for (const auto& t : *candidates) v.checked.push_back(check_element(s, t, report.m, formula, options));
  finish(v);
  return v;
}

Verdict embdim3_check(const Semigroup& s, Formula formula, const SearchOptions& options) {
  if (!s.is_numerical() || s.embedding_dimension() != 3) {
    throw Error(ErrorKind::NotEmbDim3, s.to_string() + " is not a numerical semigroup with three generators");
  }
  const auto& g = s.generators();
  const Element& m = formula == Formula::Longest ? g[0] : g[2];
  std::int64_t c = 1;
  while (!s.contains(c * g[1] - m)) ++c;

  Verdict v;
  v.formula = formula;
  v.m = m;
  v.method = Method::EmbDim3;
  v.note = (formula == Formula::Longest ? "alpha = " : "beta = ") + std::to_string(c);
  v.checked.push_back(check_element(s, c * g[1], m, formula, options));
  finish(v);
  return v;
}

std::int64_t exact_oracle_bound(const Semigroup& s, const Element& m, Formula formula) {
  if (!s.is_numerical()) {
    throw Error(ErrorKind::NotNumerical, s.to_string() + " has no exact scan range");
  }
  const auto& g = s.generators();
  std::int64_t n1 = g.front()[0];
  std::int64_t nk = g.back()[0];
  if (formula == Formula::Longest) {
    std::int64_t threshold = (n1 - 1) * nk;
    return m[0] == n1 ? threshold : std::max(threshold, n1 * m[0]);
  }
  std::int64_t prev = g.size() >= 2 ? g[g.size() - 2][0] : 0;
  std::int64_t threshold = (nk - 1) * prev;
  return m[0] == nk ? threshold : std::max(threshold, nk * m[0]);
}

Verdict oracle_scan(const Semigroup& s, const Element& m, Formula formula, const OracleOptions& options) {
  require_atom(s, m);
  Verdict v;
  v.formula = formula;
  v.m = m;
  v.method = Method::OracleScan;
  const bool longest = formula == Formula::Longest;
  auto better = [longest](std::int64_t a, std::int64_t b) { return b == kUnset || (longest ? a > b : a < b); };

  std::int64_t bound = 0;
  if (options.bound) {
    bound = *options.bound;
  } else if (s.is_numerical()) {
    bound = exact_oracle_bound(s, m, formula);
  } else if (options.allow_default) {
    bound = kDefaultAffineBound;
  } else {
    throw Error(ErrorKind::MissingBound, "no default scan range for " + s.to_string());
  }
  v.exact = s.is_numerical() && bound >= exact_oracle_bound(s, m, formula);
  if (s.is_numerical()) {
    v.note = v.exact ? "scan covers the exact range" : "scan range below the exact bound; evidence only";
  } else {
    v.note = "evidence over grade <= " + std::to_string(bound) + ", not a decision";
  }

  // Elements of S with grade <= bound, by nondecreasing grade, and the extreme
  // length of each by dynamic programming over the generators. shifted[i] is
  // the index of elements[i] - m, when that lies in S.
  std::vector<Element> elements;
  std::vector<std::int64_t> length;
  std::vector<std::ptrdiff_t> shifted;
  if (s.dim() == 1) {
    std::vector<std::int64_t> table(static_cast<std::size_t>(std::max<std::int64_t>(bound + 1, 0)), kUnset);
    if (bound >= 0) table[0] = 0;
    for (std::int64_t t = 1; t <= bound; ++t) {
      for (const auto& g : s.generators()) {
        if (g[0] > t || table[t - g[0]] == kUnset) continue;
        std::int64_t cand = table[t - g[0]] + 1;
        if (better(cand, table[t])) table[t] = cand;
      }
    }
    std::vector<std::ptrdiff_t> position(table.size(), -1);
    for (std::int64_t t = 0; t <= bound; ++t) {
      if (table[t] == kUnset) continue;
      position[t] = static_cast<std::ptrdiff_t>(elements.size());
      elements.push_back(Element{t});
      length.push_back(table[t]);
      shifted.push_back(t - m[0] >= 0 ? position[t - m[0]] : -1);
    }
  } else {
    std::vector<Element> pending{Element::zero(s.dim())};
    std::unordered_map<Element, std::size_t, ElementHash> index;
    std::unordered_map<Element, bool, ElementHash> seen{{pending.front(), true}};
    if (bound < 0) pending.clear();
    while (!pending.empty()) {
      Element e = std::move(pending.back());
      pending.pop_back();
      elements.push_back(e);
      for (const auto& g : s.generators()) {
        Element next = e + g;
        if (s.grade(next) <= bound && seen.emplace(next, true).second) pending.push_back(std::move(next));
      }
    }
    std::sort(elements.begin(), elements.end(), [&](const Element& a, const Element& b) {
      std::int64_t ga = s.grade(a);
      std::int64_t gb = s.grade(b);
      return ga != gb ? ga < gb : a < b;
    });
    length.assign(elements.size(), kUnset);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      index.emplace(elements[i], i);
      if (elements[i].is_zero()) {
        length[i] = 0;
        continue;
      }
      for (const auto& g : s.generators()) {
        auto it = index.find(elements[i] - g);
        if (it == index.end()) continue;
        std::int64_t cand = length[it->second] + 1;
        if (better(cand, length[i])) length[i] = cand;
      }
    }
    for (const auto& e : elements) {
      auto it = index.find(e - m);
      shifted.push_back(it == index.end() ? -1 : static_cast<std::ptrdiff_t>(it->second));
    }
  }

  // Compare in parallel slices; the final order is canonical regardless.
  unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::vector<CheckedElement>> parts(jobs);
  auto work = [&](unsigned part) {
    for (std::size_t i = part; i < elements.size(); i += jobs) {
      if (shifted[i] < 0) continue;
      parts[part].push_back({elements[i], length[i], length[static_cast<std::size_t>(shifted[i])] + 1});
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned p = 0; p < jobs; ++p) workers.emplace_back(work, p);
  }
  for (auto& part : parts) v.checked.insert(v.checked.end(), part.begin(), part.end());
  finish(v);
  return v;
}

}  // namespace sgfl
