#include "sgfl/factorization.hpp"

#include <algorithm>
#include <limits>

#include "sgfl/error.hpp"

namespace sgfl {

namespace {

/// Returns k >= 0 with residual == k * g, if any.
std::optional<std::int64_t> nonnegative_multiple(const Element& residual, const Element& g) {
  std::optional<std::int64_t> k;
  for (std::size_t j = 0; j < g.dim(); ++j) {
    if (g[j] == 0) {
      if (residual[j] != 0) return std::nullopt;
      continue;
    }
    if (residual[j] % g[j] != 0) return std::nullopt;
    std::int64_t q = residual[j] / g[j];
    if (q < 0 || (k && *k != q)) return std::nullopt;
    k = q;
  }
  return k;
}

enum class Mode { All, Longest, Shortest };

/// Depth-first search over atoms in presentation order; each coordinate is
/// tried in increasing order, so complete vectors appear lexicographically.
class FactorizationSearch {
 public:
  FactorizationSearch(const Semigroup& s, Mode mode, const SearchOptions& options)
      : s_(s), mode_(mode), budget_(options.budget), k_(s.embedding_dimension()) {
    grades_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) grades_[i] = s.grade(s.generators()[i]);
    suffix_min_.assign(k_ + 1, std::numeric_limits<std::int64_t>::max());
    suffix_max_.assign(k_ + 1, 0);
    for (std::size_t i = k_; i-- > 0;) {
      suffix_min_[i] = std::min(suffix_min_[i + 1], grades_[i]);
      suffix_max_[i] = std::max(suffix_max_[i + 1], grades_[i]);
    }
  }

  void run(const Element& v) {
    if (v.dim() != s_.dim()) {
      throw Error(ErrorKind::DimensionMismatch, v.to_string() + " is not in Z^" + std::to_string(s_.dim()));
    }
    current_.assign(k_, 0);
    if (!s_.contains(v)) return;
    visit(0, v, 0);
  }

  std::vector<Exponents> all;
  std::optional<Exponents> best;
  std::int64_t best_length = 0;

 private:
  void tick() {
    if (++nodes_ > budget_) {
      throw Error(ErrorKind::BudgetExceeded, "factorization search exceeded " + std::to_string(budget_) + " nodes");
    }
  }

  bool pruned(const Element& residual, std::size_t i, std::int64_t partial) const {
    if (!best) return false;
    std::int64_t g = s_.grade(residual);
    if (mode_ == Mode::Longest) return partial + g / suffix_min_[i] <= best_length;
    if (mode_ == Mode::Shortest) {
      std::int64_t lower = partial + (g + suffix_max_[i] - 1) / suffix_max_[i];
      return lower >= best_length;
    }
    return false;
  }

  void record(std::int64_t length) {
    if (mode_ == Mode::All) {
      all.push_back(current_);
      return;
    }
    bool better = !best || (mode_ == Mode::Longest ? length > best_length : length < best_length);
    if (better) {
      best = current_;
      best_length = length;
    }
  }

  void visit(std::size_t i, const Element& residual, std::int64_t partial) {
    tick();
    const Element& g = s_.generators()[i];
    if (i + 1 == k_) {
      if (auto q = nonnegative_multiple(residual, g)) {
        current_[i] = *q;
        record(partial + *q);
        current_[i] = 0;
      }
      return;
    }
    Element r = residual;
    for (std::int64_t c = 0; s_.grade(r) >= 0; ++c) {
      if (s_.contains(r) && !pruned(r, i + 1, partial + c)) {
        current_[i] = c;
        visit(i + 1, r, partial + c);
      }
      r -= g;
    }
    current_[i] = 0;
  }

  const Semigroup& s_;
  Mode mode_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t k_;
  std::vector<std::int64_t> grades_;
  std::vector<std::int64_t> suffix_min_;
  std::vector<std::int64_t> suffix_max_;
  Exponents current_;
};

ExtremeFactorization extreme(const Semigroup& s, const Element& v, Mode mode, const SearchOptions& options) {
  FactorizationSearch search(s, mode, options);
  search.run(v);
  if (!search.best) throw Error(ErrorKind::NotInSemigroup, v.to_string() + " is not in " + s.to_string());
  return {search.best_length, *search.best};
}

}  // namespace

std::vector<Exponents> factorizations(const Semigroup& s, const Element& v, const SearchOptions& options) {
  FactorizationSearch search(s, Mode::All, options);
  search.run(v);
  return std::move(search.all);
}

LengthSummary length_summary(const Semigroup& s, const Element& v, const std::optional<Element>& m,
                             const SearchOptions& options) {
  std::optional<std::size_t> m_index;
  if (m) {
    m_index = s.generator_index(*m);
    if (!m_index) throw Error(ErrorKind::MNotAtom, m->to_string() + " is not an atom of " + s.to_string());
  }
  auto zs = factorizations(s, v, options);
  if (zs.empty()) throw Error(ErrorKind::NotInSemigroup, v.to_string() + " is not in " + s.to_string());

  LengthSummary out;
  out.element = v;
  out.longest = std::numeric_limits<std::int64_t>::min();
  out.shortest = std::numeric_limits<std::int64_t>::max();
  for (const auto& z : zs) {
    std::int64_t len = total_length(z);
    out.lengths.push_back(len);
    // zs is lexicographically sorted, so the first hit is the least witness.
    if (len > out.longest) {
      out.longest = len;
      out.witness_longest = z;
    }
    if (len < out.shortest) {
      out.shortest = len;
      out.witness_shortest = z;
    }
  }
  std::sort(out.lengths.begin(), out.lengths.end());
  out.lengths.erase(std::unique(out.lengths.begin(), out.lengths.end()), out.lengths.end());
  if (m_index) {
    bool in_longest = false;
    bool in_shortest = false;
    for (const auto& z : zs) {
      std::int64_t len = total_length(z);
      if (z[*m_index] > 0 && len == out.longest) in_longest = true;
      if (z[*m_index] > 0 && len == out.shortest) in_shortest = true;
    }
    out.has_m_in_longest = in_longest;
    out.has_m_in_shortest = in_shortest;
  }
  return out;
}

ExtremeFactorization longest_factorization(const Semigroup& s, const Element& v, const SearchOptions& options) {
  return extreme(s, v, Mode::Longest, options);
}

ExtremeFactorization shortest_factorization(const Semigroup& s, const Element& v, const SearchOptions& options) {
  return extreme(s, v, Mode::Shortest, options);
}

}  // namespace sgfl
