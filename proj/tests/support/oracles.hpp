#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond plain data types, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

/// in[t] for 0 <= t <= bound: t is a nonnegative combination of gens.
inline std::vector<bool> sieve(const Vec& gens, std::int64_t bound) {
  std::vector<bool> in(static_cast<std::size_t>(bound + 1), false);
  in[0] = true;
  for (std::int64_t t = 1; t <= bound; ++t) {
    for (auto g : gens) {
      if (g <= t && in[t - g]) {
        in[t] = true;
        break;
      }
    }
  }
  return in;
}

struct Lengths {
  std::vector<std::int64_t> longest;   // -1 outside S
  std::vector<std::int64_t> shortest;  // -1 outside S
};

/// L and l for 0..bound by dynamic programming.
inline Lengths length_tables(const Vec& gens, std::int64_t bound) {
  Lengths out;
  out.longest.assign(static_cast<std::size_t>(bound + 1), -1);
  out.shortest.assign(static_cast<std::size_t>(bound + 1), -1);
  out.longest[0] = out.shortest[0] = 0;
  for (std::int64_t t = 1; t <= bound; ++t) {
    for (auto g : gens) {
      if (g > t || out.longest[t - g] < 0) continue;
      out.longest[t] = std::max(out.longest[t], out.longest[t - g] + 1);
      std::int64_t s = out.shortest[t - g] + 1;
      if (out.shortest[t] < 0 || s < out.shortest[t]) out.shortest[t] = s;
    }
  }
  return out;
}

/// Membership in an affine semigroup given a grading w positive on gens.
class AffineMembership {
 public:
  AffineMembership(std::vector<Vec> gens, Vec w) : gens_(std::move(gens)), w_(std::move(w)) {}

  std::int64_t grade(const Vec& v) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w_[i];
    return s;
  }

  bool operator()(const Vec& v) {
    if (std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; })) return true;
    if (grade(v) <= 0) return false;
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    bool found = false;
    for (const auto& g : gens_) {
      Vec r(v);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= g[i];
      if ((*this)(r)) {
        found = true;
        break;
      }
    }
    memo_[v] = found;
    return found;
  }

 private:
  std::vector<Vec> gens_;
  Vec w_;
  std::map<Vec, bool> memo_;
};

/// Every c with sum c_i g_i = v, found by scanning the box c_i <= w(v) / w(g_i).
inline std::vector<Vec> box_factorizations(const std::vector<Vec>& gens, const Vec& w, const Vec& v) {
  auto grade = [&](const Vec& x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * w[i];
    return s;
  };
  std::int64_t target = grade(v);
  std::vector<Vec> out;
  if (target < 0) return out;
  Vec c(gens.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == gens.size()) {
      Vec sum(v.size(), 0);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        for (std::size_t j = 0; j < v.size(); ++j) sum[j] += c[k] * gens[k][j];
      }
      if (sum == v) out.push_back(c);
      return;
    }
    std::int64_t cap = target / grade(gens[i]);
    for (std::int64_t k = 0; k <= cap; ++k) {
      c[i] = k;
      rec(i + 1);
    }
    c[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline std::vector<Vec> minimal(std::vector<Vec> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Vec> out;
  for (const auto& v : vs) {
    bool dominated = std::any_of(vs.begin(), vs.end(), [&](const Vec& u) { return u != v && leq(u, v); });
    if (!dominated) out.push_back(v);
  }
  return out;
}

/// Minimal c over gens minus m with value(c) - m in S, for numerical S with
/// gcd 1, by scanning a box. Coordinate i is bounded by the least k with
/// k g_i - m in S: any vector past it dominates the unit replaceable vector.
inline std::vector<Vec> box_min_repl(const Vec& gens, std::int64_t m) {
  Vec others;
  for (auto g : gens) {
    if (g != m) others.push_back(g);
  }
  std::int64_t top = 0;
  for (auto g : gens) top = std::max(top, g);
  std::int64_t bound = 4 * top * top + 4 * m;
  auto in = sieve(gens, bound);
  auto member = [&](std::int64_t t) { return t >= 0 && t <= bound && in[t]; };
  Vec cap(others.size());
  for (std::size_t i = 0; i < others.size(); ++i) {
    std::int64_t k = 1;
    while (!member(k * others[i] - m)) ++k;
    cap[i] = k;
  }
  std::vector<Vec> repl;
  Vec c(others.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t value) {
    if (i == others.size()) {
      if (member(value - m)) repl.push_back(c);
      return;
    }
    for (std::int64_t k = 0; k <= cap[i]; ++k) {
      c[i] = k;
      rec(i + 1, value + k * others[i]);
    }
    c[i] = 0;
  };
  rec(0, 0);
  return minimal(repl);
}

/// Minimal generators of the semigroup spanned by `raw`, ascending.
inline Vec minimize(Vec raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  Vec out;
  for (auto g : raw) {
    if (!sieve(out, g)[g]) out.push_back(g);
  }
  return out;
}

/// Seeded corpus of minimally generated numerical semigroups (gcd 1) with
/// n_1 <= max_first, n_k <= max_last and at most max_gens generators.
inline std::vector<Vec> numerical_corpus(std::uint64_t seed, std::size_t count, std::int64_t max_first = 12,
                                         std::int64_t max_last = 40, std::size_t max_gens = 5) {
  std::mt19937_64 rng(seed);
  std::vector<Vec> out;
  while (out.size() < count) {
    std::int64_t n1 = std::uniform_int_distribution<std::int64_t>(3, max_first)(rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(2, max_gens)(rng);
    Vec raw{n1};
    for (std::size_t i = 1; i < k; ++i) raw.push_back(std::uniform_int_distribution<std::int64_t>(n1 + 1, max_last)(rng));
    Vec gens = minimize(raw);
    std::int64_t g = 0;
    for (auto v : gens) g = std::gcd(g, v);
    if (g != 1 || gens.size() < 2 || gens.front() > max_first) continue;
    if (std::find(out.begin(), out.end(), gens) != out.end()) continue;
    out.push_back(gens);
  }
  return out;
}

/// All x in {0..max_coord}^m with x_0 = 0 satisfying the Kunz inequalities
/// x_a + x_b + d_{a,b} >= x_{a+b}, in lexicographic order.
inline std::vector<Vec> kunz_points(int m, std::int64_t max_coord) {
  std::vector<Vec> out;
  Vec x(m, 0);
  auto d = [m](int a, int b) -> std::int64_t { return a + b >= m ? 1 : 0; };
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      out.push_back(x);
      return;
    }
    for (std::int64_t v = 0; v <= max_coord; ++v) {
      x[i] = v;
      bool ok = true;
      for (int a = 1; a <= i && ok; ++a) {
        for (int b = a; b <= i && ok; ++b) {
          int s = (a + b) % m;
          if (s <= i && (a == i || b == i || s == i) && x[a] + x[b] + d(a, b) < x[s]) ok = false;
        }
      }
      if (ok) rec(i + 1);
    }
    x[i] = 0;
  };
  rec(1);
  return out;
}

}  // namespace oracle
